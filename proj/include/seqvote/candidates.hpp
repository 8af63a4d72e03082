#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "seqvote/bitset.hpp"
#include "seqvote/errors.hpp"

namespace seqvote {

/// Canonical index of a candidate within its CandidateSet.
struct Candidate {
  std::size_t index = 0;

  friend constexpr auto operator<=>(Candidate, Candidate) = default;
};

inline bool is_valid_candidate_name(std::string_view name) {
  if (name.empty())
    return false;
  for (char ch : name) {
    bool ok = (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
              (ch >= '0' && ch <= '9') || ch == '_';
    if (!ok)
      return false;
  }
  return true;
}

/// Ordered, non-empty list of distinct candidate names. The position of a
/// name is its canonical index.
class CandidateSet {
public:
  explicit CandidateSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
      throw InvalidProfileError("candidate set must not be empty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_valid_candidate_name(names_[i]))
        throw InvalidProfileError("invalid candidate name '" + names_[i] + "'");
      if (!index_.emplace(names_[i], i).second)
        throw InvalidProfileError("duplicate candidate name '" + names_[i] + "'");
    }
  }

  /// "A", "B", ... for small m; "C26", "C27", ... past the alphabet.
  static CandidateSet letters(std::size_t m) {
    std::vector<std::string> names;
    names.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
      names.push_back(i < 26 ? std::string(1, static_cast<char>('A' + i))
                             : "C" + std::to_string(i));
    return CandidateSet(std::move(names));
  }

  std::size_t size() const { return names_.size(); }

  const std::string &name(Candidate c) const { return names_.at(c.index); }
  const std::vector<std::string> &names() const { return names_; }

  std::optional<Candidate> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      return std::nullopt;
    return Candidate{it->second};
  }

  Candidate at(std::string_view name) const {
    if (auto c = find(name))
      return *c;
    throw UnknownCandidateError("unknown candidate '" + std::string(name) + "'");
  }

  bool contains(Candidate c) const { return c.index < names_.size(); }

  friend bool operator==(const CandidateSet &a, const CandidateSet &b) {
    return a.names_ == b.names_;
  }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A subset of the candidates 0..universe-1.
class CandidateSubset {
public:
  CandidateSubset() = default;
  explicit CandidateSubset(std::size_t universe) : bits_(universe) {}

  static CandidateSubset all(std::size_t universe) {
    CandidateSubset s(universe);
    s.bits_.set_all();
    return s;
  }

  static CandidateSubset from_bits(DynamicBitset bits) {
    CandidateSubset s;
    s.bits_ = std::move(bits);
    return s;
  }

  static CandidateSubset from_mask(std::size_t universe, std::uint64_t mask) {
    CandidateSubset s(universe);
    for (std::size_t i = 0; i < universe && i < 64; ++i)
      if ((mask >> i) & 1u)
        s.insert(Candidate{i});
    return s;
  }

  static CandidateSubset of(std::size_t universe, std::initializer_list<std::size_t> members) {
    CandidateSubset s(universe);
    for (auto i : members)
      s.insert(Candidate{i});
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Candidate c) const { return c.index < bits_.size() && bits_.test(c.index); }
  void insert(Candidate c) { bits_.set(c.index); }
  void erase(Candidate c) { bits_.reset(c.index); }

  std::vector<Candidate> members() const {
    std::vector<Candidate> out;
    bits_.for_each([&](std::size_t i) { out.push_back(Candidate{i}); });
    return out;
  }

  /// Low 64 members as a mask; callers guarantee universe <= 64.
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    bits_.for_each([&](std::size_t i) {
      if (i < 64)
        m |= std::uint64_t{1} << i;
    });
    return m;
  }

  bool is_subset_of(const CandidateSubset &o) const { return bits_.is_subset_of(o.bits_); }

  CandidateSubset &operator&=(const CandidateSubset &o) {
    bits_ &= o.bits_;
    return *this;
  }
  CandidateSubset &operator|=(const CandidateSubset &o) {
    bits_ |= o.bits_;
    return *this;
  }

  const DynamicBitset &bits() const { return bits_; }

  friend bool operator==(const CandidateSubset &, const CandidateSubset &) = default;

private:
  DynamicBitset bits_;
};

/// Space-separated names in declaration order, "-" for the empty set.
inline std::string format_subset(const CandidateSubset &s, const CandidateSet &c) {
  std::string out;
  for (auto x : s.members()) {
    if (!out.empty())
      out += ' ';
    out += c.name(x);
  }
  return out.empty() ? "-" : out;
}

} // namespace seqvote
