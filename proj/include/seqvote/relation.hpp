#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "seqvote/candidates.hpp"

namespace seqvote {

/// Outcome of a pair (X, Y): Gt means X > Y.
enum class Rel : std::uint8_t { Unknown, Gt, Lt };

constexpr Rel flip(Rel r) {
  switch (r) {
  case Rel::Gt:
    return Rel::Lt;
  case Rel::Lt:
    return Rel::Gt;
  default:
    return Rel::Unknown;
  }
}

constexpr std::size_t pair_count(std::size_t m) { return m * (m - (m > 0 ? 1 : 0)) / 2; }

/// Position of the pair (i, j), i < j, in lexicographic pair order
/// (0,1), (0,2), ..., (0,m-1), (1,2), ...
constexpr std::size_t pair_index(std::size_t m, std::size_t i, std::size_t j) {
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

/// Calls fn(Candidate lo, Candidate hi) for every pair in canonical order.
template <class Fn> void for_each_pair(std::size_t m, Fn &&fn) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      fn(Candidate{i}, Candidate{j});
}

/// Three-valued antisymmetric relation over m candidates, one cell per
/// unordered pair.
class PairwiseRelation {
public:
  PairwiseRelation() = default;
  explicit PairwiseRelation(std::size_t m) : m_(m), cells_(pair_count(m), Rel::Unknown) {}

  std::size_t size() const { return m_; }

  Rel get(Candidate x, Candidate y) const {
    assert(x != y && x.index < m_ && y.index < m_);
    if (x.index < y.index)
      return cells_[pair_index(m_, x.index, y.index)];
    return flip(cells_[pair_index(m_, y.index, x.index)]);
  }

  void set(Candidate x, Candidate y, Rel r) {
    assert(x != y && x.index < m_ && y.index < m_);
    if (x.index < y.index)
      cells_[pair_index(m_, x.index, y.index)] = r;
    else
      cells_[pair_index(m_, y.index, x.index)] = flip(r);
  }

  std::size_t unknown_count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), Rel::Unknown));
  }
  bool complete() const { return unknown_count() == 0; }

  /// Cells in canonical pair order, oriented lower index first.
  std::span<const Rel> cells() const { return cells_; }
  std::span<Rel> cells() { return cells_; }

  friend bool operator==(const PairwiseRelation &, const PairwiseRelation &) = default;

private:
  std::size_t m_ = 0;
  std::vector<Rel> cells_;
};

} // namespace seqvote
