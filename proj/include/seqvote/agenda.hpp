#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqvote/candidates.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/majority.hpp"
#include "seqvote/model.hpp"

namespace seqvote {

struct LeafDepthProfile {
  std::size_t min_depth = 0;
  std::size_t max_depth = 0;
};

/// Binary knockout tree. Nodes are stored in post-order with the root last;
/// an internal node refers to its children by position.
class Agenda {
public:
  struct Node {
    std::int32_t left = -1;
    std::int32_t right = -1;
    Candidate leaf{};

    bool is_leaf() const { return left < 0; }
    friend bool operator==(const Node &, const Node &) = default;
  };

  static Agenda leaf(Candidate c) {
    Agenda a;
    a.nodes_.push_back(Node{-1, -1, c});
    return a;
  }

  /// (a, b): the winners of `a` and `b` meet at the new root.
  static Agenda join(const Agenda &a, const Agenda &b) {
    Agenda out;
    out.nodes_ = a.nodes_;
    const auto offset = static_cast<std::int32_t>(a.nodes_.size());
    for (auto n : b.nodes_) {
      if (!n.is_leaf()) {
        n.left += offset;
        n.right += offset;
      }
      out.nodes_.push_back(n);
    }
    out.nodes_.push_back(Node{offset - 1, static_cast<std::int32_t>(out.nodes_.size()) - 1, {}});
    return out;
  }

  /// Trusted construction from a post-order node list.
  static Agenda from_nodes(std::vector<Node> nodes) {
    Agenda a;
    a.nodes_ = std::move(nodes);
    return a;
  }

  std::span<const Node> nodes() const { return nodes_; }
  std::size_t root() const { return nodes_.size() - 1; }

  std::size_t leaf_count() const { return (nodes_.size() + 1) / 2; }

  /// Leaves left to right.
  std::vector<Candidate> leaves() const {
    std::vector<Candidate> out;
    for (const auto &n : nodes_)
      if (n.is_leaf())
        out.push_back(n.leaf);
    return out;
  }

  /// Depth of every node, counted in edges from the root.
  std::vector<std::size_t> depths() const {
    std::vector<std::size_t> d(nodes_.size(), 0);
    for (std::size_t i = nodes_.size(); i-- > 0;) {
      const auto &n = nodes_[i];
      if (!n.is_leaf()) {
        d[static_cast<std::size_t>(n.left)] = d[i] + 1;
        d[static_cast<std::size_t>(n.right)] = d[i] + 1;
      }
    }
    return d;
  }

  LeafDepthProfile depth_profile() const {
    auto d = depths();
    LeafDepthProfile p{static_cast<std::size_t>(-1), 0};
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!nodes_[i].is_leaf())
        continue;
      p.min_depth = std::min(p.min_depth, d[i]);
      p.max_depth = std::max(p.max_depth, d[i]);
    }
    return p;
  }

  bool is_balanced() const {
    auto p = depth_profile();
    return p.max_depth - p.min_depth <= 1;
  }

  /// Same tree with each node's children ordered by their smallest leaf.
  Agenda canonical() const {
    return canonical_at(root()).first;
  }

  /// Throws unless the leaves are exactly candidates 0..m-1, once each.
  void check_spans(std::size_t m) const {
    std::vector<bool> seen(m, false);
    for (auto c : leaves()) {
      if (c.index >= m)
        throw UnknownCandidateError("agenda leaf outside the candidate set");
      if (seen[c.index])
        throw DuplicateLeafError("candidate appears more than once in the agenda");
      seen[c.index] = true;
    }
    for (std::size_t i = 0; i < m; ++i)
      if (!seen[i])
        throw MissingCandidateError("agenda does not contain every candidate");
  }

  friend bool operator==(const Agenda &, const Agenda &) = default;

private:
  std::pair<Agenda, Candidate> canonical_at(std::size_t i) const {
    const auto &n = nodes_[i];
    if (n.is_leaf())
      return {Agenda::leaf(n.leaf), n.leaf};
    auto l = canonical_at(static_cast<std::size_t>(n.left));
    auto r = canonical_at(static_cast<std::size_t>(n.right));
    if (r.second < l.second)
      std::swap(l, r);
    return {Agenda::join(l.first, r.first), l.second};
  }

  std::vector<Node> nodes_;
};

/// Winner of the knockout tree on `g`. Throws IncompleteGraphError when a
/// contest it reaches is undetermined.
inline Candidate evaluate(const Agenda &t, const MajorityGraph &g) {
  t.check_spans(g.size());
  auto nodes = t.nodes();
  std::vector<Candidate> winner(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto &n = nodes[i];
    if (n.is_leaf()) {
      winner[i] = n.leaf;
      continue;
    }
    const Candidate a = winner[static_cast<std::size_t>(n.left)];
    const Candidate b = winner[static_cast<std::size_t>(n.right)];
    switch (g.relation(a, b)) {
    case Rel::Gt:
      winner[i] = a;
      break;
    case Rel::Lt:
      winner[i] = b;
      break;
    default:
      throw IncompleteGraphError("contest " + g.candidates().name(a) + " vs " + g.candidates().name(b) +
                                 " is undetermined");
    }
  }
  return winner.back();
}

inline bool is_balanced(const Agenda &t) { return t.is_balanced(); }

namespace detail {

/// Size window for a subtree rooted at `depth` in a balanced tree with m
/// leaves: all leaves must sit at depth floor(log2 m) or one deeper.
struct BalanceWindow {
  std::size_t floor_log = 0;

  explicit BalanceWindow(std::size_t m) : floor_log(static_cast<std::size_t>(std::bit_width(m)) - 1) {}

  bool fits(std::size_t leaves, std::size_t depth) const {
    if (depth > floor_log + 1)
      return false;
    const std::uint64_t upper = std::uint64_t{1} << (floor_log + 1 - depth);
    const std::uint64_t lower = depth >= floor_log ? 1 : std::uint64_t{1} << (floor_log - depth);
    return leaves >= lower && leaves <= upper;
  }
};

class AgendaGenerator {
public:
  AgendaGenerator(std::size_t m, bool balanced) : window_(m), balanced_(balanced) {}

  template <class Fn> void run(std::uint64_t set, Fn &&fn) {
    gen(set, 0, [&] { fn(Agenda::from_nodes(stack_)); });
  }

private:
  bool fits(std::uint64_t set, std::size_t depth) const {
    return !balanced_ || window_.fits(static_cast<std::size_t>(std::popcount(set)), depth);
  }

  void gen(std::uint64_t set, std::size_t depth, const std::function<void()> &k) {
    if (!fits(set, depth))
      return;
    const std::uint64_t low = set & (~set + 1);
    if (set == low) {
      stack_.push_back(Agenda::Node{-1, -1, Candidate{static_cast<std::size_t>(std::countr_zero(set))}});
      k();
      stack_.pop_back();
      return;
    }
    const std::uint64_t rest = set ^ low;
    // Left part always holds the smallest candidate; ascending submasks.
    for (std::uint64_t sub = 0;; sub = (sub - rest) & rest) {
      if (sub == rest)
        break;
      const std::uint64_t left = low | sub;
      const std::uint64_t right = set ^ left;
      if (fits(left, depth + 1) && fits(right, depth + 1)) {
        gen(left, depth + 1, [&] {
          const auto lroot = static_cast<std::int32_t>(stack_.size()) - 1;
          gen(right, depth + 1, [&] {
            const auto rroot = static_cast<std::int32_t>(stack_.size()) - 1;
            stack_.push_back(Agenda::Node{lroot, rroot, {}});
            k();
            stack_.pop_back();
          });
        });
      }
    }
  }

  BalanceWindow window_;
  bool balanced_;
  std::vector<Agenda::Node> stack_;
};

} // namespace detail

/// Calls fn(const Agenda&) once per agenda up to child swaps: every yielded
/// tree is canonical. With `balanced_only`, only balanced agendas.
template <class Fn> void for_each_agenda(std::size_t m, bool balanced_only, Fn &&fn) {
  if (m == 0 || m > 63)
    throw BudgetExceededError("agenda enumeration supports 1..63 candidates");
  detail::AgendaGenerator gen(m, balanced_only);
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  gen.run(all, fn);
}

inline std::vector<Agenda> enumerate_agendas(std::size_t m, bool balanced_only) {
  std::vector<Agenda> out;
  for_each_agenda(m, balanced_only, [&](const Agenda &a) { out.push_back(a); });
  return out;
}

inline std::vector<Agenda> enumerate_agendas(const CandidateSet &c, bool balanced_only) {
  return enumerate_agendas(c.size(), balanced_only);
}

/// Number of canonical agendas on m leaves, saturated at UINT64_MAX.
inline std::uint64_t canonical_agenda_count(std::size_t m, bool balanced_only) {
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  if (m == 0)
    return 0;
  std::vector<std::vector<std::uint64_t>> binom(m + 1);
  for (std::size_t n = 0; n <= m; ++n) {
    binom[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k)
      binom[n][k] = (kMax - binom[n - 1][k - 1] < binom[n - 1][k]) ? kMax : binom[n - 1][k - 1] + binom[n - 1][k];
  }
  detail::BalanceWindow window(m);
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, std::size_t)> count = [&](std::size_t s, std::size_t depth) {
    if (balanced_only && !window.fits(s, depth))
      return std::uint64_t{0};
    if (s == 1)
      return std::uint64_t{1};
    const auto key = std::make_pair(s, balanced_only ? depth : 0);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
    std::uint64_t total = 0;
    for (std::size_t a = 1; a < s; ++a) {
      std::uint64_t ways = saturating_mul(binom[s - 1][a - 1], count(a, depth + 1));
      ways = saturating_mul(ways, count(s - a, depth + 1));
      total = (kMax - total < ways) ? kMax : total + ways;
    }
    memo.emplace(key, total);
    return total;
  };
  return count(m, 0);
}

/// A balanced canonical agenda obtained by halving the candidate list.
inline Agenda halving_agenda(std::size_t m) {
  std::function<Agenda(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) {
    if (hi - lo == 1)
      return Agenda::leaf(Candidate{lo});
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    return Agenda::join(build(lo, mid), build(mid, hi));
  };
  return build(0, m);
}

namespace detail {

class AgendaParser {
public:
  AgendaParser(std::string_view text, const CandidateSet &c) : text_(text), c_(c) {}

  Agenda parse() {
    Agenda a = node();
    skip_ws();
    if (pos_ != text_.size())
      fail("trailing characters");
    return a;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw SyntaxError("agenda: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ch)
      fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  Agenda node() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      Agenda l = node();
      expect(',');
      Agenda r = node();
      expect(')');
      return Agenda::join(l, r);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      fail("expected candidate or '('");
    return Agenda::leaf(c_.at(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const CandidateSet &c_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses `node := candidate | '(' node ',' node ')'` and returns the
/// canonical form. Every candidate must appear exactly once.
inline Agenda parse_agenda(std::string_view text, const CandidateSet &c) {
  Agenda a = detail::AgendaParser(text, c).parse();
  a.check_spans(c.size());
  return a.canonical();
}

inline std::string render_agenda(const Agenda &t, const CandidateSet &c) {
  std::function<std::string(std::size_t)> render = [&](std::size_t i) -> std::string {
    const auto &n = t.nodes()[i];
    if (n.is_leaf())
      return c.name(n.leaf);
    return "(" + render(static_cast<std::size_t>(n.left)) + "," + render(static_cast<std::size_t>(n.right)) + ")";
  };
  return render(t.root());
}

} // namespace seqvote
