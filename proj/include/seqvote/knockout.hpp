#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "seqvote/agenda.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/majority.hpp"

namespace seqvote {

/// Tournament on at most 64 candidates: bit y of row x is set iff x beats y.
using TournamentRows = std::vector<std::uint64_t>;

inline TournamentRows tournament_rows(const Tournament &t) {
  if (t.size() > 64)
    throw BudgetExceededError("bitset tournaments support at most 64 candidates");
  if (!t.is_complete())
    throw IncompleteGraphError("tournament expected, majority graph has unknown pairs");
  TournamentRows rows(t.size(), 0);
  for_each_pair(t.size(), [&](Candidate i, Candidate j) {
    if (t.beats(i, j))
      rows[i.index] |= std::uint64_t{1} << j.index;
    else
      rows[j.index] |= std::uint64_t{1} << i.index;
  });
  return rows;
}

inline std::uint64_t full_mask(std::size_t m) {
  return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

/// Vertices from which every vertex is reachable, on <= 64 vertices.
inline std::uint64_t dominating_mask(const TournamentRows &rows) {
  const std::size_t m = rows.size();
  if (m == 0)
    return 0;
  auto flood = [&](std::size_t src, std::uint64_t blocked, const TournamentRows &adj) {
    std::uint64_t seen = std::uint64_t{1} << src;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1)
        next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~(seen | blocked);
      seen |= next;
      frontier = next;
    }
    return seen;
  };
  // The last flood root is the only possible dominator.
  std::uint64_t visited = 0;
  std::size_t last = 0;
  for (std::size_t v = 0; v < m; ++v) {
    if ((visited >> v) & 1u)
      continue;
    last = v;
    visited |= flood(v, visited, rows);
  }
  if (flood(last, 0, rows) != full_mask(m))
    return 0;
  TournamentRows reverse(m, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::uint64_t r = rows[x]; r; r &= r - 1)
      reverse[static_cast<std::size_t>(std::countr_zero(r))] |= std::uint64_t{1} << x;
  return flood(last, 0, reverse);
}

/// Which candidates win some agenda on a fixed tournament, by dynamic
/// programming over candidate subsets (each subset is one subtree). Agenda
/// witnesses are rebuilt from the same table.
class KnockoutSolver {
public:
  KnockoutSolver(TournamentRows rows, bool balanced)
      : rows_(std::move(rows)), window_(rows_.empty() ? 1 : rows_.size()), balanced_(balanced) {
    if (rows_.empty() || rows_.size() > 30)
      throw BudgetExceededError("knockout dynamic programming supports 1..30 candidates");
  }

  std::uint64_t winners() { return winners(full_mask(rows_.size()), 0); }

  /// A canonical agenda won by `c`, or nothing if `c` cannot win.
  std::optional<Agenda> agenda_for(Candidate c) {
    const std::uint64_t all = full_mask(rows_.size());
    if (!((winners(all, 0) >> c.index) & 1u))
      return std::nullopt;
    return build(all, 0, c.index);
  }

private:
  bool fits(std::uint64_t set, std::size_t depth) const {
    return !balanced_ || window_.fits(static_cast<std::size_t>(std::popcount(set)), depth);
  }

  template <class Fn> void for_each_split(std::uint64_t set, std::size_t depth, Fn &&fn) {
    const std::uint64_t low = set & (~set + 1);
    const std::uint64_t rest = set ^ low;
    for (std::uint64_t sub = 0; sub != rest; sub = (sub - rest) & rest) {
      const std::uint64_t left = low | sub;
      const std::uint64_t right = set ^ left;
      if (fits(left, depth + 1) && fits(right, depth + 1))
        if (!fn(left, right))
          return;
    }
  }

  std::uint64_t winners(std::uint64_t set, std::size_t depth) {
    if (!fits(set, depth))
      return 0;
    if ((set & (set - 1)) == 0)
      return set;
    const std::uint64_t key = (set << 6) | (balanced_ ? depth : 0);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    std::uint64_t out = 0;
    for_each_split(set, depth, [&](std::uint64_t left, std::uint64_t right) {
      const std::uint64_t wl = winners(left, depth + 1);
      const std::uint64_t wr = wl ? winners(right, depth + 1) : 0;
      for (std::uint64_t x = wl; x; x &= x - 1)
        if (rows_[static_cast<std::size_t>(std::countr_zero(x))] & wr)
          out |= x & (~x + 1);
      for (std::uint64_t y = wr; y; y &= y - 1)
        if (rows_[static_cast<std::size_t>(std::countr_zero(y))] & wl)
          out |= y & (~y + 1);
      return out != set;
    });
    memo_.emplace(key, out);
    return out;
  }

  Agenda build(std::uint64_t set, std::size_t depth, std::size_t target) {
    if ((set & (set - 1)) == 0)
      return Agenda::leaf(Candidate{target});
    std::optional<Agenda> found;
    for_each_split(set, depth, [&](std::uint64_t left, std::uint64_t right) {
      const std::uint64_t wl = winners(left, depth + 1);
      const std::uint64_t wr = winners(right, depth + 1);
      const std::uint64_t bit = std::uint64_t{1} << target;
      if ((wl & bit) && (rows_[target] & wr)) {
        const auto y = static_cast<std::size_t>(std::countr_zero(rows_[target] & wr));
        found = Agenda::join(build(left, depth + 1, target), build(right, depth + 1, y));
      } else if ((wr & bit) && (rows_[target] & wl)) {
        const auto y = static_cast<std::size_t>(std::countr_zero(rows_[target] & wl));
        found = Agenda::join(build(left, depth + 1, y), build(right, depth + 1, target));
      }
      return !found.has_value();
    });
    return *found;
  }

  TournamentRows rows_;
  detail::BalanceWindow window_;
  bool balanced_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

} // namespace seqvote
