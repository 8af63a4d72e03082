#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "seqvote/bitset.hpp"
#include "seqvote/candidates.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/knockout.hpp"
#include "seqvote/majority.hpp"
#include "seqvote/model.hpp"

namespace seqvote {

inline constexpr std::size_t kDefaultMaxUnknownPairs = 20;

/// Vertices that reach every vertex along directed paths of `rows`.
/// Linear number of word-parallel floods: the last root of a covering
/// sequence of floods is the only candidate dominator.
inline DynamicBitset dominating_vertices(std::span<const DynamicBitset> rows) {
  const std::size_t m = rows.size();
  DynamicBitset none(m);
  if (m == 0)
    return none;
  auto flood = [&](std::size_t src, const DynamicBitset &blocked, std::span<const DynamicBitset> adj) {
    DynamicBitset seen(m);
    seen.set(src);
    DynamicBitset frontier = seen;
    while (frontier.any()) {
      DynamicBitset next(m);
      frontier.for_each([&](std::size_t v) { next |= adj[v]; });
      next.subtract(seen);
      next.subtract(blocked);
      seen |= next;
      frontier = std::move(next);
    }
    return seen;
  };
  DynamicBitset visited(m);
  std::size_t last = 0;
  for (std::size_t v = 0; v < m; ++v) {
    if (visited.test(v))
      continue;
    last = v;
    visited |= flood(v, visited, rows);
  }
  if (!flood(last, none, rows).all())
    return none;
  std::vector<DynamicBitset> reverse(m, DynamicBitset(m));
  for (std::size_t x = 0; x < m; ++x)
    rows[x].for_each([&](std::size_t y) { reverse[y].set(x); });
  return flood(last, none, reverse);
}

/// Candidates reaching every other candidate in a tournament; these are
/// exactly the candidates winning at least one agenda.
inline CandidateSubset top_cycle(const Tournament &t) {
  if (!t.is_complete())
    throw IncompleteGraphError("top cycle needs a complete majority graph");
  auto rows = t.out_rows();
  return CandidateSubset::from_bits(dominating_vertices(rows));
}

/// SC(G): candidates with m-1 outgoing edges.
inline CandidateSubset sc_graph(const MajorityGraph &g) {
  const std::size_t m = g.size();
  std::vector<std::size_t> wins(m, 0);
  for_each_pair(m, [&](Candidate i, Candidate j) {
    const Rel r = g.relation(i, j);
    if (r == Rel::Gt)
      ++wins[i.index];
    else if (r == Rel::Lt)
      ++wins[j.index];
  });
  CandidateSubset out(m);
  for (std::size_t x = 0; x < m; ++x)
    if (wins[x] + 1 == m)
      out.insert(Candidate{x});
  return out;
}

/// WC(G): candidates with no incoming edge.
inline CandidateSubset wc_graph(const MajorityGraph &g) {
  const std::size_t m = g.size();
  auto out = CandidateSubset::all(m);
  for_each_pair(m, [&](Candidate i, Candidate j) {
    const Rel r = g.relation(i, j);
    if (r == Rel::Gt)
      out.erase(j);
    else if (r == Rel::Lt)
      out.erase(i);
  });
  return out;
}

/// WP(G): candidates reaching everyone when unknown pairs may be oriented
/// either way.
inline CandidateSubset wp_graph(const MajorityGraph &g) {
  auto rows = g.out_rows(/*unknown_as_edge=*/true);
  return CandidateSubset::from_bits(dominating_vertices(rows));
}

/// SP(G): intersection of the top cycles of all completions of g.
inline CandidateSubset sp_graph(const MajorityGraph &g, std::size_t max_unknown = kDefaultMaxUnknownPairs) {
  if (g.unknown_count() > max_unknown)
    throw BudgetExceededError("sp_graph: " + std::to_string(g.unknown_count()) +
                              " unknown pairs exceed the bound of " + std::to_string(max_unknown));
  auto out = wp_graph(g);
  for_each_graph_completion(g, [&](const Tournament &t) {
    if (!out.empty())
      out &= top_cycle(t);
  });
  return out;
}

/// Candidates winning some balanced agenda of a tournament.
inline CandidateSubset balanced_winners(const Tournament &t) {
  KnockoutSolver solver(tournament_rows(t), /*balanced=*/true);
  return CandidateSubset::from_mask(t.size(), solver.winners());
}

/// Graph-level fair possible winners, weak (some completion) and strong
/// (every completion), over balanced agendas.
struct FairGraphSets {
  CandidateSubset fwp;
  CandidateSubset fsp;
};

inline FairGraphSets fair_possible_graph(const MajorityGraph &g, std::size_t max_unknown = kDefaultMaxUnknownPairs) {
  if (g.unknown_count() > max_unknown)
    throw BudgetExceededError("fair graph winners: " + std::to_string(g.unknown_count()) +
                              " unknown pairs exceed the bound of " + std::to_string(max_unknown));
  const std::size_t m = g.size();
  FairGraphSets out{CandidateSubset(m), CandidateSubset::all(m)};
  for_each_graph_completion(g, [&](const Tournament &t) {
    auto w = balanced_winners(t);
    out.fwp |= w;
    out.fsp &= w;
  });
  return out;
}

struct GraphWinnerSets {
  CandidateSubset wc;
  CandidateSubset sc;
  CandidateSubset wp;
  CandidateSubset sp;
  MajorityGraph source;
};

inline GraphWinnerSets graph_winner_sets(const MajorityGraph &g, std::size_t max_unknown = kDefaultMaxUnknownPairs) {
  return GraphWinnerSets{wc_graph(g), sc_graph(g), wp_graph(g), sp_graph(g, max_unknown), g};
}

} // namespace seqvote
