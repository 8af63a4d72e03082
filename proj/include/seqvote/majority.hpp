#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "seqvote/bitset.hpp"
#include "seqvote/candidates.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/model.hpp"
#include "seqvote/relation.hpp"

namespace seqvote {

/// Possibly incomplete majority relation: Gt at (A, B) means A beats B.
class MajorityGraph {
public:
  MajorityGraph(std::shared_ptr<const CandidateSet> candidates, PairwiseRelation rel)
      : candidates_(std::move(candidates)), rel_(std::move(rel)) {
    if (!candidates_ || candidates_->size() != rel_.size())
      throw InvalidProfileError("majority relation does not match the candidate set");
  }

  MajorityGraph(CandidateSet candidates, PairwiseRelation rel)
      : MajorityGraph(std::make_shared<const CandidateSet>(std::move(candidates)), std::move(rel)) {}

  /// Fully unknown graph.
  explicit MajorityGraph(std::shared_ptr<const CandidateSet> candidates)
      : MajorityGraph(candidates, PairwiseRelation(candidates ? candidates->size() : 0)) {}

  const CandidateSet &candidates() const { return *candidates_; }
  const std::shared_ptr<const CandidateSet> &candidates_ptr() const { return candidates_; }
  std::size_t size() const { return rel_.size(); }

  Rel relation(Candidate x, Candidate y) const { return rel_.get(x, y); }
  bool beats(Candidate x, Candidate y) const { return x != y && rel_.get(x, y) == Rel::Gt; }

  bool is_complete() const { return rel_.complete(); }
  std::size_t unknown_count() const { return rel_.unknown_count(); }

  const PairwiseRelation &pairs() const { return rel_; }

  /// Row x: every y with x -> y. With `unknown_as_edge`, unknown pairs count
  /// as edges in both directions.
  std::vector<DynamicBitset> out_rows(bool unknown_as_edge = false) const {
    const std::size_t m = size();
    std::vector<DynamicBitset> rows(m, DynamicBitset(m));
    for_each_pair(m, [&](Candidate i, Candidate j) {
      const Rel r = rel_.get(i, j);
      if (r == Rel::Gt || (unknown_as_edge && r == Rel::Unknown))
        rows[i.index].set(j.index);
      if (r == Rel::Lt || (unknown_as_edge && r == Rel::Unknown))
        rows[j.index].set(i.index);
    });
    return rows;
  }

  friend bool operator==(const MajorityGraph &a, const MajorityGraph &b) {
    return *a.candidates_ == *b.candidates_ && a.rel_ == b.rel_;
  }

private:
  std::shared_ptr<const CandidateSet> candidates_;
  PairwiseRelation rel_;
};

/// A majority graph with every pair oriented.
using Tournament = MajorityGraph;

/// M(P): A -> B iff the votes declaring A > B carry strictly more than half
/// of the total weight.
inline MajorityGraph majority_graph(const Profile &p) {
  const std::size_t m = p.size();
  const std::size_t pairs = pair_count(m);
  std::vector<std::uint64_t> for_lo(pairs, 0), for_hi(pairs, 0);
  for (const auto &v : p.votes()) {
    auto cells = v.order.pairs().cells();
    for (std::size_t k = 0; k < pairs; ++k) {
      if (cells[k] == Rel::Gt)
        for_lo[k] += v.weight;
      else if (cells[k] == Rel::Lt)
        for_hi[k] += v.weight;
    }
  }
  const std::uint64_t total = p.total_weight();
  PairwiseRelation rel(m);
  auto cells = rel.cells();
  for (std::size_t k = 0; k < pairs; ++k) {
    if (2 * for_lo[k] > total)
      cells[k] = Rel::Gt;
    else if (2 * for_hi[k] > total)
      cells[k] = Rel::Lt;
  }
  return MajorityGraph(p.candidates_ptr(), std::move(rel));
}

/// Calls fn(const Tournament&) for each of the 2^u orientations of the u
/// unknown pairs. Orientation bits follow canonical pair order, with bit 0
/// meaning the lower-indexed candidate wins; masks are visited ascending.
template <class Fn> void for_each_graph_completion(const MajorityGraph &g, Fn &&fn) {
  std::vector<std::size_t> unknown;
  auto base_cells = g.pairs().cells();
  for (std::size_t k = 0; k < base_cells.size(); ++k)
    if (base_cells[k] == Rel::Unknown)
      unknown.push_back(k);
  if (unknown.size() >= 63)
    throw BudgetExceededError("too many unknown pairs to enumerate graph completions");
  const std::uint64_t n = std::uint64_t{1} << unknown.size();
  PairwiseRelation rel = g.pairs();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    auto cells = rel.cells();
    for (std::size_t b = 0; b < unknown.size(); ++b)
      cells[unknown[b]] = ((mask >> b) & 1u) ? Rel::Lt : Rel::Gt;
    fn(MajorityGraph(g.candidates_ptr(), rel));
  }
}

inline std::vector<Tournament> graph_completions(const MajorityGraph &g) {
  std::vector<Tournament> out;
  for_each_graph_completion(g, [&](const Tournament &t) { out.push_back(t); });
  return out;
}

/// One line per pair in canonical order: "A > B", "A < B" or "A ? B".
inline std::string render_graph(const MajorityGraph &g) {
  std::string out;
  const auto &c = g.candidates();
  for_each_pair(g.size(), [&](Candidate i, Candidate j) {
    const Rel r = g.relation(i, j);
    const char *op = r == Rel::Gt ? " > " : r == Rel::Lt ? " < " : " ? ";
    out += c.name(i) + op + c.name(j) + '\n';
  });
  return out;
}

} // namespace seqvote
