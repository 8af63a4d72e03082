#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqvote/bitset.hpp"
#include "seqvote/candidates.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/relation.hpp"

namespace seqvote {

inline constexpr std::uint64_t kMaxWeight = (std::uint64_t{1} << 31) - 1;

/// a * b, clamped to the uint64 range.
constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

/// A strict comparison "better > worse".
struct Comparison {
  Candidate better;
  Candidate worse;

  friend bool operator==(const Comparison &, const Comparison &) = default;
};

class PartialOrder;
PartialOrder transitive_close(std::span<const Comparison> comparisons, std::size_t m);

/// Transitively closed strict partial order over m candidates. Instances can
/// only be obtained closed: through transitive_close() or from a ranking.
class PartialOrder {
public:
  /// The empty order: every pair unknown.
  explicit PartialOrder(std::size_t m = 0) : rel_(m) {}

  /// Total order from a best-first ranking.
  static PartialOrder from_ranking(std::span<const Candidate> ranking) {
    const std::size_t m = ranking.size();
    std::vector<bool> seen(m, false);
    for (auto c : ranking) {
      if (c.index >= m || seen[c.index])
        throw InvalidProfileError("ranking is not a permutation of the candidates");
      seen[c.index] = true;
    }
    PartialOrder o(m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        o.rel_.set(ranking[a], ranking[b], Rel::Gt);
    return o;
  }

  std::size_t size() const { return rel_.size(); }

  Rel relation(Candidate x, Candidate y) const { return rel_.get(x, y); }
  bool prefers(Candidate x, Candidate y) const { return x != y && rel_.get(x, y) == Rel::Gt; }

  bool is_total() const { return rel_.complete(); }

  /// True iff every comparison of `coarser` also holds here.
  bool extends(const PartialOrder &coarser) const {
    if (coarser.size() != size())
      return false;
    auto mine = rel_.cells();
    auto theirs = coarser.rel_.cells();
    for (std::size_t k = 0; k < mine.size(); ++k)
      if (theirs[k] != Rel::Unknown && theirs[k] != mine[k])
        return false;
    return true;
  }

  /// Every strict comparison, pairs in canonical order.
  std::vector<Comparison> comparisons() const {
    std::vector<Comparison> out;
    for_each_pair(size(), [&](Candidate i, Candidate j) {
      switch (rel_.get(i, j)) {
      case Rel::Gt:
        out.push_back({i, j});
        break;
      case Rel::Lt:
        out.push_back({j, i});
        break;
      default:
        break;
      }
    });
    return out;
  }

  /// Successor sets: row x holds every y with x > y.
  std::vector<DynamicBitset> successor_rows() const {
    const std::size_t m = size();
    std::vector<DynamicBitset> succ(m, DynamicBitset(m));
    for (auto c : comparisons())
      succ[c.better.index].set(c.worse.index);
    return succ;
  }

  /// Transitive reduction (Hasse diagram) in canonical pair order.
  std::vector<Comparison> covers() const {
    const std::size_t m = size();
    auto succ = successor_rows();
    std::vector<DynamicBitset> pred(m, DynamicBitset(m));
    for (std::size_t x = 0; x < m; ++x)
      succ[x].for_each([&](std::size_t y) { pred[y].set(x); });
    std::vector<Comparison> out;
    for (auto c : comparisons()) {
      DynamicBitset between = succ[c.better.index];
      between &= pred[c.worse.index];
      if (between.none())
        out.push_back(c);
    }
    return out;
  }

  const PairwiseRelation &pairs() const { return rel_; }

  friend bool operator==(const PartialOrder &, const PartialOrder &) = default;

private:
  friend PartialOrder transitive_close(std::span<const Comparison>, std::size_t);

  PairwiseRelation rel_;
};

/// Minimal transitively closed order containing `comparisons`.
/// Throws CycleError when the comparisons admit no total extension and
/// UnknownCandidateError when an index is out of range.
inline PartialOrder transitive_close(std::span<const Comparison> comparisons, std::size_t m) {
  std::vector<DynamicBitset> direct(m, DynamicBitset(m));
  for (auto c : comparisons) {
    if (c.better.index >= m || c.worse.index >= m)
      throw UnknownCandidateError("comparison names a candidate outside the set");
    if (c.better == c.worse)
      throw CycleError("a candidate cannot be preferred to itself");
    direct[c.better.index].set(c.worse.index);
  }

  // Kahn's algorithm; leftover vertices lie on a cycle.
  std::vector<std::size_t> indegree(m, 0);
  for (std::size_t x = 0; x < m; ++x)
    direct[x].for_each([&](std::size_t y) { ++indegree[y]; });
  std::vector<std::size_t> topo;
  topo.reserve(m);
  for (std::size_t x = 0; x < m; ++x)
    if (indegree[x] == 0)
      topo.push_back(x);
  for (std::size_t head = 0; head < topo.size(); ++head)
    direct[topo[head]].for_each([&](std::size_t y) {
      if (--indegree[y] == 0)
        topo.push_back(y);
    });
  if (topo.size() != m)
    throw CycleError("preferences are cyclic and cannot be transitively closed");

  std::vector<DynamicBitset> reach(m, DynamicBitset(m));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const std::size_t x = *it;
    direct[x].for_each([&](std::size_t y) {
      reach[x].set(y);
      reach[x] |= reach[y];
    });
  }

  PartialOrder o(m);
  for (std::size_t x = 0; x < m; ++x)
    reach[x].for_each([&](std::size_t y) { o.rel_.set(Candidate{x}, Candidate{y}, Rel::Gt); });
  return o;
}

/// Name-based overload; unknown names raise UnknownCandidateError.
inline PartialOrder transitive_close(std::span<const std::pair<std::string, std::string>> pairs,
                                     const CandidateSet &candidates) {
  std::vector<Comparison> cs;
  cs.reserve(pairs.size());
  for (const auto &[better, worse] : pairs)
    cs.push_back({candidates.at(better), candidates.at(worse)});
  return transitive_close(cs, candidates.size());
}

/// A ranking of all candidates, best first.
class TotalOrder {
public:
  explicit TotalOrder(std::vector<Candidate> ranking) : ranking_(std::move(ranking)) {
    order_ = PartialOrder::from_ranking(ranking_);
  }

  std::span<const Candidate> ranking() const { return ranking_; }
  std::size_t size() const { return ranking_.size(); }
  const PartialOrder &as_partial() const { return order_; }

  friend bool operator==(const TotalOrder &a, const TotalOrder &b) { return a.ranking_ == b.ranking_; }

private:
  std::vector<Candidate> ranking_;
  PartialOrder order_;
};

/// A voter's (possibly incomplete) preferences and weight.
struct Vote {
  PartialOrder order;
  std::uint64_t weight = 1;

  Vote(PartialOrder o, std::uint64_t w) : order(std::move(o)), weight(w) {
    if (weight < 1 || weight > kMaxWeight)
      throw InvalidProfileError("vote weight must lie in [1, 2^31-1], got " + std::to_string(weight));
  }

  friend bool operator==(const Vote &, const Vote &) = default;
};

/// Weighted votes over a shared candidate set; the total weight is odd.
class Profile {
public:
  Profile(std::shared_ptr<const CandidateSet> candidates, std::vector<Vote> votes)
      : candidates_(std::move(candidates)), votes_(std::move(votes)) {
    if (!candidates_)
      throw InvalidProfileError("profile needs a candidate set");
    for (const auto &v : votes_) {
      if (v.order.size() != candidates_->size())
        throw InvalidProfileError("vote ranges over a different candidate set");
      total_ += v.weight;
    }
    if (total_ % 2 == 0)
      throw EvenTotalWeightError("total vote weight must be odd, got " + std::to_string(total_));
  }

  Profile(CandidateSet candidates, std::vector<Vote> votes)
      : Profile(std::make_shared<const CandidateSet>(std::move(candidates)), std::move(votes)) {}

  const CandidateSet &candidates() const { return *candidates_; }
  const std::shared_ptr<const CandidateSet> &candidates_ptr() const { return candidates_; }
  std::size_t size() const { return candidates_->size(); }

  std::span<const Vote> votes() const { return votes_; }
  std::uint64_t total_weight() const { return total_; }

  bool is_complete() const {
    for (const auto &v : votes_)
      if (!v.order.is_total())
        return false;
    return true;
  }

  /// Same candidate set, different votes.
  Profile with_votes(std::vector<Vote> votes) const { return Profile(candidates_, std::move(votes)); }

  friend bool operator==(const Profile &a, const Profile &b) {
    return *a.candidates_ == *b.candidates_ && a.votes_ == b.votes_;
  }

private:
  std::shared_ptr<const CandidateSet> candidates_;
  std::vector<Vote> votes_;
  std::uint64_t total_ = 0;
};

namespace detail {

struct ExtensionWalker {
  const PartialOrder &order;
  std::vector<std::vector<std::size_t>> succ;
  std::vector<std::size_t> indegree;
  std::vector<bool> placed;
  std::vector<Candidate> prefix;

  explicit ExtensionWalker(const PartialOrder &o)
      : order(o), succ(o.size()), indegree(o.size(), 0), placed(o.size(), false) {
    for (auto c : o.comparisons()) {
      succ[c.better.index].push_back(c.worse.index);
      ++indegree[c.worse.index];
    }
    prefix.reserve(o.size());
  }

  template <class Fn> void run(Fn &fn) {
    const std::size_t m = order.size();
    if (prefix.size() == m) {
      fn(std::span<const Candidate>(prefix));
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      if (placed[v] || indegree[v] != 0)
        continue;
      placed[v] = true;
      for (auto w : succ[v])
        --indegree[w];
      prefix.push_back(Candidate{v});
      run(fn);
      prefix.pop_back();
      for (auto w : succ[v])
        ++indegree[w];
      placed[v] = false;
    }
  }
};

} // namespace detail

/// Calls fn(std::span<const Candidate> ranking) for every total order
/// extending `o`, in lexicographic order of the ranking.
template <class Fn> void for_each_linear_extension(const PartialOrder &o, Fn &&fn) {
  detail::ExtensionWalker walker(o);
  walker.run(fn);
}

inline std::vector<TotalOrder> linear_extensions(const PartialOrder &o) {
  std::vector<TotalOrder> out;
  for_each_linear_extension(o, [&](std::span<const Candidate> r) {
    out.emplace_back(std::vector<Candidate>(r.begin(), r.end()));
  });
  return out;
}

/// Number of linear extensions of `o`, saturated at `cap`.
inline std::uint64_t count_linear_extensions(const PartialOrder &o,
                                             std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) {
  const std::size_t m = o.size();
  if (m <= 20) {
    // Subset DP over down-sets.
    std::vector<std::uint32_t> pred(m, 0);
    for (auto c : o.comparisons())
      pred[c.worse.index] |= std::uint32_t{1} << c.better.index;
    std::vector<std::uint64_t> ways(std::size_t{1} << m, 0);
    ways[0] = 1;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) {
      if (ways[s] == 0)
        continue;
      for (std::size_t v = 0; v < m; ++v) {
        const std::uint32_t bit = std::uint32_t{1} << v;
        if ((s & bit) || (pred[v] & ~s))
          continue;
        std::uint64_t &dst = ways[s | bit];
        dst = (cap - dst < ways[s]) ? cap : dst + ways[s];
      }
    }
    return std::min(ways[(std::size_t{1} << m) - 1], cap);
  }
  struct Stop {};
  std::uint64_t n = 0;
  try {
    for_each_linear_extension(o, [&](std::span<const Candidate>) {
      if (++n >= cap)
        throw Stop{};
    });
  } catch (const Stop &) {
    return cap;
  }
  return n;
}

/// Groups identical votes so that their extension lists are computed once.
/// `group_of[v]` indexes into `orders`.
struct VoteGroups {
  std::vector<PartialOrder> orders;
  std::vector<std::size_t> group_of;

  explicit VoteGroups(const Profile &p) {
    for (const auto &v : p.votes()) {
      std::size_t g = 0;
      while (g < orders.size() && !(orders[g] == v.order))
        ++g;
      if (g == orders.size())
        orders.push_back(v.order);
      group_of.push_back(g);
    }
  }
};

/// Number of profile completions, saturated at `cap`.
inline std::uint64_t count_profile_completions(const Profile &p,
                                               std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) {
  VoteGroups groups(p);
  std::vector<std::uint64_t> counts;
  for (const auto &o : groups.orders)
    counts.push_back(count_linear_extensions(o, cap));
  std::uint64_t total = 1;
  for (auto g : groups.group_of)
    total = std::min(saturating_mul(total, counts[g]), cap);
  return total;
}

/// Calls fn(const Profile&) for each completion: the cartesian product of
/// per-vote linear extensions, last vote varying fastest. Weights are kept.
template <class Fn> void for_each_profile_completion(const Profile &p, Fn &&fn) {
  VoteGroups groups(p);
  std::vector<std::vector<PartialOrder>> ext(groups.orders.size());
  for (std::size_t g = 0; g < groups.orders.size(); ++g)
    for_each_linear_extension(groups.orders[g],
                              [&](std::span<const Candidate> r) { ext[g].push_back(PartialOrder::from_ranking(r)); });

  const auto votes = p.votes();
  const std::size_t n = votes.size();
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<Vote> completed;
    completed.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
      completed.emplace_back(ext[groups.group_of[v]][digit[v]], votes[v].weight);
    fn(p.with_votes(std::move(completed)));

    std::size_t v = n;
    while (v > 0) {
      --v;
      if (++digit[v] < ext[groups.group_of[v]].size())
        break;
      digit[v] = 0;
      if (v == 0)
        return;
    }
    if (n == 0)
      return;
  }
}

inline std::vector<Profile> profile_completions(const Profile &p) {
  std::vector<Profile> out;
  for_each_profile_completion(p, [&](const Profile &c) { out.push_back(c); });
  return out;
}

/// U(P): each vote of weight k becomes k unit-weight copies.
inline Profile unweighted_expand(const Profile &p) {
  std::vector<Vote> out;
  for (const auto &v : p.votes())
    for (std::uint64_t i = 0; i < v.weight; ++i)
      out.emplace_back(v.order, 1);
  return p.with_votes(std::move(out));
}

/// A total extension of `o` that ranks `top` as high as `o` allows; ties
/// among the rest are broken by canonical index.
inline TotalOrder lift_to_top(const PartialOrder &o, Candidate top) {
  const std::size_t m = o.size();
  std::vector<std::size_t> indegree(m, 0);
  for (auto c : o.comparisons())
    ++indegree[c.worse.index];
  std::vector<bool> placed(m, false);
  std::vector<Candidate> ranking;
  while (ranking.size() < m) {
    std::size_t pick = m;
    if (!placed[top.index] && indegree[top.index] == 0) {
      pick = top.index;
    } else {
      // Only candidates above `top` (or anything once top is placed).
      for (std::size_t v = 0; v < m && pick == m; ++v)
        if (!placed[v] && indegree[v] == 0 && (placed[top.index] || o.prefers(Candidate{v}, top)))
          pick = v;
    }
    placed[pick] = true;
    ranking.push_back(Candidate{pick});
    for (std::size_t w = 0; w < m; ++w)
      if (o.prefers(Candidate{pick}, Candidate{w}))
        --indegree[w];
  }
  return TotalOrder(std::move(ranking));
}

/// Mirror image of lift_to_top: `bottom` is ranked as low as `o` allows.
inline TotalOrder sink_to_bottom(const PartialOrder &o, Candidate bottom) {
  const std::size_t m = o.size();
  std::vector<std::size_t> indegree(m, 0);
  for (auto c : o.comparisons())
    ++indegree[c.worse.index];
  std::vector<bool> placed(m, false);
  std::vector<Candidate> ranking;
  while (ranking.size() < m) {
    std::size_t pick = m;
    for (std::size_t v = 0; v < m && pick == m; ++v)
      if (!placed[v] && indegree[v] == 0 && v != bottom.index)
        pick = v;
    if (pick == m)
      pick = bottom.index;
    placed[pick] = true;
    ranking.push_back(Candidate{pick});
    for (std::size_t w = 0; w < m; ++w)
      if (o.prefers(Candidate{pick}, Candidate{w}))
        --indegree[w];
  }
  return TotalOrder(std::move(ranking));
}

} // namespace seqvote
