#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "test_util.hpp"

using namespace seqvote;
using namespace seqvote::testing;

namespace {

std::vector<Candidate> cands(std::initializer_list<std::size_t> xs) {
  std::vector<Candidate> out;
  for (auto x : xs)
    out.push_back(Candidate{x});
  return out;
}

// Reachability by Floyd-Warshall on the raw comparisons.
std::vector<std::vector<bool>> naive_closure(const std::vector<Comparison> &cs, std::size_t m) {
  std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
  for (auto c : cs)
    r[c.better.index][c.worse.index] = true;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (r[i][k] && r[k][j])
          r[i][j] = true;
  return r;
}

} // namespace

TEST(TransitiveClose, ChainImpliesEnds) {
  const Comparison cs[] = {{Candidate{0}, Candidate{1}}, {Candidate{1}, Candidate{2}}};
  auto o = transitive_close(cs, 3);
  EXPECT_TRUE(o.prefers(Candidate{0}, Candidate{2}));
  EXPECT_EQ(o.relation(Candidate{2}, Candidate{0}), Rel::Lt);
  EXPECT_TRUE(o.is_total());
}

TEST(TransitiveClose, EmptyStaysUnknown) {
  auto o = transitive_close(std::span<const Comparison>{}, 3);
  EXPECT_EQ(o.pairs().unknown_count(), 3u);
  EXPECT_EQ(o, PartialOrder(3));
}

TEST(TransitiveClose, RejectsCycles) {
  const Comparison two[] = {{Candidate{0}, Candidate{1}}, {Candidate{1}, Candidate{0}}};
  EXPECT_THROW(transitive_close(two, 2), CycleError);
  const Comparison three[] = {
      {Candidate{0}, Candidate{1}}, {Candidate{1}, Candidate{2}}, {Candidate{2}, Candidate{0}}};
  EXPECT_THROW(transitive_close(three, 3), CycleError);
  const Comparison self[] = {{Candidate{1}, Candidate{1}}};
  EXPECT_THROW(transitive_close(self, 3), CycleError);
}

TEST(TransitiveClose, RejectsUnknownNames) {
  CandidateSet c({"A", "B"});
  const std::pair<std::string, std::string> ok[] = {{"A", "B"}};
  EXPECT_TRUE(transitive_close(ok, c).prefers(Candidate{0}, Candidate{1}));
  const std::pair<std::string, std::string> bad[] = {{"A", "Z"}};
  EXPECT_THROW(transitive_close(bad, c), UnknownCandidateError);
}

TEST(TransitiveClose, MatchesFloydWarshallOnRandomDags) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + uniform_below(rng, 7);
    const auto rank = random_ranking(rng, m);
    std::vector<Comparison> cs;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (uniform_below(rng, 3) == 0)
          cs.push_back({rank[a], rank[b]});
    const auto o = transitive_close(cs, m);
    const auto ref = naive_closure(cs, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        ASSERT_EQ(o.prefers(Candidate{i}, Candidate{j}), ref[i][j]);
    // covers() is a basis: closing it gives the order back
    EXPECT_EQ(transitive_close(o.covers(), m), o);
  }
}

TEST(LinearExtensions, SingleComparisonOverThree) {
  const Comparison cs[] = {{Candidate{0}, Candidate{1}}};
  const auto ext = linear_extensions(transitive_close(cs, 3));
  ASSERT_EQ(ext.size(), 3u);
  EXPECT_EQ(ext[0], TotalOrder(cands({0, 1, 2})));
  EXPECT_EQ(ext[1], TotalOrder(cands({0, 2, 1})));
  EXPECT_EQ(ext[2], TotalOrder(cands({2, 0, 1})));
}

TEST(LinearExtensions, TotalOrderHasOne) {
  const auto o = PartialOrder::from_ranking(cands({2, 0, 3, 1}));
  const auto ext = linear_extensions(o);
  ASSERT_EQ(ext.size(), 1u);
  EXPECT_EQ(ext[0].as_partial(), o);
}

TEST(LinearExtensions, EqualsFilteredPermutations) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + uniform_below(rng, 6);
    const auto o = random_partial_order(rng, m);
    std::vector<TotalOrder> expected;
    std::vector<Candidate> perm = cands({});
    for (std::size_t i = 0; i < m; ++i)
      perm.push_back(Candidate{i});
    do {
      auto t = PartialOrder::from_ranking(perm);
      if (t.extends(o))
        expected.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto got = linear_extensions(o);
    ASSERT_EQ(got, expected);
    EXPECT_EQ(count_linear_extensions(o), expected.size());
    for (const auto &t : got)
      EXPECT_TRUE(t.as_partial().extends(o));
  }
}

TEST(LinearExtensions, CountIsCapped) {
  EXPECT_EQ(count_linear_extensions(PartialOrder(8)), 40320u);
  EXPECT_EQ(count_linear_extensions(PartialOrder(8), 1000), 1000u);
  // beyond the subset DP range the count falls back to capped enumeration
  EXPECT_EQ(count_linear_extensions(PartialOrder(22), 5000), 5000u);
  std::vector<Candidate> r;
  for (std::size_t i = 0; i < 22; ++i)
    r.push_back(Candidate{21 - i});
  EXPECT_EQ(count_linear_extensions(PartialOrder::from_ranking(r)), 1u);
}

TEST(Profile, RejectsEvenTotal) {
  CandidateSet c({"A", "B"});
  std::vector<Vote> votes;
  votes.emplace_back(PartialOrder(2), 2);
  EXPECT_THROW(Profile(c, votes), EvenTotalWeightError);
}

TEST(Profile, RejectsBadWeights) {
  EXPECT_THROW(Vote(PartialOrder(2), 0), InvalidProfileError);
  EXPECT_THROW(Vote(PartialOrder(2), kMaxWeight + 1), InvalidProfileError);
  EXPECT_NO_THROW(Vote(PartialOrder(2), kMaxWeight));
}

TEST(Profile, RejectsMismatchedVote) {
  std::vector<Vote> votes;
  votes.emplace_back(PartialOrder(3), 1);
  EXPECT_THROW(Profile(CandidateSet::letters(2), votes), InvalidProfileError);
}

TEST(Profile, CandidateNames) {
  EXPECT_THROW(CandidateSet({"A", "A"}), InvalidProfileError);
  EXPECT_THROW(CandidateSet({"A", "b-c"}), InvalidProfileError);
  EXPECT_THROW(CandidateSet(std::vector<std::string>{}), InvalidProfileError);
  auto c = CandidateSet::letters(28);
  EXPECT_EQ(c.name(Candidate{25}), "Z");
  EXPECT_EQ(c.name(Candidate{27}), "C27");
}

TEST(Completions, ExampleCounts) {
  EXPECT_EQ(count_profile_completions(lone_partial_vote()), 3u);
  // 1 * 3 * 2: B>A leaves C anywhere, A>B with C>B leaves only A?C
  EXPECT_EQ(count_profile_completions(mixed_profile()), 6u);
  EXPECT_EQ(profile_completions(mixed_profile()).size(), 6u);
}

TEST(Completions, CountIsProductAndEveryCompletionExtends) {
  Rng rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = random_profile(rng, 1 + uniform_below(rng, 4), 3, 4);
    std::uint64_t product = 1;
    for (const auto &v : p.votes())
      product *= linear_extensions(v.order).size();
    const auto all = profile_completions(p);
    ASSERT_EQ(all.size(), product);
    EXPECT_EQ(count_profile_completions(p), product);
    for (const auto &c : all) {
      ASSERT_TRUE(c.is_complete());
      for (std::size_t i = 0; i < c.votes().size(); ++i) {
        EXPECT_TRUE(c.votes()[i].order.extends(p.votes()[i].order));
        EXPECT_EQ(c.votes()[i].weight, p.votes()[i].weight);
      }
    }
    // distinct
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
      EXPECT_FALSE(all[i] == all[i + 1]);
  }
}

TEST(Unweighted, ExpandsWeights) {
  const auto u = unweighted_expand(mixed_profile());
  EXPECT_EQ(u.votes().size(), 5u);
  EXPECT_EQ(u.total_weight(), 5u);
  for (const auto &v : u.votes())
    EXPECT_EQ(v.weight, 1u);
  EXPECT_EQ(u.votes()[1].order, u.votes()[2].order);
}

TEST(LiftAndSink, PlaceCandidateAsFarAsAllowed) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + uniform_below(rng, 6);
    const auto o = random_partial_order(rng, m);
    const Candidate x{uniform_below(rng, m)};
    const auto up = lift_to_top(o, x);
    const auto down = sink_to_bottom(o, x);
    ASSERT_TRUE(up.as_partial().extends(o));
    ASSERT_TRUE(down.as_partial().extends(o));
    for (std::size_t y = 0; y < m; ++y) {
      if (y == x.index)
        continue;
      // x is above y unless the vote forces the opposite
      EXPECT_EQ(up.as_partial().prefers(x, Candidate{y}), !o.prefers(Candidate{y}, x));
      EXPECT_EQ(down.as_partial().prefers(Candidate{y}, x), !o.prefers(x, Candidate{y}));
    }
  }
}
