#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"

using namespace seqvote;
using namespace seqvote::testing;

TEST(MajorityGraph, MixedProfileHasSingleEdge) {
  const auto g = majority_graph(mixed_profile());
  const auto &c = g.candidates();
  EXPECT_EQ(g.relation(c.at("A"), c.at("B")), Rel::Gt);
  EXPECT_EQ(g.relation(c.at("A"), c.at("C")), Rel::Unknown);
  EXPECT_EQ(g.relation(c.at("B"), c.at("C")), Rel::Unknown);
  EXPECT_EQ(g.unknown_count(), 2u);
  EXPECT_EQ(g, graph_of(3, {"AB"}));
  EXPECT_EQ(render_graph(g), "A > B\nA ? C\nB ? C\n");
}

TEST(MajorityGraph, StrictMajorityOfTotalWeight) {
  // A>C is declared by weight 1 of 5 only; C>B by 2 of 5
  const auto g = majority_graph(mixed_profile());
  EXPECT_FALSE(g.beats(Candidate{0}, Candidate{2}));
  EXPECT_FALSE(g.beats(Candidate{2}, Candidate{1}));
  // exactly half is impossible with odd totals; 3 of 5 suffices
  const auto p = parse_profile("candidates: A B\nvote 3: A>B\nvote 2:\n");
  EXPECT_TRUE(majority_graph(p).beats(Candidate{0}, Candidate{1}));
  const auto q = parse_profile("candidates: A B\nvote 2: A>B\nvote 3:\n");
  EXPECT_EQ(majority_graph(q).unknown_count(), 1u);
}

TEST(MajorityGraph, LonePartialVote) {
  const auto g = majority_graph(lone_partial_vote());
  EXPECT_EQ(g, graph_of(3, {"AB"}));
  EXPECT_EQ(render_graph(g), "A > B\nA ? C\nB ? C\n");
}

TEST(MajorityGraph, CompleteProfileGivesTournament) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_complete_profile(rng, 1 + uniform_below(rng, 6), 1 + 2 * uniform_below(rng, 4));
    EXPECT_TRUE(majority_graph(p).is_complete());
  }
}

TEST(GraphCompletions, Counts) {
  EXPECT_EQ(graph_completions(majority_graph(mixed_profile())).size(), 4u);
  EXPECT_EQ(graph_completions(graph_of(3, {"AB", "BC", "CA"})).size(), 1u);
  EXPECT_EQ(graph_completions(graph_of(3, {})).size(), 8u);
  EXPECT_EQ(graph_completions(graph_of(4, {})).size(), 64u);
}

TEST(GraphCompletions, DistinctTournamentsExtendingBase) {
  for (const auto &g : all_graphs(3)) {
    const auto all = graph_completions(g);
    ASSERT_EQ(all.size(), std::size_t{1} << g.unknown_count());
    std::set<std::string> seen;
    for (const auto &t : all) {
      ASSERT_TRUE(t.is_complete());
      for_each_pair(3, [&](Candidate i, Candidate j) {
        if (g.relation(i, j) != Rel::Unknown) {
          EXPECT_EQ(t.relation(i, j), g.relation(i, j));
        }
      });
      seen.insert(render_graph(t));
    }
    EXPECT_EQ(seen.size(), all.size());
  }
}

TEST(GraphCompletions, RefusesHugeEnumerations) {
  EXPECT_THROW(for_each_graph_completion(graph_of(12, {}), [](const Tournament &) {}), BudgetExceededError);
}

TEST(MajorityProperties, UnweightedExpansionKeepsGraph) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_profile(rng, 1 + uniform_below(rng, 5), 4, 6);
    EXPECT_EQ(majority_graph(p), majority_graph(unweighted_expand(p)));
  }
}

TEST(MajorityProperties, ProfileCompletionsInduceGraphCompletions) {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_profile(rng, 1 + uniform_below(rng, 4), 3, 5);
    const auto g = majority_graph(p);
    std::set<std::string> graph_side;
    for (const auto &t : graph_completions(g))
      graph_side.insert(render_graph(t));
    for (const auto &c : profile_completions(p)) {
      const auto t = majority_graph(c);
      ASSERT_TRUE(t.is_complete());
      EXPECT_TRUE(graph_side.count(render_graph(t))) << render_profile(p);
    }
  }
}
