#include <gtest/gtest.h>

#include <limits>

#include "test_util.hpp"

using namespace seqvote;
using namespace seqvote::testing;

namespace {

Agenda parse(std::string_view s, std::size_t m) { return parse_agenda(s, CandidateSet::letters(m)); }

std::string round_trip(std::string_view s, std::size_t m) {
  return render_agenda(parse(s, m), CandidateSet::letters(m));
}

} // namespace

TEST(Evaluate, CondorcetWinnerTakesEveryAgenda) {
  const auto g = graph_of(3, {"AB", "AC", "BC"});
  EXPECT_EQ(evaluate(parse("((A,B),C)", 3), g), Candidate{0});
  for (const auto &a : enumerate_agendas(3, false))
    EXPECT_EQ(evaluate(a, g), Candidate{0});
}

TEST(Evaluate, CycleDependsOnAgenda) {
  const auto g = graph_of(3, {"AB", "BC", "CA"});
  EXPECT_EQ(evaluate(parse("((A,B),C)", 3), g), Candidate{2});
  EXPECT_EQ(evaluate(parse("((A,C),B)", 3), g), Candidate{1});
  EXPECT_EQ(evaluate(parse("((B,C),A)", 3), g), Candidate{0});
}

TEST(Evaluate, SingleLeaf) { EXPECT_EQ(evaluate(Agenda::leaf(Candidate{0}), graph_of(1, {})), Candidate{0}); }

TEST(Evaluate, UndeterminedContestThrows) {
  const auto g = majority_graph(lone_partial_vote());
  EXPECT_THROW(evaluate(parse("((A,C),B)", 3), g), IncompleteGraphError);
  // A meets only B and C, and A?C is open
  EXPECT_THROW(evaluate(parse("((A,B),C)", 3), g), IncompleteGraphError);
}

TEST(Evaluate, OnlyReachedContestsMatter) {
  // C beats both A and B, so A?B never needs deciding when A and B meet C first
  const auto g = graph_of(4, {"CA", "CB", "CD", "DA", "DB"});
  EXPECT_EQ(evaluate(parse("((A,C),(B,D))", 4), g), Candidate{2});
}

TEST(Evaluate, WrongSpanThrows) {
  const auto g = graph_of(3, {"AB", "AC", "BC"});
  const auto two = Agenda::join(Agenda::leaf(Candidate{0}), Agenda::leaf(Candidate{1}));
  EXPECT_THROW(evaluate(two, g), MissingCandidateError);
  EXPECT_THROW(evaluate(Agenda::join(two, Agenda::leaf(Candidate{0})), g), DuplicateLeafError);
  EXPECT_THROW(evaluate(Agenda::join(two, Agenda::leaf(Candidate{5})), g), UnknownCandidateError);
}

TEST(Evaluate, ChildSwapsDoNotMatter) {
  Rng rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + uniform_below(rng, 8);
    const auto t = random_tournament(rng, m);
    const auto a = random_agenda(rng, m);
    EXPECT_EQ(evaluate(a.canonical(), t), evaluate(a, t));
    EXPECT_TRUE(top_cycle(t).contains(evaluate(a, t)));
  }
}

TEST(Balanced, Examples) {
  EXPECT_TRUE(parse("((A,B),C)", 3).is_balanced());
  EXPECT_TRUE(parse("((A,B),(C,D))", 4).is_balanced());
  EXPECT_FALSE(parse("(((A,B),C),D)", 4).is_balanced());
  EXPECT_TRUE(parse("(((A,B),C),(D,E))", 5).is_balanced());
  EXPECT_FALSE(parse("((((A,B),C),D),E)", 5).is_balanced());
  EXPECT_TRUE(Agenda::leaf(Candidate{0}).is_balanced());
  const auto d = parse("(((A,B),C),D)", 4).depth_profile();
  EXPECT_EQ(d.min_depth, 1u);
  EXPECT_EQ(d.max_depth, 3u);
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_agendas(1, false).size(), 1u);
  EXPECT_EQ(enumerate_agendas(2, false).size(), 1u);
  EXPECT_EQ(enumerate_agendas(3, false).size(), 3u);
  EXPECT_EQ(enumerate_agendas(3, true).size(), 3u);
  EXPECT_EQ(enumerate_agendas(4, false).size(), 15u);
  EXPECT_EQ(enumerate_agendas(4, true).size(), 3u);
  EXPECT_EQ(enumerate_agendas(5, false).size(), 105u);
}

TEST(Enumerate, MatchesBruteForceSets) {
  for (std::size_t m = 1; m <= 6; ++m) {
    for (bool balanced : {false, true}) {
      const auto expected = brute_agenda_strings(m, balanced);
      std::set<std::string> got;
      std::size_t n = 0;
      for_each_agenda(m, balanced, [&](const Agenda &a) {
        ++n;
        EXPECT_EQ(a, a.canonical());
        EXPECT_TRUE(!balanced || a.is_balanced());
        got.insert(render_agenda(a, CandidateSet::letters(m)));
      });
      EXPECT_EQ(n, got.size()) << "duplicates for m=" << m;
      EXPECT_EQ(got, expected) << "m=" << m << " balanced=" << balanced;
      EXPECT_EQ(canonical_agenda_count(m, balanced), expected.size());
    }
  }
}

TEST(Enumerate, CountFormula) {
  // (2m-3)!! for unrestricted trees
  std::uint64_t dfact = 1;
  for (std::size_t m = 2; m <= 18; ++m) {
    if (m > 2)
      dfact *= 2 * m - 3;
    EXPECT_EQ(canonical_agenda_count(m, false), dfact) << m;
  }
  EXPECT_EQ(canonical_agenda_count(1, false), 1u);
  // balanced counts from the brute enumeration above, m = 7 and 8
  EXPECT_EQ(canonical_agenda_count(7, true), enumerate_agendas(7, true).size());
  EXPECT_EQ(canonical_agenda_count(8, true), 315u);
  // 35!! no longer fits in 64 bits
  EXPECT_EQ(canonical_agenda_count(19, false), std::numeric_limits<std::uint64_t>::max());
  EXPECT_EQ(canonical_agenda_count(200, false), std::numeric_limits<std::uint64_t>::max());
}

TEST(Enumerate, RejectsOutOfRange) {
  EXPECT_THROW(enumerate_agendas(0, false), BudgetExceededError);
  EXPECT_THROW(for_each_agenda(64, true, [](const Agenda &) {}), BudgetExceededError);
}

TEST(Halving, IsBalancedAndCanonical) {
  for (std::size_t m = 1; m <= 40; ++m) {
    const auto a = halving_agenda(m);
    EXPECT_TRUE(a.is_balanced()) << m;
    EXPECT_EQ(a, a.canonical());
    EXPECT_NO_THROW(a.check_spans(m));
  }
}

TEST(ParseAgenda, RoundTripAndCanonicalForm) {
  EXPECT_EQ(round_trip("((A,B),C)", 3), "((A,B),C)");
  EXPECT_EQ(round_trip(" ( C , ( B ,A ) ) ", 3), "((A,B),C)");
  EXPECT_EQ(round_trip("(A,(C,B))", 3), "(A,(B,C))");
  EXPECT_EQ(round_trip("((D,C),(B,A))", 4), "((A,B),(C,D))");
  EXPECT_EQ(round_trip("A", 1), "A");
  CandidateSet named({"alice", "bob_2"});
  EXPECT_EQ(render_agenda(parse_agenda("(bob_2,alice)", named), named), "(alice,bob_2)");
}

TEST(ParseAgenda, Errors) {
  EXPECT_THROW(parse("((A,A),B)", 3), DuplicateLeafError);
  EXPECT_THROW(parse("(A,B)", 3), MissingCandidateError);
  EXPECT_THROW(parse("((A,B),X)", 3), UnknownCandidateError);
  EXPECT_THROW(parse("((A,B),C", 3), SyntaxError);
  EXPECT_THROW(parse("((A,B),C))", 3), SyntaxError);
  EXPECT_THROW(parse("(A B)", 2), SyntaxError);
  EXPECT_THROW(parse("", 1), SyntaxError);
}

TEST(ParseAgenda, RandomRoundTrip) {
  Rng rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + uniform_below(rng, 10);
    const auto names = CandidateSet::letters(m);
    const auto a = random_agenda(rng, m);
    EXPECT_EQ(parse_agenda(render_agenda(a, names), names), a.canonical());
  }
}
