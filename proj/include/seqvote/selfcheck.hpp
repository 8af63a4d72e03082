#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "seqvote/graphwin.hpp"
#include "seqvote/io.hpp"
#include "seqvote/majority.hpp"
#include "seqvote/model.hpp"
#include "seqvote/oracle.hpp"
#include "seqvote/profwin.hpp"
#include "seqvote/random.hpp"

namespace seqvote {

struct SelfCheckConfig {
  std::size_t candidates = 4;
  std::size_t votes = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t max_weight = 5;
  std::uint64_t budget = 1'000'000;
  bool compare_oracle = true;
};

struct ProfileCheck {
  std::size_t relations = 0;
  std::size_t witnesses = 0;
  std::vector<std::string> violations;
};

/// Every profile-level inclusion and equality between the winner notions,
/// the solvers against the definitional oracle, and every emitted witness.
inline ProfileCheck check_profile(const Profile &p, std::uint64_t budget = kDefaultBudget,
                                  bool compare_oracle = true) {
  ProfileCheck out;
  const auto &names = p.candidates();
  auto expect = [&](bool ok, const std::string &what) {
    ++out.relations;
    if (!ok)
      out.violations.push_back(what);
  };
  auto fmt = [&](const CandidateSubset &s) { return "{" + format_subset(s, names) + "}"; };
  auto subset = [&](const CandidateSubset &a, const CandidateSubset &b, const std::string &what) {
    expect(a.is_subset_of(b), what + ": " + fmt(a) + " vs " + fmt(b));
  };
  auto equal = [&](const CandidateSubset &a, const CandidateSubset &b, const std::string &what) {
    expect(a == b, what + ": " + fmt(a) + " vs " + fmt(b));
  };

  const MajorityGraph graph = majority_graph(p);
  const Profile expanded = unweighted_expand(p);
  const MajorityGraph graph_u = majority_graph(expanded);
  expect(graph == graph_u, "M(P) = M(U(P))");

  SolveOptions opt;
  opt.budget = budget;
  const auto wc = condorcet_report(p, true, false, opt);
  const auto sc = condorcet_report(p, false, false, opt);
  const auto fwc = condorcet_report(p, true, true, opt);
  const auto wp = wp_profile(p, opt);
  const auto sp = sp_profile(p, opt);
  const auto fwp = fwp_profile(p, opt);
  const auto fsp = fsp_profile(p, opt);

  const auto wp_g = wp_graph(graph);
  const auto sp_g = sp_graph(graph);
  equal(wc.winners, wc_graph(graph), "WC(P) = WC(M(P))");
  equal(sc.winners, sc_graph(graph), "SC(P) = SC(M(P))");
  subset(wp.winners, wp_g, "WP(P) <= WP(M(P))");
  subset(sp_g, sp.winners, "SP(M(P)) <= SP(P)");
  equal(wc.winners, wc_profile(expanded), "WC(P) = WC(U(P))");
  equal(sc.winners, sc_profile(expanded), "SC(P) = SC(U(P))");
  subset(fwp.winners, wp.winners, "FWP(P) <= WP(P)");
  subset(fsp.winners, sp.winners, "FSP(P) <= SP(P)");
  subset(sc.winners, sp.winners, "SC(P) <= SP(P)");
  subset(sp.winners, wp.winners, "SP(P) <= WP(P)");
  subset(sc.winners, wc.winners, "SC(P) <= WC(P)");
  subset(wc.winners, wp.winners, "WC(P) <= WP(P)");
  if (p.is_complete()) {
    equal(wc.winners, sc.winners, "complete: WC = SC");
    equal(wp.winners, sp.winners, "complete: WP = SP");
    expect(sc.winners.count() <= 1, "complete: |SC| <= 1");
  }

  auto check_witnesses = [&](const WinnerReport &r, bool fair) {
    expect(r.witnesses.size() == r.winners.count(), std::string(notion_name(r.notion)) + ": one witness per winner");
    for (const auto &w : r.witnesses) {
      ++out.witnesses;
      expect(r.winners.contains(w.candidate) && verify_witness(w, p, fair),
             std::string(notion_name(r.notion)) + " witness for " + names.name(w.candidate));
    }
  };
  check_witnesses(wc, false);
  check_witnesses(fwc, true);
  check_witnesses(wp, false);
  check_witnesses(fwp, true);

  if (compare_oracle) {
    try {
      const auto plain = oracle_profile(p, false);
      const auto fair = oracle_profile(p, true);
      equal(wc.winners, plain.wc, "WC(P) against oracle");
      equal(sc.winners, plain.sc, "SC(P) against oracle");
      equal(wp.winners, plain.wp, "WP(P) against oracle");
      equal(sp.winners, plain.sp, "SP(P) against oracle");
      equal(fair.wc, wc.winners, "FWC(P) = WC(P) (oracle)");
      equal(fair.sc, sc.winners, "FSC(P) = SC(P) (oracle)");
      equal(fwp.winners, fair.wp, "FWP(P) against oracle");
      equal(fsp.winners, fair.sp, "FSP(P) against oracle");
      subset(plain.wp, oracle_graph(graph, false).wp, "oracle WP(P) <= oracle WP(M(P))");
    } catch (const BudgetExceededError &) {
      // Too large for the oracle; the structural relations above still hold.
    }
  }
  return out;
}

namespace detail {

inline bool still_fails(const Profile &p, std::uint64_t budget, bool oracle) {
  try {
    return !check_profile(p, budget, oracle).violations.empty();
  } catch (const Error &) {
    return false;
  }
}

/// Greedy shrinking: drop votes, lower weights by 2, drop covering
/// comparisons; keep any change that still violates a relation.
inline Profile shrink_counterexample(Profile p, std::uint64_t budget, bool oracle) {
  auto attempt = [&](std::vector<Vote> votes) -> std::optional<Profile> {
    try {
      Profile q = p.with_votes(std::move(votes));
      if (still_fails(q, budget, oracle))
        return q;
    } catch (const Error &) {
    }
    return std::nullopt;
  };
  for (bool improved = true; improved;) {
    improved = false;
    const std::vector<Vote> votes(p.votes().begin(), p.votes().end());
    for (std::size_t i = 0; i < votes.size() && !improved; ++i) {
      for (std::size_t j = i; j < votes.size() && !improved; ++j) {
        auto fewer = votes;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(j));
        if (j != i)
          fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        if (fewer.empty())
          continue;
        if (auto q = attempt(std::move(fewer))) {
          p = *q;
          improved = true;
        }
      }
    }
    for (std::size_t i = 0; i < votes.size() && !improved; ++i) {
      if (votes[i].weight >= 3) {
        auto lighter = votes;
        lighter[i].weight -= 2;
        if (auto q = attempt(std::move(lighter))) {
          p = *q;
          improved = true;
        }
      }
    }
    for (std::size_t i = 0; i < votes.size() && !improved; ++i) {
      const auto covers = votes[i].order.covers();
      for (std::size_t drop = 0; drop < covers.size() && !improved; ++drop) {
        std::vector<Comparison> kept;
        for (std::size_t k = 0; k < covers.size(); ++k)
          if (k != drop)
            kept.push_back(covers[k]);
        auto looser = votes;
        looser[i].order = transitive_close(kept, p.size());
        if (auto q = attempt(std::move(looser))) {
          p = *q;
          improved = true;
        }
      }
    }
  }
  return p;
}

} // namespace detail

struct SelfCheckResult {
  std::size_t trials = 0;
  std::size_t skipped = 0; // over the search budget
  std::size_t relations = 0;
  std::size_t witnesses = 0;
  std::vector<std::string> violations;
  std::optional<Profile> counterexample;

  bool passed() const { return violations.empty(); }
};

/// Samples `trials` random weighted incomplete profiles and checks every
/// relation of check_profile(). Profiles over the search budget are skipped
/// and counted. Stops at the first violating profile and shrinks it. Output is a deterministic function of the configuration.
inline SelfCheckResult run_selfcheck(const SelfCheckConfig &cfg, std::ostream *log = nullptr) {
  SelfCheckResult result;
  Rng rng(cfg.seed);
  if (log)
    *log << "selfcheck: candidates=" << cfg.candidates << " votes=" << cfg.votes << " trials=" << cfg.trials
         << " seed=" << cfg.seed << '\n';
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Profile p = random_profile(rng, cfg.candidates, cfg.votes, cfg.max_weight);
    ++result.trials;
    ProfileCheck check;
    try {
      check = check_profile(p, cfg.budget, cfg.compare_oracle);
    } catch (const BudgetExceededError &) {
      ++result.skipped;
      continue;
    }
    result.relations += check.relations;
    result.witnesses += check.witnesses;
    if (!check.violations.empty()) {
      result.counterexample = detail::shrink_counterexample(p, cfg.budget, cfg.compare_oracle);
      result.violations = check_profile(*result.counterexample, cfg.budget, cfg.compare_oracle).violations;
      if (result.violations.empty())
        result.violations = check.violations;
      if (log) {
        *log << "trial " << t << " violates:\n";
        for (const auto &v : result.violations)
          *log << "  " << v << '\n';
        *log << "counterexample:\n" << render_profile(*result.counterexample);
      }
      break;
    }
  }
  if (log)
    *log << "trials: " << result.trials << "\nskipped over budget: " << result.skipped
         << "\nrelations checked: " << result.relations
         << "\nwitnesses verified: " << result.witnesses << "\nresult: " << (result.passed() ? "pass" : "FAIL")
         << '\n';
  return result;
}

} // namespace seqvote
