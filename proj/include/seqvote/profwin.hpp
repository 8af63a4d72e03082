#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "seqvote/agenda.hpp"
#include "seqvote/candidates.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/graphwin.hpp"
#include "seqvote/knockout.hpp"
#include "seqvote/majority.hpp"
#include "seqvote/model.hpp"
#include "seqvote/notion.hpp"

namespace seqvote {

/// Default cap on estimated completions x canonical agendas.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// A completion of the profile and an agenda under which `candidate` wins.
struct Witness {
  Candidate candidate;
  Profile completion;
  Agenda agenda;
};

enum class Method {
  Fast,   // graph-level characterisation
  Search, // exact search over profile completions
  Oracle  // definitional enumeration
};

struct WinnerReport {
  Notion notion = Notion::WC;
  CandidateSubset winners;
  std::vector<Witness> witnesses; // ascending candidate order
  Method method = Method::Fast;
};

struct SolveOptions {
  std::uint64_t budget = kDefaultBudget;
  bool witnesses = true;
};

/// WC(P) = WC(M(P)).
inline CandidateSubset wc_profile(const Profile &p) { return wc_graph(majority_graph(p)); }

/// SC(P) = SC(M(P)).
inline CandidateSubset sc_profile(const Profile &p) { return sc_graph(majority_graph(p)); }

/// FWC(P) = WC(P): a candidate winning every balanced agenda meets, and so
/// beats, every rival in its first contest of some balanced agenda.
inline CandidateSubset fwc_profile(const Profile &p) { return wc_profile(p); }
inline CandidateSubset fsc_profile(const Profile &p) { return sc_profile(p); }

/// True iff `completion` completes `original` vote by vote with equal
/// weights, `t` is balanced when `fair`, and `t` on M(completion) elects
/// `candidate`.
inline bool verify_witness(Candidate candidate, const Profile &completion, const Agenda &t, const Profile &original,
                           bool fair) {
  if (!(completion.candidates() == original.candidates()))
    return false;
  auto cv = completion.votes();
  auto ov = original.votes();
  if (cv.size() != ov.size())
    return false;
  for (std::size_t i = 0; i < cv.size(); ++i) {
    if (cv[i].weight != ov[i].weight || !cv[i].order.is_total() || !cv[i].order.extends(ov[i].order))
      return false;
  }
  if (fair && !t.is_balanced())
    return false;
  try {
    return evaluate(t, majority_graph(completion)) == candidate;
  } catch (const Error &) {
    return false;
  }
}

inline bool verify_witness(const Witness &w, const Profile &original, bool fair) {
  return verify_witness(w.candidate, w.completion, w.agenda, original, fair);
}

namespace detail {

struct RowsHash {
  std::size_t operator()(const TournamentRows &rows) const {
    std::size_t h = 1469598103934665603ull;
    for (auto r : rows)
      h = (h ^ static_cast<std::size_t>(r)) * 1099511628211ull;
    return h;
  }
};

/// Walks the profile completions (last vote fastest) keeping a running
/// pairwise tally, and reports each distinct induced tournament once.
class TournamentWalker {
public:
  explicit TournamentWalker(const Profile &p) : p_(p), m_(p.size()), groups_(p) {
    if (m_ > 64)
      throw BudgetExceededError("completion search supports at most 64 candidates");
    const std::size_t pairs = pair_count(m_);
    rankings_.resize(groups_.orders.size());
    above_.resize(groups_.orders.size());
    for (std::size_t g = 0; g < groups_.orders.size(); ++g) {
      for_each_linear_extension(groups_.orders[g], [&](std::span<const Candidate> r) {
        rankings_[g].emplace_back(r.begin(), r.end());
        std::vector<std::size_t> pos(m_);
        for (std::size_t k = 0; k < r.size(); ++k)
          pos[r[k].index] = k;
        std::vector<std::uint8_t> bits(pairs);
        for_each_pair(m_, [&](Candidate i, Candidate j) {
          bits[pair_index(m_, i.index, j.index)] = pos[i.index] < pos[j.index] ? 1 : 0;
        });
        above_[g].push_back(std::move(bits));
      });
    }
  }

  /// fn(const TournamentRows&) -> bool; returning false stops the walk.
  template <class Fn> void run(Fn &&fn) {
    const auto votes = p_.votes();
    const std::size_t n = votes.size();
    const std::size_t pairs = pair_count(m_);
    digit_.assign(n, 0);
    std::vector<std::uint64_t> tally(pairs, 0); // weight ranking lo above hi
    for (std::size_t v = 0; v < n; ++v) {
      const auto &bits = above_[groups_.group_of[v]][0];
      for (std::size_t k = 0; k < pairs; ++k)
        if (bits[k])
          tally[k] += votes[v].weight;
    }
    auto shift = [&](std::size_t v, std::size_t from, std::size_t to) {
      const auto &a = above_[groups_.group_of[v]][from];
      const auto &b = above_[groups_.group_of[v]][to];
      for (std::size_t k = 0; k < pairs; ++k) {
        if (a[k] == b[k])
          continue;
        if (b[k])
          tally[k] += votes[v].weight;
        else
          tally[k] -= votes[v].weight;
      }
    };

    std::unordered_set<TournamentRows, RowsHash> seen;
    const std::uint64_t total = p_.total_weight();
    TournamentRows rows(m_);
    while (true) {
      std::fill(rows.begin(), rows.end(), 0);
      for_each_pair(m_, [&](Candidate i, Candidate j) {
        if (2 * tally[pair_index(m_, i.index, j.index)] > total)
          rows[i.index] |= std::uint64_t{1} << j.index;
        else
          rows[j.index] |= std::uint64_t{1} << i.index;
      });
      if (seen.insert(rows).second && !fn(static_cast<const TournamentRows &>(rows)))
        return;

      std::size_t v = n;
      bool done = true;
      while (v > 0) {
        --v;
        const std::size_t size = rankings_[groups_.group_of[v]].size();
        if (digit_[v] + 1 < size) {
          shift(v, digit_[v], digit_[v] + 1);
          ++digit_[v];
          done = false;
          break;
        }
        shift(v, digit_[v], 0);
        digit_[v] = 0;
      }
      if (done)
        return;
    }
  }

  /// The completion the walk is currently positioned at.
  Profile current_completion() const {
    std::vector<Vote> votes;
    const auto orig = p_.votes();
    for (std::size_t v = 0; v < orig.size(); ++v)
      votes.emplace_back(PartialOrder::from_ranking(rankings_[groups_.group_of[v]][digit_[v]]), orig[v].weight);
    return p_.with_votes(std::move(votes));
  }

private:
  const Profile &p_;
  std::size_t m_;
  VoteGroups groups_;
  std::vector<std::vector<std::vector<Candidate>>> rankings_;
  std::vector<std::vector<std::vector<std::uint8_t>>> above_;
  std::vector<std::size_t> digit_;
};

inline void check_budget(const Profile &p, bool fair, std::uint64_t budget) {
  const std::uint64_t agendas = canonical_agenda_count(p.size(), fair);
  if (agendas > budget)
    throw BudgetExceededError("search size exceeds budget: " + std::to_string(agendas) + " agendas alone");
  const std::uint64_t completions = count_profile_completions(p, budget / agendas + 1);
  const std::uint64_t estimate = saturating_mul(completions, agendas);
  if (estimate > budget)
    throw BudgetExceededError("search size exceeds budget of " + std::to_string(budget) +
                              " (completions x agendas >= " + std::to_string(estimate) + ")");
}

inline std::uint64_t tournament_winners(const TournamentRows &rows, bool fair) {
  if (!fair)
    return dominating_mask(rows);
  return KnockoutSolver(rows, /*balanced=*/true).winners();
}

/// Exact search for weak (strong = false) or strong possible winners.
inline WinnerReport possible_search(const Profile &p, bool fair, bool strong, const SolveOptions &opt) {
  check_budget(p, fair, opt.budget);
  const std::size_t m = p.size();
  const MajorityGraph graph = majority_graph(p);
  // WP(P) is contained in WP(M(P)); so is SP(P) as every profile has a completion.
  const std::uint64_t targets = wp_graph(graph).mask();

  WinnerReport report;
  report.method = Method::Search;
  if (!strong) {
    report.notion = fair ? Notion::FWP : Notion::WP;
    std::uint64_t found = 0;
    TournamentWalker walker(p);
    walker.run([&](const TournamentRows &rows) {
      const std::uint64_t fresh = tournament_winners(rows, fair) & targets & ~found;
      if (fresh && opt.witnesses) {
        KnockoutSolver solver(rows, fair);
        for (std::uint64_t f = fresh; f; f &= f - 1) {
          const Candidate c{static_cast<std::size_t>(std::countr_zero(f))};
          report.witnesses.push_back(Witness{c, walker.current_completion(), *solver.agenda_for(c)});
        }
      }
      found |= fresh;
      return found != targets;
    });
    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [](const Witness &a, const Witness &b) { return a.candidate < b.candidate; });
    report.winners = CandidateSubset::from_mask(m, found);
    return report;
  }

  report.notion = fair ? Notion::FSP : Notion::SP;
  // SP(M(P)) is contained in SP(P); seeded members are never re-examined.
  std::uint64_t seed = 0;
  if (!fair) {
    try {
      seed = sp_graph(graph).mask();
    } catch (const BudgetExceededError &) {
      seed = 0;
    }
  }
  std::uint64_t alive = targets;
  TournamentWalker walker(p);
  walker.run([&](const TournamentRows &rows) {
    alive &= tournament_winners(rows, fair) | seed;
    return alive != seed;
  });
  report.winners = CandidateSubset::from_mask(m, alive);
  return report;
}

} // namespace detail

/// WC / FWC with witnesses: the completion lifting each winner to the top
/// of every vote, plus a balanced agenda.
inline WinnerReport condorcet_report(const Profile &p, bool weak, bool fair, const SolveOptions &opt = {}) {
  WinnerReport report;
  report.notion = weak ? (fair ? Notion::FWC : Notion::WC) : (fair ? Notion::FSC : Notion::SC);
  report.method = Method::Fast;
  report.winners = weak ? wc_profile(p) : sc_profile(p);
  if (weak && opt.witnesses) {
    const Agenda agenda = halving_agenda(p.size()).canonical();
    for (auto c : report.winners.members()) {
      std::vector<Vote> votes;
      for (const auto &v : p.votes())
        votes.emplace_back(lift_to_top(v.order, c).as_partial(), v.weight);
      report.witnesses.push_back(Witness{c, p.with_votes(std::move(votes)), agenda});
    }
  }
  return report;
}

/// WP(P) by exact search; candidates outside WP(M(P)) are never searched.
inline WinnerReport wp_profile(const Profile &p, const SolveOptions &opt = {}) {
  return detail::possible_search(p, /*fair=*/false, /*strong=*/false, opt);
}

/// SP(P): intersection over completions of the top cycle of M(completion).
inline WinnerReport sp_profile(const Profile &p, const SolveOptions &opt = {}) {
  return detail::possible_search(p, /*fair=*/false, /*strong=*/true, opt);
}

inline WinnerReport fwp_profile(const Profile &p, const SolveOptions &opt = {}) {
  return detail::possible_search(p, /*fair=*/true, /*strong=*/false, opt);
}

inline WinnerReport fsp_profile(const Profile &p, const SolveOptions &opt = {}) {
  return detail::possible_search(p, /*fair=*/true, /*strong=*/true, opt);
}

/// Profile-level winners for one notion using fast paths where available.
inline WinnerReport solve_profile(const Profile &p, Notion n, const SolveOptions &opt = {}) {
  switch (n) {
  case Notion::WC:
  case Notion::FWC:
    return condorcet_report(p, /*weak=*/true, is_fair(n), opt);
  case Notion::SC:
  case Notion::FSC:
    return condorcet_report(p, /*weak=*/false, is_fair(n), opt);
  case Notion::WP:
    return wp_profile(p, opt);
  case Notion::SP:
    return sp_profile(p, opt);
  case Notion::FWP:
    return fwp_profile(p, opt);
  case Notion::FSP:
    return fsp_profile(p, opt);
  }
  return {};
}

/// Graph-level winners for one notion.
inline CandidateSubset solve_graph(const MajorityGraph &g, Notion n,
                                   std::size_t max_unknown = kDefaultMaxUnknownPairs) {
  switch (n) {
  case Notion::WC:
  case Notion::FWC:
    return wc_graph(g);
  case Notion::SC:
  case Notion::FSC:
    return sc_graph(g);
  case Notion::WP:
    return wp_graph(g);
  case Notion::SP:
    return sp_graph(g, max_unknown);
  case Notion::FWP:
    return fair_possible_graph(g, max_unknown).fwp;
  case Notion::FSP:
    return fair_possible_graph(g, max_unknown).fsp;
  }
  return {};
}

} // namespace seqvote
