#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqvote/agenda.hpp"
#include "seqvote/candidates.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/majority.hpp"
#include "seqvote/model.hpp"
#include "seqvote/notion.hpp"
#include "seqvote/profwin.hpp"

// Reference implementations that quantify literally over completions and
// agendas. Shares only evaluate() and the enumerators with the solvers.

namespace seqvote {

inline constexpr std::uint64_t kOracleBudget = 10'000'000;

struct OracleResult {
  CandidateSubset wc;
  CandidateSubset sc;
  CandidateSubset wp;
  CandidateSubset sp;
  // Profile-level runs only: first (completion, agenda) in enumeration order.
  std::vector<std::optional<Witness>> wp_witness;
  std::vector<std::optional<Witness>> wc_witness;

  const CandidateSubset &get(Notion n) const {
    switch (base_notion(n)) {
    case Notion::WC:
      return wc;
    case Notion::SC:
      return sc;
    case Notion::WP:
      return wp;
    default:
      return sp;
    }
  }
};

namespace detail {

class Quantifier {
public:
  Quantifier(std::size_t m, bool fair) : m_(m), agendas_(enumerate_agendas(m, fair)) {
    r_.wc = CandidateSubset(m);
    r_.sc = CandidateSubset::all(m);
    r_.wp = CandidateSubset(m);
    r_.sp = CandidateSubset::all(m);
    r_.wp_witness.resize(m);
    r_.wc_witness.resize(m);
  }

  std::size_t agenda_count() const { return agendas_.size(); }

  void visit(const MajorityGraph &g, const Profile *completion) {
    std::vector<std::size_t> wins(m_, 0);
    std::vector<std::optional<std::size_t>> first_win(m_);
    for (std::size_t a = 0; a < agendas_.size(); ++a) {
      const Candidate w = evaluate(agendas_[a], g);
      ++wins[w.index];
      if (!first_win[w.index])
        first_win[w.index] = a;
    }
    CandidateSubset any(m_), all(m_);
    for (std::size_t c = 0; c < m_; ++c) {
      if (wins[c] > 0)
        any.insert(Candidate{c});
      if (wins[c] == agendas_.size())
        all.insert(Candidate{c});
      if (completion && wins[c] > 0 && !r_.wp_witness[c])
        r_.wp_witness[c] = Witness{Candidate{c}, *completion, agendas_[*first_win[c]]};
      if (completion && wins[c] == agendas_.size() && !r_.wc_witness[c])
        r_.wc_witness[c] = Witness{Candidate{c}, *completion, agendas_[0]};
    }
    r_.wp |= any;
    r_.sp &= any;
    r_.wc |= all;
    r_.sc &= all;
  }

  OracleResult result() && { return std::move(r_); }

private:
  std::size_t m_;
  std::vector<Agenda> agendas_;
  OracleResult r_;
};

inline void check_oracle_budget(std::uint64_t completions, std::uint64_t agendas, std::uint64_t budget) {
  if (saturating_mul(completions, agendas) > budget)
    throw BudgetExceededError("oracle: completions x agendas exceeds the budget of " + std::to_string(budget));
}

} // namespace detail

/// All four profile-level sets (fair variants when `fair`), by definition.
inline OracleResult oracle_profile(const Profile &p, bool fair, std::uint64_t budget = kOracleBudget) {
  const std::uint64_t agendas = canonical_agenda_count(p.size(), fair);
  detail::check_oracle_budget(count_profile_completions(p, budget + 1), agendas, budget);
  detail::Quantifier q(p.size(), fair);
  for_each_profile_completion(p, [&](const Profile &c) { q.visit(majority_graph(c), &c); });
  return std::move(q).result();
}

/// All four graph-level sets, quantifying over the 2^u orientations.
inline OracleResult oracle_graph(const MajorityGraph &g, bool fair, std::uint64_t budget = kOracleBudget) {
  const std::size_t u = g.unknown_count();
  const std::uint64_t completions = u >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << u;
  detail::check_oracle_budget(completions, canonical_agenda_count(g.size(), fair), budget);
  detail::Quantifier q(g.size(), fair);
  for_each_graph_completion(g, [&](const Tournament &t) { q.visit(t, nullptr); });
  auto r = std::move(q).result();
  r.wp_witness.clear();
  r.wc_witness.clear();
  return r;
}

inline CandidateSubset oracle_winners(const MajorityGraph &g, Notion n, std::uint64_t budget = kOracleBudget) {
  return oracle_graph(g, is_fair(n), budget).get(n);
}

inline CandidateSubset oracle_winners(const Profile &p, NotionQuery q, std::uint64_t budget = kOracleBudget) {
  if (q.source == Source::Graph)
    return oracle_winners(majority_graph(p), q.notion, budget);
  return oracle_profile(p, q.fair(), budget).get(q.notion);
}

} // namespace seqvote
