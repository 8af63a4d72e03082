#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "seqvote/candidates.hpp"
#include "seqvote/model.hpp"

// Seeded generators for property checks. Only the raw mt19937_64 stream is
// used (its output is fixed by the standard), never the library
// distributions, so samples are identical on every platform.

namespace seqvote {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n), n > 0, by rejection.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit)
      return x % n;
  }
}

inline std::vector<Candidate> random_ranking(Rng &rng, std::size_t m) {
  std::vector<Candidate> r(m);
  for (std::size_t i = 0; i < m; ++i)
    r[i] = Candidate{i};
  for (std::size_t i = m; i > 1; --i)
    std::swap(r[i - 1], r[uniform_below(rng, i)]);
  return r;
}

/// Closure of a random subset of the comparisons of a random ranking; the
/// density is itself drawn from {0, 1/4, 1/2, 3/4, 1}.
inline PartialOrder random_partial_order(Rng &rng, std::size_t m) {
  const auto ranking = random_ranking(rng, m);
  const std::uint64_t density = uniform_below(rng, 5);
  std::vector<Comparison> cs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (uniform_below(rng, 4) < density)
        cs.push_back({ranking[a], ranking[b]});
  return transitive_close(cs, m);
}

/// 1..max_votes votes with weights in 1..max_weight; the last weight is
/// nudged (or a vote dropped) to make the total odd.
inline Profile random_profile(Rng &rng, std::size_t m, std::size_t max_votes, std::uint64_t max_weight) {
  const std::size_t n = 1 + static_cast<std::size_t>(uniform_below(rng, max_votes));
  std::vector<PartialOrder> orders;
  std::vector<std::uint64_t> weights;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    orders.push_back(random_partial_order(rng, m));
    weights.push_back(1 + uniform_below(rng, max_weight));
    total += weights.back();
  }
  if (total % 2 == 0) {
    if (weights.back() < max_weight) {
      ++weights.back();
    } else if (weights.back() > 1) {
      --weights.back();
    } else {
      orders.pop_back();
      weights.pop_back();
    }
  }
  std::vector<Vote> votes;
  for (std::size_t i = 0; i < orders.size(); ++i)
    votes.emplace_back(std::move(orders[i]), weights[i]);
  return Profile(CandidateSet::letters(m), std::move(votes));
}

/// `voters` unit-weight random total orders (voters must be odd).
inline Profile random_complete_profile(Rng &rng, std::size_t m, std::size_t voters) {
  std::vector<Vote> votes;
  votes.reserve(voters);
  for (std::size_t i = 0; i < voters; ++i)
    votes.emplace_back(PartialOrder::from_ranking(random_ranking(rng, m)), 1);
  return Profile(CandidateSet::letters(m), std::move(votes));
}

} // namespace seqvote
