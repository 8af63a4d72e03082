#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "seqvote/candidates.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/model.hpp"

namespace seqvote {

/// Weighted three-candidate profile in which B is a weak possible winner
/// iff `integers` split into two halves of equal sum.
struct ReductionInstance {
  std::vector<std::uint64_t> integers;
  std::uint64_t k = 0; // half of the sum
  Profile profile;
  Candidate designated;
};

/// Builds the instance over candidates A, B, C:
///   B>C>A weight 1, B>A>C weight 2k-1, C>B>A weight 2k-1,
///   and for every integer k_i a vote of weight 2k_i declaring only A>B.
/// The complete votes alone give B over A by 4k-1, B over C by 1 and C over
/// A by 1; the partial votes (total 4k) then fix A over B by exactly 1.
inline ReductionInstance reduce_partition(std::span<const std::uint64_t> integers) {
  if (integers.empty())
    throw InvalidProfileError("partition instance needs at least one integer");
  std::uint64_t sum = 0;
  for (auto x : integers) {
    if (x < 1)
      throw InvalidProfileError("partition integers must be positive");
    if (x > kMaxWeight / 2 || sum > kMaxWeight)
      throw InvalidProfileError("partition integers too large for vote weights");
    sum += x;
  }
  if (sum % 2 != 0)
    throw OddSumError("integers sum to " + std::to_string(sum) + ", which is odd");
  const std::uint64_t k = sum / 2;
  if (2 * k - 1 > kMaxWeight)
    throw InvalidProfileError("partition sum too large for vote weights");

  const Candidate a{0}, b{1}, c{2};
  std::vector<Vote> votes;
  votes.emplace_back(PartialOrder::from_ranking(std::vector<Candidate>{b, c, a}), 1);
  votes.emplace_back(PartialOrder::from_ranking(std::vector<Candidate>{b, a, c}), 2 * k - 1);
  votes.emplace_back(PartialOrder::from_ranking(std::vector<Candidate>{c, b, a}), 2 * k - 1);
  const Comparison a_over_b{a, b};
  for (auto x : integers)
    votes.emplace_back(transitive_close(std::span<const Comparison>(&a_over_b, 1), 3), 2 * x);

  return ReductionInstance{std::vector<std::uint64_t>(integers.begin(), integers.end()), k,
                           Profile(CandidateSet({"A", "B", "C"}), std::move(votes)), b};
}

/// Adds `extra` candidates below A, B and C in every vote, ordered among
/// themselves canonically.
inline ReductionInstance extend_candidates(const ReductionInstance &r, const std::vector<std::string> &extra) {
  if (extra.empty())
    return r;
  std::vector<std::string> names = r.profile.candidates().names();
  names.insert(names.end(), extra.begin(), extra.end());
  CandidateSet candidates(std::move(names)); // rejects overlaps with A, B, C
  const std::size_t base = r.profile.size();
  const std::size_t m = candidates.size();

  std::vector<Vote> votes;
  for (const auto &v : r.profile.votes()) {
    std::vector<Comparison> cs;
    for (auto c : v.order.comparisons())
      cs.push_back(c);
    for (std::size_t x = 0; x < base; ++x)
      cs.push_back({Candidate{x}, Candidate{base}});
    for (std::size_t e = base; e + 1 < m; ++e)
      cs.push_back({Candidate{e}, Candidate{e + 1}});
    votes.emplace_back(transitive_close(cs, m), v.weight);
  }
  return ReductionInstance{r.integers, r.k, Profile(std::move(candidates), std::move(votes)), r.designated};
}

namespace detail {

inline std::vector<std::uint64_t> subset_sums(std::span<const std::uint64_t> xs) {
  std::vector<std::uint64_t> sums{0};
  for (auto x : xs) {
    const std::size_t n = sums.size();
    for (std::size_t i = 0; i < n; ++i)
      sums.push_back(sums[i] + x);
  }
  return sums;
}

} // namespace detail

/// True iff some sub-multiset sums to half the total. Meet in the middle:
/// subset sums of each half, sorted, probed for the complement.
inline bool partition_exists(std::span<const std::uint64_t> integers) {
  const std::uint64_t total = std::accumulate(integers.begin(), integers.end(), std::uint64_t{0});
  if (total % 2 != 0)
    return false;
  const std::uint64_t target = total / 2;
  const std::size_t half = integers.size() / 2;
  auto left = detail::subset_sums(integers.first(half));
  auto right = detail::subset_sums(integers.subspan(half));
  std::sort(right.begin(), right.end());
  for (auto s : left)
    if (s <= target && std::binary_search(right.begin(), right.end(), target - s))
      return true;
  return false;
}

} // namespace seqvote
