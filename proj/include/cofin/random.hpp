#pragma once

// Random elements for property checks.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <numeric>
#include <random>
#include <vector>

#include "cofin/bicyclic.hpp"
#include "cofin/cof_map.hpp"

namespace cofin {

using Rng = std::mt19937_64;

// A uniformly sized subset of [1, bound] with at most max_size entries.
inline GapSet random_gap_set(Rng& rng, Int bound = 30, std::size_t max_size = 10) {
  std::vector<Int> pool(static_cast<std::size_t>(bound));
  std::iota(pool.begin(), pool.end(), Int{1});
  std::size_t const cap = std::min(max_size, pool.size());
  std::size_t const size = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
  std::vector<Int> picked;
  std::sample(pool.begin(), pool.end(), std::back_inserter(picked), size, rng);
  return GapSet(std::move(picked));
}

inline CofMap random_map(Rng& rng, Int bound = 30, std::size_t max_size = 10) {
  auto d = random_gap_set(rng, bound, max_size);
  return make(std::move(d), random_gap_set(rng, bound, max_size));
}

inline CofMap random_idempotent(Rng& rng, Int bound = 30, std::size_t max_size = 10) {
  auto d = random_gap_set(rng, bound, max_size);
  return make(d, d);
}

inline Bicyclic random_bicyclic(Rng& rng, std::uint64_t bound = 20) {
  std::uniform_int_distribution<std::uint64_t> pick(0, bound);
  auto const m = pick(rng);
  return {m, pick(rng)};
}

// A map with at least `depth` gaps on each side.
inline CofMap random_deep_map(Rng& rng, Int depth, Int bound = 30) {
  bound = std::max(bound, depth + 5);
  auto side = [&] {
    std::size_t const lo = static_cast<std::size_t>(depth);
    std::size_t const size = std::uniform_int_distribution<std::size_t>(lo, lo + 5)(rng);
    std::vector<Int> pool(static_cast<std::size_t>(bound));
    std::iota(pool.begin(), pool.end(), Int{1});
    std::vector<Int> picked;
    std::sample(pool.begin(), pool.end(), std::back_inserter(picked), std::min(size, pool.size()), rng);
    return GapSet(std::move(picked));
  };
  auto d = side();
  return make(std::move(d), side());
}

}  // namespace cofin
