#pragma once

// Shared generators for the randomized suites. Each suite owns its RNG and
// seeds it from ipf::kDefaultSeed so runs are reproducible.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ipf/config.hpp"
#include "ipf/element.hpp"
#include "ipf/permutation.hpp"
#include "ipf/point.hpp"

namespace ipftest {

using Rng = std::mt19937_64;

inline int rint(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline ipf::Permutation random_perm(Rng& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return ipf::Permutation(std::move(img));
}

inline ipf::Point random_point(Rng& rng, int n, int max_coord) {
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int& v : c) v = rint(rng, 1, max_coord);
  return ipf::Point(std::move(c));
}

inline ipf::IpfElement random_element(Rng& rng, int n, int max_coord) {
  return {random_perm(rng, n), random_point(rng, n, max_coord), random_point(rng, n, max_coord)};
}

}  // namespace ipftest
