#pragma once

#include <cstdint>

namespace ipf {

// Defaults shared by the CLI and the randomized suites.
inline constexpr std::uint64_t kDefaultSeed = 123456789;

// Per-coordinate width of the finite windows used by the pointwise oracles.
inline constexpr int kDefaultWindow = 8;

}  // namespace ipf
