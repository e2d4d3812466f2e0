#pragma once

#include <cstdint>
#include <string>

namespace ipftool {

struct SelftestOptions {
  std::uint64_t seed;
  int window;
  bool json;
};

// Runs the embedded consistency battery, printing one line per check.
// Returns the number of failed checks.
int run_selftest(const SelftestOptions& opts);

}  // namespace ipftool
