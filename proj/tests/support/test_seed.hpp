#pragma once

#include <cstdint>
#include <random>

namespace testing_support {

/// Seed for randomized tests; set with --seed=N on the test command line.
std::uint64_t seed();

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(seed() ^ (salt * 0x9E3779B97F4A7C15ull));
}

}  // namespace testing_support
