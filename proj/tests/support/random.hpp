#ifndef ORBIBRAID_TESTS_RANDOM_HPP_
#define ORBIBRAID_TESTS_RANDOM_HPP_

#include <cstdint>
#include <cstdlib>
#include <random>

namespace orbibraid::testing {

  inline std::uint64_t seed(std::uint64_t salt = 0) {
    std::uint64_t s = 20260615;
    if (char const* env = std::getenv("ORBIBRAID_SEED")) {
      s = std::strtoull(env, nullptr, 10);
    }
    return s ^ (salt * 0x9e3779b97f4a7c15ULL);
  }

  inline std::mt19937_64 rng(std::uint64_t salt = 0) {
    return std::mt19937_64(seed(salt));
  }

  inline int uniform(std::mt19937_64& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
  }

}  // namespace orbibraid::testing

#endif
