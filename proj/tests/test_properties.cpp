#include <doctest.h>

#include <random>

#include "fan_test_util.hpp"

// Reduced randomized pass over the theorem checklist; the acceptance suite
// runs the full 200-fan version.
TEST_CASE("theorems hold on random star subdivisions of the seed fans") {
  std::mt19937 rng(2024);
  const auto seeds = testutil::fuzz_seeds();
  for (int trial = 0; trial < 40; ++trial) {
    const auto& [name, seed] = seeds[trial % seeds.size()];
    const int rounds = seed.dim() >= 2 ? static_cast<int>(rng() % 4) : 0;
    toric::Fan fan = testutil::random_subdivisions(seed, rng, rounds);
    for (const auto& violation : testutil::theorem_violations(fan)) {
      FAIL_CHECK(name << " after " << rounds << " subdivisions: " << violation);
    }
  }
}
