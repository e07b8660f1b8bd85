// Seeded function generator used by the cross-check command and the
// randomized suites.  Fully specified so that counterexamples reproduce:
// a 64-bit LCG, and per minterm one draw whose value mod 3 selects
// care (0), don't-care (1), or off (2).
#pragma once

#include <cstdint>

#include "mqm/core.hpp"

namespace mqm {

struct Lcg {
  std::uint64_t state;

  explicit Lcg(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state;
  }
};

inline BooleanFunction random_function(unsigned n, Lcg& rng) {
  std::set<Minterm> care, dc;
  for (Minterm m = 0; m < (Minterm{1} << n); ++m) {
    switch (rng.next() % 3) {
      case 0: care.insert(care.end(), m); break;
      case 1: dc.insert(dc.end(), m); break;
      default: break;  // off
    }
  }
  return BooleanFunction(n, std::move(care), std::move(dc));
}

}  // namespace mqm
