#pragma once

#include "oracles.hpp"
#include "platkit/braided_surface.hpp"

namespace oracle {

inline platkit::MonodromyEntry random_entry(Rng& rng, int degree, int max_conj) {
  return {random_word(rng, degree, max_conj), uniform(rng, 1, degree - 1), uniform(rng, 0, 1) ? 1 : -1};
}

/// Mixed system: monodromy entries and bare words.
inline platkit::BraidSystem random_system(Rng& rng, int degree, int r) {
  std::vector<platkit::SystemEntry> entries;
  for (int k = 0; k < r; ++k) {
    if (uniform(rng, 0, 2) == 0) {
      entries.emplace_back(random_word(rng, degree, 4));
    } else {
      entries.emplace_back(random_entry(rng, degree, 3));
    }
  }
  return platkit::BraidSystem(degree, std::move(entries));
}

/// Trivial product: r/2 adjacent pairs (u s u^-1, u s^-1 u^-1).
inline platkit::BraidSystem random_two_dimensional(Rng& rng, int degree, int pairs) {
  std::vector<platkit::SystemEntry> entries;
  for (int k = 0; k < pairs; ++k) {
    platkit::MonodromyEntry e = random_entry(rng, degree, 3);
    platkit::MonodromyEntry f = e;
    f.sign = -e.sign;
    entries.emplace_back(e);
    entries.emplace_back(f);
  }
  return platkit::BraidSystem(degree, std::move(entries));
}

}  // namespace oracle
