#pragma once

// Seeded samplers for regions of kappa^{-1}(c) and for random rational
// characters and words. All randomness flows through std::mt19937_64.

#include <cstdint>
#include <random>
#include <vector>

#include "charflow/character.hpp"
#include "charflow/group.hpp"
#include "charflow/numeric.hpp"

namespace charflow {

using Rng = std::mt19937_64;

enum class Region { OmegaM, OmegaK, Elliptic, Hyperbolic };

Region parse_region(const std::string& s);

// Rejection sampler constrained to kappa = c on the C11 chart (double
// backend). Throws EmptyRegion when the region is empty at this level
// (OmegaM requires c < -14, OmegaK requires c > 6).
std::vector<Character<double>> sample_region(double c, Region region, std::size_t n,
                                             Rng& rng);

// One point of Omega_0^M on kappa^{-1}(c), c < -14.
Character<double> sample_omega0_M(double c, Rng& rng);

// Random rational character with small coordinates (C11).
Character<Rational> random_rational_character(Rng& rng, int max_abs_num = 8,
                                              int max_den = 4);

// Random rational point of Omega_0^M; the level c = kappa(u) < -14 varies
// with the sample.
Character<Rational> random_rational_omega0_M(Rng& rng);

// Random reduced word in Qx, Qy, Qz of exactly the given length. When
// avoid_qz_first is set the first letter is Qx or Qy, so the endpoint
// stays in the binary tree rooted at the start character.
GroupWord random_lambda_word(std::size_t length, Rng& rng, bool avoid_qz_first = false);

// Random word over all seven generators, reduced.
GroupWord random_gamma_word(std::size_t length, Rng& rng);

}  // namespace charflow
