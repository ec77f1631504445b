#pragma once

// Statistical experiments on the rotation dynamics of elliptic slices:
// equidistribution, zbar-range coverage, slice-chain walks over z in
// (-2,2), and the density probe on the Markoff-like surface kappa^{-1}(-2).

#include <cstdint>
#include <string>
#include <vector>

#include "charflow/character.hpp"
#include "charflow/numeric.hpp"
#include "charflow/sampling.hpp"

namespace charflow {

struct HistogramBin {
  double lo = 0, hi = 0;
  std::uint64_t count = 0;
};

struct ErgodicReport {
  double c = 0;
  double z = 0;            // slice, or NaN for sweeps
  bool sweep = false;
  std::uint64_t iterations = 0;
  double discrepancy = 0;  // star discrepancy estimate of the angle sequence
  double coverage = 0;     // fraction of bins visited at least once
  std::vector<HistogramBin> histogram;
  std::uint64_t seed = 0;
  double max_kappa_drift = 0;
  bool escaped = false;     // walk-specific flags (see the ops below)
  std::uint64_t flagged = 0;
};

inline constexpr std::size_t kDefaultBins = 200;
// Re-project z onto the exact root of the slice quadratic every so many
// steps to stop float drift on long orbits.
inline constexpr std::uint64_t kRenormInterval = 10'000;

// Iterate the rotation Qx Qy on the elliptic slice, starting from
// ellipse_point(theta0). Returns the orbit in the (x, y) plane.
std::vector<std::pair<double, double>> rotation_orbit(double c, double z, double theta0,
                                                      std::uint64_t n);

// Measured angular step of the rotation, recovered from the ellipse
// parametrization (should equal rotation_angle(z)).
double measured_rotation_step(double c, double z, double theta0, std::uint64_t n);

// Period of the rotation orbit if it closes up within `limit` steps, else 0.
std::uint64_t orbit_period(double c, double z, double theta0, std::uint64_t limit,
                           double tol = 1e-6);

// Histogram coverage of the zbar range [zbar_min, zbar_max] along the
// rotation orbit.
ErgodicReport zbar_coverage(double c, double z, std::uint64_t n, std::size_t bins,
                            std::uint64_t seed);

// Alternate rotation bursts with Qz jumps whenever |zbar| < 2; report
// coverage of z in (-2,2) by the visited slices. `flagged` counts visited
// points that landed in Omega_0^M (always 0 in the wandering-free regime).
ErgodicReport slice_chain_walk(double c, const Character<double>& start, std::uint64_t n,
                               std::uint64_t seed, std::size_t bins = kDefaultBins);

// Random Lambda-word iteration on kappa^{-1}(-2) near the origin; reports
// the fraction of grid cells of the radius-ball visited. Escaping iterates
// (a coordinate beyond 2) are flagged and the walk restarts.
ErgodicReport markoff_probe(double radius, std::uint64_t n, std::uint64_t seed,
                            std::size_t grid = 24);

// Star discrepancy of a sequence of points in [0,1), estimated on a grid.
double star_discrepancy(const std::vector<double>& xs);

}  // namespace charflow
