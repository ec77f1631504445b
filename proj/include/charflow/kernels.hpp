#pragma once

// Batch kernels over many characters. Each kernel has a serial reference
// implementation and an OpenMP-parallel one; tests assert they agree and
// tools/bench_kernels compares their throughput.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "charflow/character.hpp"
#include "charflow/group.hpp"
#include "charflow/numeric.hpp"
#include "charflow/reduction.hpp"

namespace charflow {

// kappa over a batch of characters.
std::vector<double> kappa_batch_serial(const std::vector<Character<double>>& pts);
std::vector<double> kappa_batch_parallel(const std::vector<Character<double>>& pts);

// Largest |kappa(w.u) - kappa(u)| over a batch of (character, word) pairs.
double kappa_invariance_residual_serial(const std::vector<Character<double>>& pts,
                                        const std::vector<GroupWord>& words);
double kappa_invariance_residual_parallel(const std::vector<Character<double>>& pts,
                                          const std::vector<GroupWord>& words);

// Terminator classes of tau_reduce over a batch.
std::vector<TerminatorClass> reduce_batch_serial(const std::vector<Character<double>>& pts,
                                                 const Tolerance& tol,
                                                 std::size_t max_steps);
std::vector<TerminatorClass> reduce_batch_parallel(const std::vector<Character<double>>& pts,
                                                   const Tolerance& tol,
                                                   std::size_t max_steps);

// Brute-force extrema of zbar over an n-point sweep of the elliptic slice.
std::pair<double, double> zbar_sweep_serial(double c, double z, std::size_t n);
std::pair<double, double> zbar_sweep_parallel(double c, double z, std::size_t n);

// Violations of the parent<=child tau law (with at least one strict) over
// the orbit trees of a batch of roots; returns the total violation count.
// `slack` is relative to |tau| (floored at 1) since tau spans many orders
// of magnitude down a tree.
std::uint64_t tree_monotonicity_violations_serial(
    const std::vector<Character<double>>& roots, std::size_t depth, double slack);
std::uint64_t tree_monotonicity_violations_parallel(
    const std::vector<Character<double>>& roots, std::size_t depth, double slack);

}  // namespace charflow
