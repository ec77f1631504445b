#pragma once

// The tau-reduction descent: classify a character on kappa^{-1}(c) by a
// tau-minimizing sequence ending in the Moebius Fricke domain, the
// elliptic region, or the degenerate locus. Also growth-bound utilities
// and terminal-plane detection.

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "charflow/character.hpp"
#include "charflow/errors.hpp"
#include "charflow/fricke.hpp"
#include "charflow/group.hpp"
#include "charflow/numeric.hpp"

namespace charflow {

enum class TerminatorClass { FrickeM, EllipticE, SigmaZero, IterationCap };

inline std::string terminator_name(TerminatorClass c) {
  switch (c) {
    case TerminatorClass::FrickeM: return "fricke_M";
    case TerminatorClass::EllipticE: return "elliptic_E";
    case TerminatorClass::SigmaZero: return "sigma_zero";
    case TerminatorClass::IterationCap: return "iteration_cap";
  }
  return "?";
}

template <class T>
struct ReductionStep {
  Generator letter;
  Character<T> point;  // point after the letter was applied
  T tau_value{};
};

template <class T>
struct ReductionTrace {
  Character<T> input;
  std::vector<ReductionStep<T>> steps;
  Character<T> terminator;
  TerminatorClass cls = TerminatorClass::IterationCap;
  GroupWord word;  // apply_word(word, input) == terminator
};

inline constexpr std::size_t kDefaultMaxSteps = 1'000'000;

// The descent loop. Branch order is fixed: Qx, then Qy, else Qz; changing
// it would break round-trip recovery of tree paths.
template <class T>
ReductionTrace<T> tau_reduce(const Character<T>& u, const Tolerance& tol = {},
                             std::size_t max_steps = kDefaultMaxSteps) {
  detail::require_c11(u, "tau_reduce");
  ReductionTrace<T> trace;
  trace.input = u;
  Character<T> v = u;
  auto push = [&](Generator g) {
    v = charflow::apply(g, v);
    trace.word.letters.push_back(g);
    trace.steps.push_back({g, v, tau(v)});
  };
  auto finish = [&](TerminatorClass cls) {
    trace.terminator = v;
    trace.cls = cls;
    trace.word.reduced = true;
    return trace;
  };

  // Entry case the loop guard does not cover: -2 < z < 2. One Qz step
  // produces |zbar| < 2, i.e. a point of the elliptic region.
  if (strictly_less(abs_value(v.z), T(2), tol) &&
      strictly_greater(abs_value(zbar(v)), T(2), tol)) {
    push(Generator::Qz);
    return finish(TerminatorClass::EllipticE);
  }

  for (std::size_t step = 0; step < max_steps; ++step) {
    const T zb = zbar(v);
    if (!strictly_greater(abs_value(zb), T(2), tol)) return finish(TerminatorClass::EllipticE);
    if (approx_eq(v.x, T(0), tol) || approx_eq(v.y, T(0), tol))
      return finish(TerminatorClass::SigmaZero);
    if (strictly_less(v.z, T(-2), tol) && strictly_less(zb, T(-2), tol))
      return finish(TerminatorClass::FrickeM);
    if (strictly_greater(v.z, T(2), tol) && strictly_greater(zb, T(2), tol)) {
      push(Generator::SigmaXZ);
      return finish(TerminatorClass::FrickeM);
    }
    const T t = tau(v);
    if (tau(charflow::apply(Generator::Qx, v)) < t)
      push(Generator::Qx);
    else if (tau(charflow::apply(Generator::Qy, v)) < t)
      push(Generator::Qy);
    else
      push(Generator::Qz);
  }
  return finish(TerminatorClass::IterationCap);
}

// Lower bound of the tau increment for a single Qx or Qy step on a
// hyperbolic slice: |y z| max(|y| sqrt(z^2-4), 2 sqrt(z^2-c-2)) for Qx,
// symmetrically for Qy.
template <class T>
double growth_lower_bound(const Character<T>& u, Generator g) {
  detail::require_c11(u, "growth_lower_bound");
  if (g != Generator::Qx && g != Generator::Qy)
    throw PreconditionViolated("growth bound applies to Qx and Qy only");
  const double x = to_double(u.x), y = to_double(u.y), z = to_double(u.z);
  const double c = to_double(kappa(u));
  if (std::abs(z) <= 2 || c >= 2)
    throw PreconditionViolated("growth bound requires |z| > 2 and kappa < 2");
  const double w = g == Generator::Qx ? y : x;
  return std::abs(w * z) *
         std::max(std::abs(w) * std::sqrt(z * z - 4), 2 * std::sqrt(z * z - c - 2));
}

// For c < -14, every point of the base Moebius domain on kappa^{-1}(c)
// has |x| and |y| inside (4/sqrt(-c-6), sqrt(-c-6)).
inline std::pair<double, double> omega_coordinate_bounds(double c) {
  if (c >= -14) throw OutOfRange("coordinate band requires c < -14");
  const double s = std::sqrt(-c - 6);
  return {4.0 / s, s};
}

enum class Axis { X, Y };

struct TerminalPlane {
  Axis axis;
  double value;
  std::size_t entry_step;  // index into the trace point sequence (0 = input)
};

// Detect a suffix of the trace confined to a coordinate plane inside the
// accumulation strip |coord| < sqrt(-c+2).
template <class T>
std::optional<TerminalPlane> detect_terminal_plane(const ReductionTrace<T>& trace,
                                                   const Tolerance& tol = {}) {
  std::vector<Character<T>> pts;
  pts.push_back(trace.input);
  for (const auto& s : trace.steps) pts.push_back(s.point);
  if (pts.size() < 2) return std::nullopt;
  const double c = to_double(kappa(trace.input));
  const double strip = std::sqrt(-c + 2);

  auto scan = [&](Axis axis) -> std::optional<TerminalPlane> {
    auto coord = [&](const Character<T>& u) {
      return axis == Axis::X ? u.x : u.y;
    };
    // longest suffix with the coordinate constant
    std::size_t k = pts.size() - 1;
    while (k > 0 && approx_eq(coord(pts[k - 1]), coord(pts[k]), tol)) --k;
    if (k + 1 >= pts.size()) return std::nullopt;  // suffix of length 1: no plane
    const double v = to_double(coord(pts.back()));
    if (std::abs(v) >= strip) return std::nullopt;
    return TerminalPlane{axis, v, k};
  };

  auto px = scan(Axis::X);
  auto py = scan(Axis::Y);
  if (px && py) return px->entry_step <= py->entry_step ? px : py;
  return px ? px : py;
}

}  // namespace charflow
