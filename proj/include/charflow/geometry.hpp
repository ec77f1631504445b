#pragma once

// Conic z-slices of kappa^{-1}(c) on the C11 chart: hyperbola/ellipse
// data, parametrizations, point-type classification, zbar extrema over
// elliptic slices, the rotation angle, and the interval cover used by the
// ergodicity chaining argument.

#include <cmath>
#include <utility>
#include <vector>

#include "charflow/character.hpp"
#include "charflow/errors.hpp"
#include "charflow/group.hpp"
#include "charflow/numeric.hpp"

namespace charflow {

enum class SliceKind { Hyperbola, Ellipse, Degenerate };

struct ConicSlice {
  double c = 0;
  double z = 0;
  SliceKind kind = SliceKind::Degenerate;
  // Hyperbola: semi-axes a (along x+y=0) and b (along x-y=0).
  // Ellipse: semi-axes A, B of the parametrization below.
  double a = 0, b = 0;
};

// Classify the slice L_z cap kappa^{-1}(c) and compute its semi-axes.
// Hyperbola for |z| > 2, ellipse for |z| < 2, both requiring
// z^2 - c - 2 > 0; everything else is Degenerate.
ConicSlice slice(double c, double z);

enum class Branch { Plus, Minus };

// Point of the hyperbolic slice at parameter t. t = 0 gives the two
// principal-axis intersection points, where tau attains its minimum.
std::pair<double, double> hyperbola_point(const ConicSlice& s, double t, Branch branch);

// Point of the elliptic slice at angle theta:
//   x = (sqrt2/2)(-A cos th + B sin th), y = (sqrt2/2)(A cos th + B sin th)
// with A = sqrt(2(z^2-c-2)/(2+z)), B = sqrt(2(z^2-c-2)/(2-z)).
std::pair<double, double> ellipse_point(const ConicSlice& s, double theta);

// Rotation angle of Qx Qy on an elliptic slice: alpha = 2 acos(z/2).
double rotation_angle(double z);

// Extrema of zbar over the elliptic slice, by the closed forms
//   zbar_min = 2 + (c-2)/(2-z),  zbar_max = -2 - (c-2)/(2+z).
std::pair<double, double> zbar_extrema(double c, double z);

// Finitely many overlapping open intervals (in z) whose union covers the
// admissible elliptic band {z in (-2,2) : z^2 - c - 2 > 0}, each of the
// form (zbar_min(c,z_n), zbar_max(c,z_n)) cap (-2,2).
struct Interval {
  double lo = 0, hi = 0;
  double z_n = 0;  // the slice generating the interval
};
std::vector<Interval> interval_cover(double c);

// ---------------------------------------------------------------------------
// Point types on hyperbolic slices, by the signs of the tau increments.

enum class PointType { PP, PM, MP, Zero };

template <class T>
PointType point_type(const Character<T>& u, const Tolerance& tol = {}) {
  if (!strictly_greater(abs_value(u.z), T(2), tol))
    throw NotHyperbolicSlice("point_type requires |z| > 2");
  const T t0 = tau(u);
  const T dx = tau(charflow::apply(Generator::Qx, u)) - t0;
  const T dy = tau(charflow::apply(Generator::Qy, u)) - t0;
  if (approx_eq(dx, T(0), tol) || approx_eq(dy, T(0), tol)) return PointType::Zero;
  if (dx > T(0)) return dy > T(0) ? PointType::PP : PointType::PM;
  return dy > T(0) ? PointType::MP : PointType::Zero;  // (-,-) cannot occur
}

}  // namespace charflow
