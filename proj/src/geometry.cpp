#include "charflow/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace charflow {

ConicSlice slice(double c, double z) {
  ConicSlice s;
  s.c = c;
  s.z = z;
  const double k = z * z - c - 2;
  if (k <= 0 || std::abs(z) == 2) {
    s.kind = SliceKind::Degenerate;
    return s;
  }
  if (std::abs(z) > 2) {
    s.kind = SliceKind::Hyperbola;
    s.a = std::sqrt(2 * std::abs(k / (z + 2)));
    s.b = std::sqrt(2 * std::abs(k / (z - 2)));
  } else {
    s.kind = SliceKind::Ellipse;
    s.a = std::sqrt(2 * k / (2 + z));  // A
    s.b = std::sqrt(2 * k / (2 - z));  // B
  }
  return s;
}

std::pair<double, double> hyperbola_point(const ConicSlice& s, double t, Branch branch) {
  if (s.kind != SliceKind::Hyperbola)
    throw KindMismatch("hyperbola_point requires a hyperbolic slice");
  const double sgn = branch == Branch::Plus ? 1.0 : -1.0;
  const double r = std::numbers::sqrt2 / 2;
  if (s.z < -2) {
    // canonical form -xt^2/a^2 + yt^2/b^2 = 1
    const double xt = s.a * std::sinh(t);
    const double yt = sgn * s.b * std::cosh(t);
    return {r * (-xt + yt), r * (xt + yt)};
  }
  // z > 2: xt^2/a^2 - yt^2/b^2 = 1
  const double xt = sgn * s.a * std::cosh(t);
  const double yt = s.b * std::sinh(t);
  return {r * (-xt + yt), r * (xt + yt)};
}

std::pair<double, double> ellipse_point(const ConicSlice& s, double theta) {
  if (s.kind != SliceKind::Ellipse)
    throw KindMismatch("ellipse_point requires an elliptic slice");
  const double r = std::numbers::sqrt2 / 2;
  const double ac = s.a * std::cos(theta);
  const double bs = s.b * std::sin(theta);
  return {r * (-ac + bs), r * (ac + bs)};
}

double rotation_angle(double z) {
  if (!(z > -2 && z < 2)) throw OutOfRange("rotation angle requires -2 < z < 2");
  return 2 * std::acos(z / 2);
}

std::pair<double, double> zbar_extrema(double c, double z) {
  if (!(std::abs(z) < 2) || z * z - c - 2 <= 0)
    throw DegenerateSlice("zbar extrema require a nondegenerate elliptic slice");
  return {2 + (c - 2) / (2 - z), -2 - (c - 2) / (2 + z)};
}

namespace {

// Admissible elliptic band: components of {z in (-2,2): z^2 - c - 2 > 0}.
// For c < -2 this is the whole interval; otherwise a symmetric gap of
// half-width sqrt(c+2) opens around 0 (slices in the gap are empty).
std::vector<std::pair<double, double>> admissible_components(double c) {
  if (c < -2) return {{-2.0, 2.0}};
  const double g = std::sqrt(c + 2);
  return {{-2.0, -g}, {g, 2.0}};
}

// Largest admissible z strictly below `cap` (with a safety offset), or
// NaN when the admissible set lies entirely above cap.
double largest_admissible_below(const std::vector<std::pair<double, double>>& comps,
                                double cap, double delta) {
  double best = std::numeric_limits<double>::quiet_NaN();
  for (auto [lo, hi] : comps) {
    double candidate = std::min(hi - delta, cap - delta);
    if (candidate > lo + delta &&
        (std::isnan(best) || candidate > best))
      best = candidate;
  }
  return best;
}

double smallest_admissible_above(const std::vector<std::pair<double, double>>& comps,
                                 double floor_, double delta) {
  double best = std::numeric_limits<double>::quiet_NaN();
  for (auto [lo, hi] : comps) {
    double candidate = std::max(lo + delta, floor_ + delta);
    if (candidate < hi - delta &&
        (std::isnan(best) || candidate < best))
      best = candidate;
  }
  return best;
}

}  // namespace

std::vector<Interval> interval_cover(double c) {
  if (!(c >= -14 && c < 2)) throw OutOfRange("interval_cover requires -14 <= c < 2");
  const double delta = 1e-7;
  const double margin = 1e-4;  // the open band is covered up to this offset
  const auto comps = admissible_components(c);
  std::vector<Interval> cover;
  auto push = [&](double zn) {
    auto [mn, mx] = zbar_extrema(c, zn);
    cover.push_back({std::max(mn, -2.0), std::min(mx, 2.0), zn});
    return cover.back();
  };

  // zbar_min(c,.) and zbar_max(c,.) are both decreasing in z, so the
  // extremal admissible slice for a given frontier is explicit:
  //   zbar_max(c,z) > l  <=>  z < -2 + (2-c)/(l+2)
  //   zbar_min(c,z) < r  <=>  z > 2 - (2-c)/(2-r)
  // For c >= -2 a slice in one band component produces a zbar interval in
  // the mirror component, so the chains below pick their own generators.
  auto extend_left = [&](double from, double tlo) {
    double l = from;
    int guard = 0;
    while (l > tlo + margin) {
      double zn = largest_admissible_below(comps, -2 + (2 - c) / (l + 2), delta);
      if (std::isnan(zn)) throw CoverFailure("no admissible slice extends leftward");
      Interval iv = push(zn);
      if (iv.lo >= l) throw CoverFailure("leftward chain stalled");
      l = iv.lo;
      if (++guard > 100000) throw CoverFailure("leftward chain did not converge");
    }
  };
  auto extend_right = [&](double from, double thi) {
    double r = from;
    int guard = 0;
    while (r < thi - margin) {
      double zn = smallest_admissible_above(comps, 2 - (2 - c) / (2 - r), delta);
      if (std::isnan(zn)) throw CoverFailure("no admissible slice extends rightward");
      Interval iv = push(zn);
      if (iv.hi <= r) throw CoverFailure("rightward chain stalled");
      r = iv.hi;
      if (++guard > 100000) throw CoverFailure("rightward chain did not converge");
    }
  };

  if (c < -2) {
    // single band: seed at z = 0, then chain both ways
    Interval seed = push(0.0);
    extend_right(seed.hi, 2.0);
    extend_left(seed.lo, -2.0);
  } else {
    const double g = std::sqrt(c + 2);
    extend_left(-g - margin, -2.0);  // left band, fed by slices near z = g
    extend_right(g + margin, 2.0);   // right band, fed by slices near z = -g
  }
  return cover;
}

}  // namespace charflow
