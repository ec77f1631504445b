#include "charflow/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "charflow/errors.hpp"
#include "charflow/geometry.hpp"

namespace charflow {

namespace {

constexpr int kMaxRejects = 1'000'000;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// (x, y, z) with z a root of t^2 + xy t - (x^2 + y^2 + 2 + c) lies on
// kappa^{-1}(c); the other root is zbar of the point.
std::pair<double, double> slice_roots(double c, double x, double y) {
  const double d = x * y * x * y + 4 * (x * x + y * y + 2 + c);
  if (d < 0) return {std::nan(""), std::nan("")};
  const double s = std::sqrt(d);
  return {(-x * y - s) / 2, (-x * y + s) / 2};
}

// Sample on the slice of kappa^{-1}(c) at a prescribed zbar value, then
// recover z from the Vieta pairing z + zbar = -xy.
Character<double> point_at_zbar(double c, double zb, Rng& rng) {
  ConicSlice s = slice(c, zb);
  std::pair<double, double> xy;
  if (s.kind == SliceKind::Ellipse) {
    xy = ellipse_point(s, uniform(rng, 0, 2 * std::numbers::pi));
  } else {
    Branch br = rng() & 1 ? Branch::Plus : Branch::Minus;
    xy = hyperbola_point(s, uniform(rng, -3.0, 3.0), br);
  }
  return {xy.first, xy.second, -xy.first * xy.second - zb, Component::C11};
}

}  // namespace

Region parse_region(const std::string& s) {
  if (s == "omegaM") return Region::OmegaM;
  if (s == "omegaK") return Region::OmegaK;
  if (s == "E") return Region::Elliptic;
  if (s == "H") return Region::Hyperbolic;
  throw ParseError("unknown region '" + s + "' (expected omegaM, omegaK, E, H)");
}

Character<double> sample_omega0_M(double c, Rng& rng) {
  if (c >= -14) throw EmptyRegion("Omega_0^M meets kappa^{-1}(c) only for c < -14");
  // Constructive: pick the root pair (z, zbar) first. Writing a = 2 - z,
  // b = 2 - zbar (both > 4), any a b < 2 - c admits real x, y with
  // xy = -(z + zbar) and x^2 + y^2 = -z zbar - 2 - c, and then kappa = c
  // holds identically. Rejection on (x, y) instead collapses near c = -14.
  const double P = 2 - c;  // > 16
  const double a = uniform(rng, 4, P / 4);
  const double b = uniform(rng, 4, P / a);
  const double z = 2 - a, zb = 2 - b;
  const double sum_sq = -z * zb - 2 - c;            // x^2 + y^2
  const double prod2 = -2 * (z + zb);               // 2xy
  const double xpy = std::sqrt(sum_sq + prod2);     // x + y
  const double xmy = std::sqrt(std::max(0.0, sum_sq - prod2));  // x - y
  double x = (xpy + xmy) / 2, y = (xpy - xmy) / 2;
  if (rng() & 1) { x = -x; y = -y; }  // sigma_xy fixes z and zbar
  return {x, y, z, Component::C11};
}

namespace {

Character<double> sample_omega0_K(double c, Rng& rng) {
  if (c <= 6) throw EmptyRegion("Omega_0^K meets kappa^{-1}(c) only for c > 6");
  // members exist for x ~ y ~ 4/sqrt(c-6) when c is near 6
  const double L = 4 / std::sqrt(c - 6) + 8;
  for (int k = 0; k < kMaxRejects; ++k) {
    double x = uniform(rng, 2.0, L);
    double y = uniform(rng, 2.0, L);
    auto [zlo, zhi] = slice_roots(c, x, y);
    if (std::isnan(zlo)) continue;
    for (double z : {zhi, zlo})
      if (x * x + y * y - x * y * z + 4 < 0) return {x, y, z, Component::C11};
  }
  throw EmptyRegion("Omega_0^K sampler failed to accept");
}

double sample_admissible_z(double c, Rng& rng) {
  // z in (-2,2) with z^2 > c + 2
  if (c < -2) return uniform(rng, -2.0, 2.0);
  const double g = std::sqrt(c + 2);
  double z = uniform(rng, g, 2.0);
  return rng() & 1 ? z : -z;
}

}  // namespace

std::vector<Character<double>> sample_region(double c, Region region, std::size_t n,
                                             Rng& rng) {
  std::vector<Character<double>> out;
  out.reserve(n);
  switch (region) {
    case Region::OmegaM:
      for (std::size_t i = 0; i < n; ++i) out.push_back(sample_omega0_M(c, rng));
      break;
    case Region::OmegaK:
      for (std::size_t i = 0; i < n; ++i) out.push_back(sample_omega0_K(c, rng));
      break;
    case Region::Elliptic:
      // zbar in (-2, 2) forces an admissible elliptic slice, so c < 2
      if (c >= 2) throw EmptyRegion("elliptic region is empty for c >= 2");
      for (std::size_t i = 0; i < n; ++i)
        out.push_back(point_at_zbar(c, sample_admissible_z(c, rng), rng));
      break;
    case Region::Hyperbolic:
      for (std::size_t i = 0; i < n; ++i) {
        double lo = std::max(2.0, c > -2 ? std::sqrt(c + 2) : 0.0) + 1e-6;
        double zb = uniform(rng, lo + 0.01, lo + 6.0);
        if (rng() & 1) zb = -zb;
        out.push_back(point_at_zbar(c, zb, rng));
      }
      break;
  }
  return out;
}

Character<Rational> random_rational_character(Rng& rng, int max_abs_num, int max_den) {
  auto coord = [&] {
    int num = static_cast<int>(rng() % (2 * max_abs_num + 1)) - max_abs_num;
    int den = 1 + static_cast<int>(rng() % max_den);
    return Rational(num, den);
  };
  return {coord(), coord(), coord(), Component::C11};
}

Character<Rational> random_rational_omega0_M(Rng& rng) {
  // x, y rational with xy > 4; any rational z in (2 - xy, -2) then gives
  // zbar = -xy - z in (-2 - ... , -2), i.e. both z and zbar below -2.
  for (;;) {
    int xn = 3 + static_cast<int>(rng() % 12);
    int yn = 3 + static_cast<int>(rng() % 12);
    int xd = 1 + static_cast<int>(rng() % 3);
    int yd = 1 + static_cast<int>(rng() % 3);
    Rational x(xn, xd), y(yn, yd);
    Rational p = x * y;
    if (p <= 4) continue;
    // z = (2 - xy) * t + (-2) * (1 - t) for t in (0,1), rational t
    int tn = 1 + static_cast<int>(rng() % 15);
    Rational t(tn, 16);
    Rational z = (Rational(2) - p) * t + Rational(-2) * (Rational(1) - t);
    if (!(z < -2 && -p - z < -2)) continue;
    if (rng() & 1) { x = -x; y = -y; }
    return {x, y, z, Component::C11};
  }
}

GroupWord random_lambda_word(std::size_t length, Rng& rng, bool avoid_qz_first) {
  static const Generator qs[3] = {Generator::Qx, Generator::Qy, Generator::Qz};
  GroupWord w;
  w.reduced = true;
  for (std::size_t i = 0; i < length; ++i) {
    Generator g;
    do {
      g = qs[rng() % (i == 0 && avoid_qz_first ? 2 : 3)];
    } while (!w.letters.empty() && g == w.letters.back());
    w.letters.push_back(g);
  }
  return w;
}

GroupWord random_gamma_word(std::size_t length, Rng& rng) {
  static const Generator all[7] = {Generator::Qx,      Generator::Qy,
                                   Generator::Qz,      Generator::SigmaXZ,
                                   Generator::SigmaYZ, Generator::SigmaXY,
                                   Generator::Txy};
  GroupWord w;
  for (std::size_t i = 0; i < length; ++i) w.letters.push_back(all[rng() % 7]);
  return reduce_word(w);
}

}  // namespace charflow
