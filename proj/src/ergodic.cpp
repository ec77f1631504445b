#include "charflow/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "charflow/errors.hpp"
#include "charflow/fricke.hpp"
#include "charflow/geometry.hpp"
#include "charflow/group.hpp"

namespace charflow {

namespace {

// One turn of the slice rotation: Qx then Qy (rotation by +alpha in the
// ellipse parametrization).
Character<double> rotate(const Character<double>& u) {
  return charflow::apply(Generator::Qy, charflow::apply(Generator::Qx, u));
}

double angle_of(const ConicSlice& s, double x, double y) {
  // invert ellipse_point: cos = (y-x)/(sqrt2 A), sin = (x+y)/(sqrt2 B)
  const double co = (y - x) / (std::numbers::sqrt2 * s.a);
  const double si = (x + y) / (std::numbers::sqrt2 * s.b);
  double th = std::atan2(si, co);
  return th < 0 ? th + 2 * std::numbers::pi : th;
}

std::vector<HistogramBin> make_bins(double lo, double hi, std::size_t n) {
  std::vector<HistogramBin> bins(n);
  for (std::size_t i = 0; i < n; ++i) {
    bins[i].lo = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    bins[i].hi = lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(n);
  }
  return bins;
}

void tally(std::vector<HistogramBin>& bins, double lo, double hi, double v) {
  if (!(v >= lo && v < hi)) return;
  auto i = static_cast<std::size_t>((v - lo) / (hi - lo) * static_cast<double>(bins.size()));
  if (i < bins.size()) ++bins[i].count;
}

double bin_coverage(const std::vector<HistogramBin>& bins) {
  std::size_t hit = 0;
  for (const auto& b : bins) hit += b.count > 0;
  return static_cast<double>(hit) / static_cast<double>(bins.size());
}

}  // namespace

std::vector<std::pair<double, double>> rotation_orbit(double c, double z, double theta0,
                                                      std::uint64_t n) {
  ConicSlice s = slice(c, z);
  if (s.kind != SliceKind::Ellipse)
    throw KindMismatch("rotation_orbit requires an elliptic slice");
  auto [x0, y0] = ellipse_point(s, theta0);
  Character<double> u{x0, y0, z, Component::C11};
  std::vector<std::pair<double, double>> orbit;
  orbit.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    orbit.emplace_back(u.x, u.y);
    u = rotate(u);
  }
  return orbit;
}

double measured_rotation_step(double c, double z, double theta0, std::uint64_t n) {
  ConicSlice s = slice(c, z);
  auto orbit = rotation_orbit(c, z, theta0, n < 2 ? 2 : n);
  const double twopi = 2 * std::numbers::pi;
  double sum = 0;
  for (std::size_t k = 1; k < orbit.size(); ++k) {
    double d = angle_of(s, orbit[k].first, orbit[k].second) -
               angle_of(s, orbit[k - 1].first, orbit[k - 1].second);
    d = std::fmod(d + twopi, twopi);
    sum += d;
  }
  return sum / static_cast<double>(orbit.size() - 1);
}

std::uint64_t orbit_period(double c, double z, double theta0, std::uint64_t limit,
                           double tol) {
  ConicSlice s = slice(c, z);
  if (s.kind != SliceKind::Ellipse)
    throw KindMismatch("orbit_period requires an elliptic slice");
  auto [x0, y0] = ellipse_point(s, theta0);
  Character<double> u{x0, y0, z, Component::C11};
  for (std::uint64_t k = 1; k <= limit; ++k) {
    u = rotate(u);
    if (std::abs(u.x - x0) < tol && std::abs(u.y - y0) < tol) return k;
  }
  return 0;
}

ErgodicReport zbar_coverage(double c, double z, std::uint64_t n, std::size_t bins,
                            std::uint64_t seed) {
  ConicSlice s = slice(c, z);
  if (s.kind != SliceKind::Ellipse)
    throw KindMismatch("zbar_coverage requires an elliptic slice");
  auto [zmn, zmx] = zbar_extrema(c, z);
  ErgodicReport rep;
  rep.c = c;
  rep.z = z;
  rep.iterations = n;
  rep.seed = seed;
  rep.histogram = make_bins(zmn, zmx, bins);

  Rng rng(seed);
  double theta0 = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
  auto [x0, y0] = ellipse_point(s, theta0);
  Character<double> u{x0, y0, z, Component::C11};
  std::vector<double> angles;
  const std::size_t angle_cap = 200'000;  // discrepancy sample, memory-bounded
  angles.reserve(std::min<std::uint64_t>(n, angle_cap));
  for (std::uint64_t k = 0; k < n; ++k) {
    const double zb = zbar(u);
    tally(rep.histogram, zmn, zmx, std::min(zb, std::nextafter(zmx, zmn)));
    if (angles.size() < angle_cap)
      angles.push_back(angle_of(s, u.x, u.y) / (2 * std::numbers::pi));
    rep.max_kappa_drift = std::max(rep.max_kappa_drift, std::abs(kappa(u) - c));
    u = rotate(u);
    if ((k + 1) % kRenormInterval == 0) {
      // re-anchor on the exact ellipse to stop float drift
      auto [x, y] = ellipse_point(s, angle_of(s, u.x, u.y));
      u.x = x;
      u.y = y;
    }
  }
  rep.coverage = bin_coverage(rep.histogram);
  rep.discrepancy = star_discrepancy(angles);
  return rep;
}

ErgodicReport slice_chain_walk(double c, const Character<double>& start, std::uint64_t n,
                               std::uint64_t seed, std::size_t bins) {
  detail::require_c11(start, "slice_chain_walk");
  ErgodicReport rep;
  rep.c = c;
  rep.z = std::nan("");
  rep.sweep = true;
  rep.iterations = n;
  rep.seed = seed;
  rep.histogram = make_bins(-2, 2, bins);

  Rng rng(seed);
  Character<double> u = start;
  const Tolerance tol;
  for (std::uint64_t k = 0; k < n; ++k) {
    tally(rep.histogram, -2, 2, u.z);
    if (in_omega0_M(u, tol).member) ++rep.flagged;
    const double zb = zbar(u);
    if (std::abs(u.z) >= 2) {
      // off the elliptic band: jump back if possible, else the walk is stuck
      if (std::abs(zb) < 2) {
        u = charflow::apply(Generator::Qz, u);
      } else {
        rep.escaped = true;
        break;
      }
      continue;
    }
    if (std::abs(zb) < 2 && (rng() & 1))
      u = charflow::apply(Generator::Qz, u);  // hop to the slice at height zbar
    else
      u = rotate(u);
    if ((k + 1) % kRenormInterval == 0) {
      // project z back onto the exact slice quadratic, holding x and y
      const double p = u.x * u.y;
      const double d = p * p + 4 * (u.x * u.x + u.y * u.y + 2 + c);
      if (d >= 0) {
        const double s = std::sqrt(d);
        const double r1 = (-p - s) / 2, r2 = (-p + s) / 2;
        u.z = std::abs(u.z - r1) <= std::abs(u.z - r2) ? r1 : r2;
      }
    }
    rep.max_kappa_drift = std::max(rep.max_kappa_drift, std::abs(kappa(u) - c));
  }
  rep.coverage = bin_coverage(rep.histogram);
  return rep;
}

ErgodicReport markoff_probe(double radius, std::uint64_t n, std::uint64_t seed,
                            std::size_t grid) {
  const double c = -2;
  ErgodicReport rep;
  rep.c = c;
  rep.z = std::nan("");
  rep.sweep = true;
  rep.iterations = n;
  rep.seed = seed;

  Rng rng(seed);
  auto restart = [&] {
    // small x, y; z always real at this level since the discriminant is
    // (xy)^2 + 4(x^2 + y^2) >= 0
    const double x = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    const double y = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    const double p = x * y;
    const double s = std::sqrt(p * p + 4 * (x * x + y * y));
    const double z = rng() & 1 ? (-p - s) / 2 : (-p + s) / 2;
    return Character<double>{x, y, z, Component::C11};
  };

  const auto g = static_cast<double>(grid);
  auto cell = [&](const Character<double>& u) -> long {
    auto idx = [&](double v) {
      return static_cast<long>(std::floor((v + radius) / (2 * radius) * g));
    };
    long i = idx(u.x), j = idx(u.y), k = idx(u.z);
    if (i < 0 || j < 0 || k < 0 || i >= static_cast<long>(grid) ||
        j >= static_cast<long>(grid) || k >= static_cast<long>(grid))
      return -1;
    return (i * static_cast<long>(grid) + j) * static_cast<long>(grid) + k;
  };

  std::set<long> visited;
  static const Generator qs[3] = {Generator::Qx, Generator::Qy, Generator::Qz};
  Character<double> u = restart();
  for (std::uint64_t k = 0; k < n; ++k) {
    if (std::abs(u.x) > 2 || std::abs(u.y) > 2 || std::abs(u.z) > 2) {
      ++rep.flagged;
      u = restart();
    }
    if (u.x * u.x + u.y * u.y + u.z * u.z <= radius * radius) {
      long id = cell(u);
      if (id >= 0) visited.insert(id);
    }
    u = charflow::apply(qs[rng() % 3], u);
  }

  // denominator: grid cells whose center lies in the radius ball
  std::size_t in_ball = 0;
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = 0; j < grid; ++j)
      for (std::size_t k = 0; k < grid; ++k) {
        auto ctr = [&](std::size_t t) {
          return -radius + (2 * radius) * (static_cast<double>(t) + 0.5) / g;
        };
        double x = ctr(i), y = ctr(j), z = ctr(k);
        if (x * x + y * y + z * z <= radius * radius) ++in_ball;
      }
  rep.coverage = in_ball ? static_cast<double>(visited.size()) / static_cast<double>(in_ball)
                         : 0.0;
  rep.escaped = rep.flagged > 0;
  return rep;
}

double star_discrepancy(const std::vector<double>& xs) {
  if (xs.empty()) return 1.0;
  std::vector<double> s = xs;
  std::sort(s.begin(), s.end());
  const auto n = static_cast<double>(s.size());
  double d = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto di = static_cast<double>(i);
    d = std::max(d, std::max((di + 1) / n - s[i], s[i] - di / n));
  }
  return d;
}

}  // namespace charflow
