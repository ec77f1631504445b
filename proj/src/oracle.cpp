#include "charflow/oracle.hpp"

#include <cmath>
#include <vector>

namespace charflow {

namespace {

bool fricke_flag(const Character<Rational>& v) {
  const Rational zb = zbar(v);
  return (v.z < -2 && zb < -2) || (v.z > 2 && zb > 2);
}

bool elliptic_flag(const Character<Rational>& v) {
  return abs_value(v.z) < 2 || abs_value(zbar(v)) < 2;
}

bool sigma_zero_flag(const Character<Rational>& v) { return v.x == 0 || v.y == 0; }

}  // namespace

BruteforceResult classify_bruteforce_full(const Character<Rational>& u,
                                          std::size_t max_len) {
  detail::require_c11(u, "classify_bruteforce_full");
  BruteforceResult res;
  auto visit = [&](const Character<Rational>& v) {
    if (fricke_flag(v)) res.found_fricke = true;
    if (elliptic_flag(v)) res.found_elliptic = true;
    if (sigma_zero_flag(v)) res.found_sigma_zero = true;
  };
  struct Item {
    char last;
    Character<Rational> value;
  };
  std::vector<Item> frontier{{'\0', u}};
  visit(u);
  for (std::size_t len = 0; len < max_len && !res.found_fricke; ++len) {
    std::vector<Item> next;
    next.reserve(frontier.size() * 2);
    for (const auto& item : frontier) {
      for (Generator g : {Generator::Qx, Generator::Qy, Generator::Qz}) {
        const char letter = generator_letter(g);
        if (item.last == letter) continue;
        Item child{letter, charflow::apply(g, item.value)};
        visit(child.value);
        if (res.found_fricke) break;
        next.push_back(std::move(child));
      }
      if (res.found_fricke) break;
    }
    frontier = std::move(next);
  }
  if (res.found_fricke)
    res.cls = TerminatorClass::FrickeM;
  else if (res.found_elliptic)
    res.cls = TerminatorClass::EllipticE;
  else if (res.found_sigma_zero)
    res.cls = TerminatorClass::SigmaZero;
  return res;
}

namespace {

// Feasibility of Omega_0^M on kappa^{-1}(c): grid search over the root
// pair (z, zbar) = (2 - a, 2 - b). A pair a, b > 4 yields a member iff
// x, y can be reconstructed, which needs ab < 2 - c; each hit is verified
// by evaluating the membership inequalities on the reconstructed point.
bool moebius_feasible(double c, std::size_t grid) {
  const double step = 1.0 / static_cast<double>(grid);
  for (std::size_t i = 1; i <= grid; ++i) {
    const double a = 4 + step * static_cast<double>(i);
    for (std::size_t j = 1; j <= grid; ++j) {
      const double b = 4 + step * static_cast<double>(j);
      if (a * b >= 2 - c) break;
      const double z = 2 - a, zb = 2 - b;
      const double sum_sq = -z * zb - 2 - c;
      const double prod2 = -2 * (z + zb);
      if (sum_sq < prod2) continue;
      const double x = (std::sqrt(sum_sq + prod2) + std::sqrt(sum_sq - prod2)) / 2;
      const double y = (std::sqrt(sum_sq + prod2) - std::sqrt(sum_sq - prod2)) / 2;
      Character<double> u{x, y, z, Component::C11};
      if (in_omega0_M(u).member && std::abs(to_double(kappa(u)) - c) < 1e-6) return true;
    }
  }
  return false;
}

// Feasibility of Omega_0^K: scan the diagonal x = y = t, where the domain
// first appears as c decreases to its threshold.
bool klein_feasible(double c, std::size_t grid) {
  for (std::size_t i = 0; i < grid * 40; ++i) {
    const double t = 2.0 + 0.05 * static_cast<double>(i);  // up to t ~ 2 + 2*grid
    const double p = t * t;
    const double d = p * p + 4 * (2 * p + 2 + c);
    if (d < 0) continue;
    const double z = (-p + std::sqrt(d)) / 2;
    if (2 * p - p * z + 4 < 0) return true;
  }
  return false;
}

}  // namespace

double threshold_search(Surface surface, double c_lo, double c_hi, std::size_t grid) {
  auto feasible = [&](double c) {
    return surface == Surface::MoebiusM ? moebius_feasible(c, grid * 4)
                                        : klein_feasible(c, grid * 4);
  };
  bool lo_ok = feasible(c_lo);
  bool hi_ok = feasible(c_hi);
  if (lo_ok == hi_ok)
    throw PreconditionViolated("threshold_search bracket does not straddle the boundary");
  double lo = c_lo, hi = c_hi;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = (lo + hi) / 2;
    if (feasible(mid) == lo_ok)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace charflow
