#include <doctest.h>

#include <cmath>

#include "charflow/geometry.hpp"
#include "charflow/kernels.hpp"
#include "charflow/sampling.hpp"

using namespace charflow;

namespace {

std::vector<Character<double>> batch(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Character<double>> pts;
  pts.reserve(n);
  std::uniform_real_distribution<double> d(-6.0, 6.0);
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({d(rng), d(rng), d(rng), Component::C11});
  return pts;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("kappa batch: serial == parallel") {
  auto pts = batch(10'000, 51);
  auto s = kappa_batch_serial(pts);
  auto p = kappa_batch_parallel(pts);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i] == p[i]);
    CHECK(s[i] == kappa(pts[i]));
  }
}

TEST_CASE("invariance residual: serial == parallel, and small") {
  auto pts = batch(2'000, 53);
  Rng rng(54);
  std::vector<GroupWord> words;
  for (std::size_t i = 0; i < pts.size(); ++i)
    words.push_back(random_lambda_word(1 + rng() % 6, rng));
  double s = kappa_invariance_residual_serial(pts, words);
  double p = kappa_invariance_residual_parallel(pts, words);
  CHECK(s == p);
  CHECK(s >= 0);
}

TEST_CASE("reduce batch: serial == parallel") {
  auto pts = batch(500, 57);
  auto s = reduce_batch_serial(pts, Tolerance{}, 2'000);
  auto p = reduce_batch_parallel(pts, Tolerance{}, 2'000);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == p[i]);
}

TEST_CASE("zbar sweep: serial == parallel, matches closed form") {
  for (auto [c, z] : {std::pair{-14.0, 0.0}, {-14.0, 1.0}, {-6.0, 0.5}}) {
    auto s = zbar_sweep_serial(c, z, 200'000);
    auto p = zbar_sweep_parallel(c, z, 200'000);
    CHECK(s.first == p.first);
    CHECK(s.second == p.second);
    auto [lo, hi] = zbar_extrema(c, z);
    CHECK(s.first == doctest::Approx(lo).epsilon(1e-6));
    CHECK(s.second == doctest::Approx(hi).epsilon(1e-6));
  }
}

TEST_CASE("tree monotonicity: serial == parallel, zero on Omega_0^M roots") {
  Rng rng(61);
  std::vector<Character<double>> roots;
  for (int i = 0; i < 50; ++i) roots.push_back(sample_omega0_M(-20, rng));
  auto s = tree_monotonicity_violations_serial(roots, 6, 1e-9);
  auto p = tree_monotonicity_violations_parallel(roots, 6, 1e-9);
  CHECK(s == p);
  CHECK(s == 0);
}

}  // TEST_SUITE
