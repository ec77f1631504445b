// Throughput comparison of the serial and OpenMP kernel variants.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "charflow/charflow.hpp"

namespace cf = charflow;

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f) {
  auto t0 = Clock::now();
  f();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200'000;
  cf::Rng rng(42);

  std::vector<cf::Character<double>> pts;
  pts.reserve(n);
  std::uniform_real_distribution<double> coord(-6.0, 6.0);
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({coord(rng), coord(rng), coord(rng), cf::Component::C11});

  std::vector<cf::GroupWord> words;
  words.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    words.push_back(cf::random_lambda_word(1 + rng() % 12, rng));

  std::printf("threads: %d, batch: %zu\n", omp_get_max_threads(), n);
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    std::vector<double> a, b;
    double ts = time_ms([&] { a = cf::kappa_batch_serial(pts); });
    double tp = time_ms([&] { b = cf::kappa_batch_parallel(pts); });
    row("kappa_batch", ts, tp);
  }
  {
    double ts = time_ms([&] { (void)cf::kappa_invariance_residual_serial(pts, words); });
    double tp = time_ms([&] { (void)cf::kappa_invariance_residual_parallel(pts, words); });
    row("kappa_invariance_residual", ts, tp);
  }
  {
    std::vector<cf::Character<double>> omega;
    cf::Rng r2(7);
    for (std::size_t i = 0; i < std::min<std::size_t>(n / 20, 5'000); ++i)
      omega.push_back(cf::sample_omega0_M(-24, r2));
    cf::Tolerance tol;
    double ts = time_ms([&] { (void)cf::reduce_batch_serial(omega, tol, 10'000); });
    double tp = time_ms([&] { (void)cf::reduce_batch_parallel(omega, tol, 10'000); });
    row("reduce_batch", ts, tp);

    double us = time_ms(
        [&] { (void)cf::tree_monotonicity_violations_serial(omega, 8, 1e-9); });
    double up = time_ms(
        [&] { (void)cf::tree_monotonicity_violations_parallel(omega, 8, 1e-9); });
    row("tree_monotonicity", us, up);
  }
  {
    double ts = time_ms([&] { (void)cf::zbar_sweep_serial(-5, 0.37, 2'000'000); });
    double tp = time_ms([&] { (void)cf::zbar_sweep_parallel(-5, 0.37, 2'000'000); });
    row("zbar_sweep", ts, tp);
  }
  return 0;
}
