#include "charflow/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "charflow/geometry.hpp"

namespace charflow {

std::vector<double> kappa_batch_serial(const std::vector<Character<double>>& pts) {
  std::vector<double> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) out[i] = kappa(pts[i]);
  return out;
}

std::vector<double> kappa_batch_parallel(const std::vector<Character<double>>& pts) {
  std::vector<double> out(pts.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pts.size()); ++i)
    out[i] = kappa(pts[i]);
  return out;
}

namespace {

double invariance_residual_one(const Character<double>& u, const GroupWord& w) {
  return std::abs(kappa(apply_word(w, u)) - kappa(u));
}

}  // namespace

double kappa_invariance_residual_serial(const std::vector<Character<double>>& pts,
                                        const std::vector<GroupWord>& words) {
  double worst = 0;
  const std::size_t n = std::min(pts.size(), words.size());
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max(worst, invariance_residual_one(pts[i], words[i]));
  return worst;
}

double kappa_invariance_residual_parallel(const std::vector<Character<double>>& pts,
                                          const std::vector<GroupWord>& words) {
  double worst = 0;
  const auto n = static_cast<std::ptrdiff_t>(std::min(pts.size(), words.size()));
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    worst = std::max(worst, invariance_residual_one(pts[i], words[i]));
  return worst;
}

std::vector<TerminatorClass> reduce_batch_serial(const std::vector<Character<double>>& pts,
                                                 const Tolerance& tol,
                                                 std::size_t max_steps) {
  std::vector<TerminatorClass> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    out[i] = tau_reduce(pts[i], tol, max_steps).cls;
  return out;
}

std::vector<TerminatorClass> reduce_batch_parallel(const std::vector<Character<double>>& pts,
                                                   const Tolerance& tol,
                                                   std::size_t max_steps) {
  std::vector<TerminatorClass> out(pts.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pts.size()); ++i)
    out[i] = tau_reduce(pts[i], tol, max_steps).cls;
  return out;
}

namespace {

std::pair<double, double> zbar_at(double c, double z, double theta) {
  ConicSlice s = slice(c, z);
  auto [x, y] = ellipse_point(s, theta);
  return {-x * y - z, 0.0};
}

}  // namespace

std::pair<double, double> zbar_sweep_serial(double c, double z, std::size_t n) {
  double mn = std::numeric_limits<double>::infinity(), mx = -mn;
  for (std::size_t i = 0; i < n; ++i) {
    double theta = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    double zb = zbar_at(c, z, theta).first;
    mn = std::min(mn, zb);
    mx = std::max(mx, zb);
  }
  return {mn, mx};
}

std::pair<double, double> zbar_sweep_parallel(double c, double z, std::size_t n) {
  double mn = std::numeric_limits<double>::infinity(), mx = -mn;
#pragma omp parallel for schedule(static) reduction(min : mn) reduction(max : mx)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    double theta = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    double zb = zbar_at(c, z, theta).first;
    mn = std::min(mn, zb);
    mx = std::max(mx, zb);
  }
  return {mn, mx};
}

namespace {

std::uint64_t tree_violations_one(const Character<double>& root, std::size_t depth,
                                  double slack) {
  auto tree = orbit_tree(root, depth);
  std::uint64_t bad = 0;
  // Recomputing tau at a Qz child from its coordinates cancels
  // catastrophically (|xy| >> |z| there), so use the exact identity
  // tau(Qz u) = tau(u) and evaluate coordinates only across Qx/Qy steps.
  std::vector<double> node_tau(tree.nodes.size());
  node_tau[0] = tau(tree.nodes[0].value);
  std::vector<double> max_child_tau(tree.nodes.size(),
                                    -std::numeric_limits<double>::infinity());
  std::vector<bool> has_child(tree.nodes.size(), false);
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    const double tp = node_tau[static_cast<std::size_t>(node.parent)];
    const double tc = node.word.back() == 'z' ? tp : tau(node.value);
    node_tau[i] = tc;
    // slack is relative: tau spans many orders of magnitude down the tree
    if (tc < tp - slack * std::max(1.0, std::abs(tp))) ++bad;
    auto p = static_cast<std::size_t>(node.parent);
    has_child[p] = true;
    max_child_tau[p] = std::max(max_child_tau[p], tc);
  }
  // every internal node must have at least one strictly increasing child
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    if (has_child[i]) {
      const double ti = node_tau[i];
      if (!(max_child_tau[i] > ti + slack * std::max(1.0, std::abs(ti)))) ++bad;
    }
  return bad;
}

}  // namespace

std::uint64_t tree_monotonicity_violations_serial(
    const std::vector<Character<double>>& roots, std::size_t depth, double slack) {
  std::uint64_t total = 0;
  for (const auto& r : roots) total += tree_violations_one(r, depth, slack);
  return total;
}

std::uint64_t tree_monotonicity_violations_parallel(
    const std::vector<Character<double>>& roots, std::size_t depth, double slack) {
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(roots.size()); ++i)
    total += tree_violations_one(roots[i], depth, slack);
  return total;
}

}  // namespace charflow
