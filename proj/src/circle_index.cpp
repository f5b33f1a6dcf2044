#include "hofer/circle_index.hpp"

#include <algorithm>
#include <cstdlib>

#include "hofer/errors.hpp"

namespace hofer {

CircleSubgroup make_circle_subgroup(const RootSystem& system, Coweight xi) {
  if (xi.rank() != system.rank())
    throw DimensionError("coweight of rank " + std::to_string(xi.rank()) + " for " + system.label());
  if (xi.is_zero()) throw DegenerateSubgroup("the zero coweight does not generate a circle subgroup");
  const bool regular = is_regular(system, xi);
  return CircleSubgroup{std::cref(system), std::move(xi), regular};
}

WeightMultiset weights_at_max(const CircleSubgroup& gamma) {
  if (gamma.xi.is_zero()) throw DegenerateSubgroup("the zero coweight has no moment-map maximum");
  WeightMultiset out;
  // Roots come in +- pairs; exactly one member of each nonzero pair is negative.
  for (const auto& root : gamma.system.get().positive_roots()) {
    const auto p = pairing(root, gamma.xi);
    if (p != 0) out.weights.push_back(-std::llabs(p));
  }
  std::sort(out.weights.begin(), out.weights.end(), std::greater<>());
  return out;
}

std::int64_t virtual_index(const WeightMultiset& w) {
  std::int64_t total = 0;
  for (auto k : w.weights) {
    if (k >= 0) throw InvalidWeights("weight " + std::to_string(k) + " is not negative");
    total += 2 * (-k - 1);
  }
  return total;
}

std::int64_t riemannian_index_conjugate(const CircleSubgroup& gamma) {
  if (gamma.xi.is_zero()) throw DegenerateSubgroup("the zero coweight is a constant loop");
  std::int64_t total = 0;
  for (const auto& root : gamma.system.get().positive_roots()) {
    const std::int64_t v = std::llabs(pairing(root, gamma.xi));
    // t in (0, 1) with v t a positive integer: t = k / v, k = 1 .. v-1.
    for (std::int64_t k = 1; k < v; ++k) total += 2;
  }
  return total;
}

IndexReport index_equality_report(const CircleSubgroup& gamma) {
  IndexReport report;
  report.xi = gamma.xi;
  report.regular = gamma.regular;
  report.weights = weights_at_max(gamma);
  report.virtual_index = virtual_index(report.weights);
  report.riemannian_index = riemannian_index_conjugate(gamma);
  report.agree = report.virtual_index == report.riemannian_index;
  return report;
}

}  // namespace hofer
