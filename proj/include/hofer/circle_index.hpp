#pragma once

// Weights of a circle subgroup at the maximum of its moment map, the virtual
// index built from them, and the conjugate-point count of the corresponding
// closed geodesic as an independent check.

#include <cstdint>
#include <functional>
#include <vector>

#include "hofer/root_system.hpp"

namespace hofer {

/// theta -> exp(2 pi theta xi), theta in [0, 1].
struct CircleSubgroup {
  std::reference_wrapper<const RootSystem> system;
  Coweight xi;
  bool regular = false;
};

/// Throws DegenerateSubgroup for xi == 0 and DimensionError on rank mismatch.
CircleSubgroup make_circle_subgroup(const RootSystem& system, Coweight xi);

/// Negative weights k_i of the linearized action, one per complex dimension,
/// sorted from -1 downwards.
struct WeightMultiset {
  std::vector<std::int64_t> weights;
};

struct IndexReport {
  Coweight xi;
  bool regular = false;
  WeightMultiset weights;
  std::int64_t virtual_index = 0;
  std::int64_t riemannian_index = 0;
  bool agree = false;
};

/// One weight per root pairing negatively with xi. Zero pairings are not
/// weights on the orbit tangent space and are dropped.
WeightMultiset weights_at_max(const CircleSubgroup& gamma);

/// sum 2(|k_i| - 1). Throws InvalidWeights if any k_i >= 0.
std::int64_t virtual_index(const WeightMultiset& w);

/// Conjugate times t in (0, 1) of the geodesic, each counted with the real
/// dimension (2) of its root space.
std::int64_t riemannian_index_conjugate(const CircleSubgroup& gamma);

IndexReport index_equality_report(const CircleSubgroup& gamma);

}  // namespace hofer
