#pragma once

// Cross-module self-checks behind the `verify` subcommand. Every failed check
// carries the first counterexample found.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hofer/root_system.hpp"

namespace hofer {

/// Ordered key/value description of a failing case.
using Counterexample = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::optional<Counterexample> counterexample;

  /// Folds `other` into this result, keeping the first counterexample.
  void merge(const CheckResult& other);
};

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names{"index-equality", "norm-inequality", "omega-series", "hessian",
                                              "seidel"};
  return names;
}

struct VerificationRun {
  std::vector<std::string> systems;
  int coordinate_box = 4;
  std::vector<std::string> checks = all_check_names();
  /// Random (eta, xi) pairs per system of rank >= 3 for the norm inequality.
  int samples = 10000;
  std::uint64_t seed = 20240101;
  /// Truncation degree for the loop-group series.
  int series_cutoff = 12;
  std::vector<CheckResult> results;

  bool passed() const;
};

/// Calls f on every coweight with coordinates in [-box, box].
template <typename F>
void for_each_in_box(int rank, int box, F&& f) {
  IntVector c = IntVector::Constant(rank, -box);
  for (;;) {
    f(Coweight(c));
    int k = 0;
    while (k < rank && c[k] == box) c[k++] = -box;
    if (k == rank) return;
    ++c[k];
  }
}

/// virtual_index == riemannian_index_conjugate == bott_index(dominant rep)
/// for every nonzero xi in the box, singular ones included.
CheckResult check_index_equality(const RootSystem& system, int box);

/// Norm inequality on (eta, xi) pairs: exhaustive over the box for rank <= 2,
/// `samples` seeded random pairs otherwise.
CheckResult check_norm_inequality(const RootSystem& system, int box, int samples, std::uint64_t seed);

/// hofer_length_circle(xi)^2 == <xi, xi> and equality in the norm inequality
/// at eta = xi, for every nonzero xi in the box.
CheckResult check_hofer_length(const RootSystem& system, int box);

/// The vector sum of every Weyl orbit met in the box is zero.
CheckResult check_orbit_sum_zero(const RootSystem& system, int box);

/// Morse-Bott series of the loop group equals the transgression oracle.
CheckResult check_omega_series(const RootSystem& system, int cutoff);

/// SU(2) Hessian counts at N = n (winding 1 and 2), the L^+ lower bound on
/// the energy-unstable directions and Cauchy-Schwarz on random loops.
CheckResult check_hessian(int n, int random_loops, std::uint64_t seed);

/// Leading-term structure on CP^1 for xi = [2] and rejection of corrections
/// at or above the leading exponent.
CheckResult check_seidel(double area);

/// Runs the requested checks over the requested systems; fills run.results
/// in the order of run.checks.
void run_verification(VerificationRun& run);

}  // namespace hofer
