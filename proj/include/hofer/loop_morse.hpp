#pragma once

// Morse-Bott data of the energy functional on the based loop group Omega G.
// Critical manifolds are the adjoint orbits through dominant coweights xi;
// the unstable dimension of the stratum through xi is its Bott index.

#include <cstdint>
#include <vector>

#include "hofer/polynomial.hpp"
#include "hofer/root_system.hpp"

namespace hofer {

struct CriticalStratum {
  Coweight xi;
  std::int64_t bott_index = 0;
  /// Poincare polynomial of the adjoint orbit G / Z(xi).
  Polynomial stratum_poly;
  std::int64_t unstable_dim() const { return bott_index; }
};

/// Coefficients of t^0 .. t^cutoff.
struct TruncatedSeries {
  int cutoff = 0;
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// Which coweights count as critical points.
enum class StrataLattice {
  /// Every dominant integral coweight (closed geodesics in the adjoint group).
  Coweight,
  /// Dominant elements of the coroot lattice: the based loops of the simply
  /// connected group.
  Coroot,
};

/// sum over positive roots with pairing p > 0 of 2(p - 1). Throws NotDominant.
std::int64_t bott_index(const RootSystem& system, const Coweight& xi);

/// W(t) / W_xi(t), where W_xi is generated by the simple reflections fixing
/// xi. Throws NotDominant; InexactDivision would indicate a bug.
Polynomial stratum_poincare(const RootSystem& system, const Coweight& xi);

/// All dominant xi with bott_index(xi) <= cutoff, ordered by index, then
/// height, then reverse lexicographically. Includes xi = 0.
std::vector<CriticalStratum> enumerate_critical_strata(const RootSystem& system, int cutoff,
                                                       StrataLattice lattice = StrataLattice::Coweight);

/// Classical exponents m_i of the simply connected group.
std::vector<int> classical_exponents(const RootSystem& system);

/// prod_i 1 / (1 - t^{2 m_i}) expanded to t^cutoff.
TruncatedSeries transgression_series(const RootSystem& system, int cutoff);

struct OmegaSeriesReport {
  TruncatedSeries series;  // Morse-Bott assembly
  TruncatedSeries oracle;  // transgression product
  bool perfect = false;    // series == oracle
};

/// sum over coroot-lattice strata of t^{bott_index} * stratum_poly, truncated,
/// compared against the transgression oracle.
OmegaSeriesReport omega_g_series(const RootSystem& system, int cutoff);

}  // namespace hofer
