#include "hofer/loop_morse.hpp"

#include <algorithm>

#include "hofer/errors.hpp"

namespace hofer {

namespace {

void require_dominant(const RootSystem& system, const Coweight& xi) {
  if (xi.rank() != system.rank()) throw DimensionError("coweight rank does not match " + system.label());
  if (!xi.is_dominant()) throw NotDominant("coweight [" + xi.to_string() + "] is not dominant");
}

void require_cutoff(int cutoff) {
  if (cutoff < 0 || cutoff % 2 != 0)
    throw InvalidArgument("cutoff must be a nonnegative even integer, got " + std::to_string(cutoff));
}

TruncatedSeries to_series(const Polynomial& p, int cutoff) {
  TruncatedSeries s;
  s.cutoff = cutoff;
  s.coeffs.assign(static_cast<std::size_t>(cutoff) + 1, 0);
  for (int d = 0; d <= cutoff; ++d) s.coeffs[static_cast<std::size_t>(d)] = p[d];
  return s;
}

Polynomial stratum_poincare_with(const RootSystem& system, const Coweight& xi, const Polynomial& full) {
  std::vector<int> walls;
  for (int i = 0; i < system.rank(); ++i)
    if (xi[i] == 0) walls.push_back(i);
  return divide_exact(full, weyl_poincare(system, walls));
}

}  // namespace

std::int64_t bott_index(const RootSystem& system, const Coweight& xi) {
  require_dominant(system, xi);
  std::int64_t total = 0;
  for (const auto& root : system.positive_roots()) {
    const auto p = pairing(root, xi);
    if (p > 0) total += 2 * (p - 1);
  }
  return total;
}

Polynomial stratum_poincare(const RootSystem& system, const Coweight& xi) {
  require_dominant(system, xi);
  return stratum_poincare_with(system, xi, weyl_poincare(system));
}

std::vector<CriticalStratum> enumerate_critical_strata(const RootSystem& system, int cutoff,
                                                       StrataLattice lattice) {
  require_cutoff(cutoff);
  // alpha_i alone contributes 2(c_i - 1) to the index, so c_i <= cutoff/2 + 1.
  const std::int64_t bound = cutoff / 2 + 1;
  const int rank = system.rank();
  const Polynomial full = weyl_poincare(system);

  std::vector<CriticalStratum> strata;
  IntVector c = IntVector::Zero(rank);
  for (;;) {
    Coweight xi(c);
    if (lattice == StrataLattice::Coweight || in_coroot_lattice(system, xi)) {
      const auto index = bott_index(system, xi);
      if (index <= cutoff)
        strata.push_back(CriticalStratum{xi, index, stratum_poincare_with(system, xi, full)});
    }
    int k = 0;
    while (k < rank && c[k] == bound) c[k++] = 0;
    if (k == rank) break;
    ++c[k];
  }
  std::sort(strata.begin(), strata.end(), [](const CriticalStratum& a, const CriticalStratum& b) {
    const auto ha = a.xi.coords().sum(), hb = b.xi.coords().sum();
    if (a.bott_index != b.bott_index) return a.bott_index < b.bott_index;
    if (ha != hb) return ha < hb;
    return b.xi < a.xi;
  });
  return strata;
}

std::vector<int> classical_exponents(const RootSystem& system) {
  const int n = system.rank();
  std::vector<int> m;
  switch (system.family()) {
    case Family::A:
      for (int i = 1; i <= n; ++i) m.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) m.push_back(2 * i - 1);
      break;
    case Family::D:
      m = {1, 3, 3, 5};
      break;
    case Family::G:
      m = {1, 5};
      break;
    case Family::F:
      m = {1, 5, 7, 11};
      break;
  }
  return m;
}

TruncatedSeries transgression_series(const RootSystem& system, int cutoff) {
  require_cutoff(cutoff);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(cutoff) + 1, 0);
  coeffs[0] = 1;
  for (int m : classical_exponents(system)) {
    // Multiply by 1 / (1 - t^{2m}) = 1 + t^{2m} + t^{4m} + ...
    const int step = 2 * m;
    for (int d = step; d <= cutoff; ++d) coeffs[static_cast<std::size_t>(d)] += coeffs[static_cast<std::size_t>(d - step)];
  }
  return TruncatedSeries{cutoff, std::move(coeffs)};
}

OmegaSeriesReport omega_g_series(const RootSystem& system, int cutoff) {
  Polynomial total;
  for (const auto& s : enumerate_critical_strata(system, cutoff, StrataLattice::Coroot))
    total += s.stratum_poly.shifted(static_cast<int>(s.bott_index));
  OmegaSeriesReport report;
  report.series = to_series(total, cutoff);
  report.oracle = transgression_series(system, cutoff);
  report.perfect = report.series == report.oracle;
  return report;
}

}  // namespace hofer
