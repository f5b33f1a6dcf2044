#pragma once

// Moment-map maximization on coadjoint orbits. Everything is in lattice
// units: long roots have squared length 2 and loops are parametrized by
// turns, so the positive Hofer length of theta -> exp(2 pi theta xi) on its
// own orbit is sqrt(<xi, xi>).

#include <span>

#include <Eigen/Core>

#include "hofer/exact.hpp"
#include "hofer/root_system.hpp"

namespace hofer {

struct NormReport {
  Rational value_squared;
  double value_float = 0.0;  // sqrt(value_squared)
};

NormReport make_norm_report(Rational value_squared);

struct PositiveNorm {
  /// max over the orbit of xi of H_eta = <w, eta>; never negative.
  Rational maximum;
  /// A Weyl-orbit point attaining the maximum.
  Coweight argmax;
  /// maximum^2 / <xi, xi>: the squared positive norm of eta on the orbit
  /// through xi / ||xi||.
  NormReport norm;
};

/// Throws DegenerateOrbit for xi == 0. The maximum of the linear function
/// H_eta over the coadjoint orbit is attained at a torus-fixed point, so the
/// search runs over the Weyl orbit only.
PositiveNorm positive_norm(const RootSystem& system, const Coweight& eta, const Coweight& xi);

struct NormInequality {
  bool holds = false;
  bool equality = false;
  Rational lhs;  // m^2
  Rational rhs;  // <xi, xi> <eta, eta>
};

/// Exact test of ||eta||^+ <= ||eta||, i.e. m^2 <= <xi,xi><eta,eta>.
NormInequality norm_inequality(const RootSystem& system, const Coweight& eta, const Coweight& xi);

bool check_norm_inequality(const RootSystem& system, const Coweight& eta, const Coweight& xi);

/// L^+ of the circle action generated by xi on its orbit; value_squared = <xi, xi>.
NormReport hofer_length_circle(const RootSystem& system, const Coweight& xi);

/// max_b L^+(h(b)) over a sampled family. Throws EmptyFamily.
double max_length_measure(std::span<const double> lengths);

/// Integral of H_eta(x) = <x, eta> over the unit sphere (the SU(2) coadjoint
/// orbit) with a centrally symmetric midpoint grid.
double normalization_integral_s2(const Eigen::Vector3d& eta);

/// Largest value of H_eta over the same quadrature grid.
double max_on_s2_grid(const Eigen::Vector3d& eta);

}  // namespace hofer
