#pragma once

// Discretized energy and positive Hofer length on based loops in SU(2), and
// finite-difference Hessians at the circle subgroups.
//
// A loop is sampled at theta_k = k / N as unit quaternions q_0 .. q_N with
// q_0 = q_N = 1. Distances are in lattice units: the geodesic angle phi of
// p^{-1} q (phi in [0, pi]) scaled by 1 / (pi sqrt 2), which makes the
// once-around circle subgroup (coweight [2] of A1) have energy 2 and length
// sqrt 2.

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace hofer {

struct DiscreteLoop {
  std::vector<Eigen::Quaterniond> points;  // N + 1 samples
  int segments() const { return static_cast<int>(points.size()) - 1; }
};

/// theta -> exp(2 pi theta m u) for the unit imaginary quaternion u = axis;
/// the A1 coweight [2m]. Requires m >= 1 and n >= 16.
DiscreteLoop geodesic_loop(int m, int n, const Eigen::Vector3d& axis = Eigen::Vector3d::UnitX());

DiscreteLoop constant_loop(int n);

/// Based loop with independent Haar-random interior points.
DiscreteLoop random_loop(int n, std::mt19937_64& rng);

/// Pointwise g q_k g^{-1}; preserves basing and all distances.
DiscreteLoop conjugated(const DiscreteLoop& loop, const Eigen::Quaterniond& g);

/// Unit norm to 1e-12 and both endpoints equal to the identity.
bool is_valid(const DiscreteLoop& loop);

/// exp of the imaginary quaternion v: cos|v| + (v/|v|) sin|v|.
Eigen::Quaterniond exp_imaginary(const Eigen::Vector3d& v);

/// Bi-invariant geodesic distance in lattice units.
double lattice_distance(const Eigen::Quaterniond& p, const Eigen::Quaterniond& q);

/// N * sum d(q_k, q_{k+1})^2
double discrete_energy(const DiscreteLoop& loop);

/// sum d(q_k, q_{k+1}). On SU(2)-valued loops the fiberwise maximum of the
/// normalized Hamiltonian equals the velocity norm, so L^+ is the length.
double discrete_lplus(const DiscreteLoop& loop);

enum class Functional { Energy, LPlus };

std::string_view to_string(Functional f);
/// "energy" / "lplus"; throws InvalidArgument.
Functional parse_functional(std::string_view name);

/// Second-difference matrix of the functional in exponential normal
/// coordinates q_k -> q_k exp(v_k), k = 1 .. N-1, with step h. Dimension
/// 3(N-1). Both functionals are sums of nearest-neighbour terms, so entries
/// coupling points more than one step apart vanish identically and only the
/// block-tridiagonal band is differenced.
Eigen::MatrixXd second_difference_matrix(Functional f, const DiscreteLoop& loop, double h);

/// Second-difference matrix of f restricted to span(directions): entry (a, b)
/// differences f along directions.col(a) and directions.col(b).
Eigen::MatrixXd restricted_second_difference_matrix(Functional f, const DiscreteLoop& loop,
                                                    const Eigen::MatrixXd& directions, double h);

struct SpectralReport {
  Functional functional = Functional::Energy;
  int m = 0;
  int n = 0;
  /// Dimension of the matrix that was classified: 3(N-1) for ENERGY, the
  /// number of energy-unstable directions for LPLUS.
  int dimension = 0;
  int negative_count = 0;
  int zero_count = 0;
  double min_eigenvalue = 0.0;
  /// Relative tolerance; eigenvalues with |lambda| <= tolerance * scale are zero.
  double tolerance = 0.0;
  double scale = 0.0;
  double step = 0.0;
  /// LPLUS only: negative eigenvalues of the full, unrestricted L^+ Hessian.
  /// Reported, never asserted.
  std::optional<int> unrestricted_negative_count;
};

struct HessianOptions {
  double step = 1e-4;
  double tol = 1e-6;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitX();
};

/// Hessian spectrum at geodesic_loop(m, n). ENERGY: full 3(N-1) spectrum.
/// LPLUS: the L^+ second differences restricted to the energy-negative
/// eigenspace. Requires n >= 32 and step in [1e-5, 1e-2]; throws
/// NumericalFailure if the eigensolver does not converge.
SpectralReport hessian_spectrum(Functional f, int m, int n, const HessianOptions& options = {});

/// Unit eigenvectors of the ENERGY Hessian with negative eigenvalues (columns).
Eigen::MatrixXd energy_unstable_directions(int m, int n, const HessianOptions& options = {});

}  // namespace hofer
