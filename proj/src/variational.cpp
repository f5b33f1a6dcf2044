#include "hofer/variational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "hofer/errors.hpp"

namespace hofer {

namespace {

// Lattice-unit distance per radian of group angle: 2 pi radians (once around
// SU(2)) has length sqrt 2.
const double kLatticeScale = 1.0 / (std::numbers::pi * std::numbers::sqrt2);

double segment_term(Functional f, int n, const Eigen::Quaterniond& p, const Eigen::Quaterniond& q) {
  const double d = lattice_distance(p, q);
  return f == Functional::Energy ? n * d * d : d;
}

// Functional value with interior points replaced through `point(k)`, summed
// over the listed segments only.
template <typename PointAt>
double partial_sum(Functional f, int n, const std::vector<int>& segments, PointAt&& point) {
  double sum = 0.0;
  for (int s : segments) sum += segment_term(f, n, point(s), point(s + 1));
  return sum;
}

void require_valid(const DiscreteLoop& loop) {
  if (loop.segments() < 1 || !is_valid(loop))
    throw InvalidArgument("loop must consist of unit quaternions starting and ending at the identity");
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& h, Eigen::MatrixXd* vectors = nullptr) {
  if (!h.allFinite()) throw NumericalFailure("second-difference matrix has non-finite entries");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("symmetric eigensolver did not converge (dimension " + std::to_string(h.rows()) +
                           ", max |entry| " + std::to_string(h.cwiseAbs().maxCoeff()) + ")");
  if (vectors) *vectors = solver.eigenvectors();
  return solver.eigenvalues();
}

void classify(const Eigen::VectorXd& eigenvalues, double tol, SpectralReport& report) {
  report.dimension = static_cast<int>(eigenvalues.size());
  report.tolerance = tol;
  report.scale = eigenvalues.size() ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  report.min_eigenvalue = eigenvalues.size() ? eigenvalues.minCoeff() : 0.0;
  const double band = tol * report.scale;
  report.negative_count = static_cast<int>((eigenvalues.array() < -band).count());
  report.zero_count = static_cast<int>((eigenvalues.array().abs() <= band).count());
}

void require_hessian_preconditions(int m, int n, const HessianOptions& options) {
  if (m < 1) throw InvalidArgument("winding m must be >= 1");
  if (n < 32) throw InvalidArgument("Hessian resolution N must be >= 32");
  if (!(options.step >= 1e-5 && options.step <= 1e-2))
    throw InvalidArgument("finite-difference step must lie in [1e-5, 1e-2]");
  if (!(options.tol > 0.0)) throw InvalidArgument("zero-band tolerance must be positive");
}

}  // namespace

Eigen::Quaterniond exp_imaginary(const Eigen::Vector3d& v) {
  const double angle = v.norm();
  if (angle == 0.0) return Eigen::Quaterniond::Identity();
  const Eigen::Vector3d axis = v / angle;
  const double s = std::sin(angle);
  return Eigen::Quaterniond(std::cos(angle), s * axis.x(), s * axis.y(), s * axis.z());
}

double lattice_distance(const Eigen::Quaterniond& p, const Eigen::Quaterniond& q) {
  const Eigen::Quaterniond r = p.conjugate() * q;
  // r = cos(phi) + u sin(phi) with phi in [0, pi]; r and -r are distinct in SU(2).
  const double phi = std::atan2(r.vec().norm(), r.w());
  return kLatticeScale * phi;
}

DiscreteLoop geodesic_loop(int m, int n, const Eigen::Vector3d& axis) {
  if (m < 1) throw InvalidArgument("winding m must be >= 1 (use constant_loop for m = 0)");
  if (n < 16) throw InvalidArgument("loop resolution N must be >= 16");
  if (axis.norm() == 0.0) throw InvalidArgument("loop axis must be nonzero");
  const Eigen::Vector3d u = axis.normalized();
  DiscreteLoop loop;
  loop.points.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double angle = 2.0 * std::numbers::pi * m * k / n;
    loop.points.push_back(exp_imaginary(angle * u));
  }
  loop.points.front() = Eigen::Quaterniond::Identity();
  loop.points.back() = Eigen::Quaterniond::Identity();
  return loop;
}

DiscreteLoop constant_loop(int n) {
  if (n < 1) throw InvalidArgument("loop resolution N must be >= 1");
  return DiscreteLoop{std::vector<Eigen::Quaterniond>(static_cast<std::size_t>(n) + 1,
                                                      Eigen::Quaterniond::Identity())};
}

DiscreteLoop random_loop(int n, std::mt19937_64& rng) {
  if (n < 1) throw InvalidArgument("loop resolution N must be >= 1");
  std::normal_distribution<double> gauss;
  DiscreteLoop loop = constant_loop(n);
  for (int k = 1; k < n; ++k) {
    Eigen::Vector4d v;
    do {
      v = Eigen::Vector4d(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    } while (v.norm() < 1e-8);
    v.normalize();
    loop.points[static_cast<std::size_t>(k)] = Eigen::Quaterniond(v[0], v[1], v[2], v[3]);
  }
  return loop;
}

DiscreteLoop conjugated(const DiscreteLoop& loop, const Eigen::Quaterniond& g) {
  const Eigen::Quaterniond gn = g.normalized();
  DiscreteLoop out;
  out.points.reserve(loop.points.size());
  for (const auto& q : loop.points) out.points.push_back(gn * q * gn.conjugate());
  out.points.front() = Eigen::Quaterniond::Identity();
  out.points.back() = Eigen::Quaterniond::Identity();
  return out;
}

bool is_valid(const DiscreteLoop& loop) {
  if (loop.points.size() < 2) return false;
  for (const auto& q : loop.points)
    if (std::abs(q.norm() - 1.0) > 1e-12) return false;
  const auto is_identity = [](const Eigen::Quaterniond& q) {
    return q.w() == 1.0 && q.vec().isZero(0.0);
  };
  return is_identity(loop.points.front()) && is_identity(loop.points.back());
}

double discrete_energy(const DiscreteLoop& loop) {
  require_valid(loop);
  const int n = loop.segments();
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double d = lattice_distance(loop.points[k], loop.points[k + 1]);
    sum += d * d;
  }
  return n * sum;
}

double discrete_lplus(const DiscreteLoop& loop) {
  require_valid(loop);
  double sum = 0.0;
  for (int k = 0; k + 1 < static_cast<int>(loop.points.size()); ++k)
    sum += lattice_distance(loop.points[k], loop.points[k + 1]);
  return sum;
}

std::string_view to_string(Functional f) { return f == Functional::Energy ? "energy" : "lplus"; }

Functional parse_functional(std::string_view name) {
  if (name == "energy") return Functional::Energy;
  if (name == "lplus") return Functional::LPlus;
  throw InvalidArgument("unknown functional '" + std::string(name) + "' (expected energy or lplus)");
}

Eigen::MatrixXd second_difference_matrix(Functional f, const DiscreteLoop& loop, double h) {
  require_valid(loop);
  const int n = loop.segments();
  const int dim = 3 * (n - 1);
  Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(dim, dim);

  // Variable a perturbs interior point 1 + a / 3 along component a % 3.
  auto point_of = [](int a) { return 1 + a / 3; };
  auto value = [&](int a, double sa, int b, double sb) {
    const int pa = point_of(a), pb = point_of(b);
    std::vector<int> segs{pa - 1, pa, pb - 1, pb};
    std::sort(segs.begin(), segs.end());
    segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
    return partial_sum(f, n, segs, [&](int k) {
      Eigen::Vector3d v = Eigen::Vector3d::Zero();
      if (k == pa) v[a % 3] += sa;
      if (k == pb) v[b % 3] += sb;
      const auto& q = loop.points[static_cast<std::size_t>(k)];
      return v.isZero(0.0) ? q : Eigen::Quaterniond(q * exp_imaginary(v));
    });
  };

  for (int a = 0; a < dim; ++a) {
    const double centre = value(a, 0.0, a, 0.0);
    hess(a, a) = (value(a, h, a, 0.0) - 2.0 * centre + value(a, -h, a, 0.0)) / (h * h);
    for (int b = a + 1; b < dim; ++b) {
      if (point_of(b) - point_of(a) > 1) break;
      const double mixed =
          (value(a, h, b, h) - value(a, h, b, -h) - value(a, -h, b, h) + value(a, -h, b, -h)) / (4.0 * h * h);
      hess(a, b) = hess(b, a) = mixed;
    }
  }
  return hess;
}

Eigen::MatrixXd restricted_second_difference_matrix(Functional f, const DiscreteLoop& loop,
                                                    const Eigen::MatrixXd& directions, double h) {
  require_valid(loop);
  const int n = loop.segments();
  if (directions.rows() != 3 * (n - 1))
    throw DimensionError("direction vectors must have dimension 3(N-1) = " + std::to_string(3 * (n - 1)));
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) all[static_cast<std::size_t>(s)] = s;

  auto value = [&](const Eigen::VectorXd& step) {
    return partial_sum(f, n, all, [&](int k) {
      const auto& q = loop.points[static_cast<std::size_t>(k)];
      if (k == 0 || k == n) return q;
      return Eigen::Quaterniond(q * exp_imaginary(step.segment<3>(3 * (k - 1))));
    });
  };

  const auto k = directions.cols();
  Eigen::MatrixXd r(k, k);
  const double centre = value(Eigen::VectorXd::Zero(directions.rows()));
  for (Eigen::Index a = 0; a < k; ++a) {
    const Eigen::VectorXd va = h * directions.col(a);
    r(a, a) = (value(va) - 2.0 * centre + value(-va)) / (h * h);
    for (Eigen::Index b = a + 1; b < k; ++b) {
      const Eigen::VectorXd vb = h * directions.col(b);
      r(a, b) = r(b, a) =
          (value(va + vb) - value(va - vb) - value(vb - va) + value(-va - vb)) / (4.0 * h * h);
    }
  }
  return r;
}

Eigen::MatrixXd energy_unstable_directions(int m, int n, const HessianOptions& options) {
  require_hessian_preconditions(m, n, options);
  const DiscreteLoop loop = geodesic_loop(m, n, options.axis);
  Eigen::MatrixXd vectors;
  const Eigen::VectorXd eig =
      symmetric_eigenvalues(second_difference_matrix(Functional::Energy, loop, options.step), &vectors);
  const double band = options.tol * eig.cwiseAbs().maxCoeff();
  // Eigenvalues come sorted ascending, so the negative ones lead.
  Eigen::Index count = 0;
  while (count < eig.size() && eig[count] < -band) ++count;
  return vectors.leftCols(count);
}

SpectralReport hessian_spectrum(Functional f, int m, int n, const HessianOptions& options) {
  require_hessian_preconditions(m, n, options);
  SpectralReport report;
  report.functional = f;
  report.m = m;
  report.n = n;
  report.step = options.step;
  const DiscreteLoop loop = geodesic_loop(m, n, options.axis);

  if (f == Functional::Energy) {
    classify(symmetric_eigenvalues(second_difference_matrix(Functional::Energy, loop, options.step)),
             options.tol, report);
    return report;
  }

  const Eigen::MatrixXd unstable = energy_unstable_directions(m, n, options);
  classify(symmetric_eigenvalues(
               restricted_second_difference_matrix(Functional::LPlus, loop, unstable, options.step)),
           options.tol, report);

  SpectralReport full;
  classify(symmetric_eigenvalues(second_difference_matrix(Functional::LPlus, loop, options.step)),
           options.tol, full);
  report.unrestricted_negative_count = full.negative_count;
  return report;
}

}  // namespace hofer
