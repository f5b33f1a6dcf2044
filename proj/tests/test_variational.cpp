#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "hofer/circle_index.hpp"
#include "hofer/errors.hpp"
#include "hofer/variational.hpp"

using namespace hofer;

namespace {

DiscreteLoop perturbed(const DiscreteLoop& base, const Eigen::VectorXd& v) {
  DiscreteLoop loop = base;
  for (int k = 1; k < base.segments(); ++k) loop.points[k] = loop.points[k] * exp_imaginary(v.segment<3>(3 * (k - 1)));
  return loop;
}

double evaluate(Functional f, const DiscreteLoop& loop) {
  return f == Functional::Energy ? discrete_energy(loop) : discrete_lplus(loop);
}

// Every entry differenced directly, with no assumption about the band.
Eigen::MatrixXd dense_second_differences(Functional f, const DiscreteLoop& loop, double h) {
  const int dim = 3 * (loop.segments() - 1);
  const double f0 = evaluate(f, loop);
  Eigen::MatrixXd out(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      auto at = [&](double sa, double sb) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
        v[a] += sa;
        v[b] += sb;
        return evaluate(f, perturbed(loop, v));
      };
      out(a, b) = a == b ? (at(h, 0) - 2 * f0 + at(-h, 0)) / (h * h)
                         : (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
      out(b, a) = out(a, b);
    }
  return out;
}

int count_negative(const Eigen::MatrixXd& m, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const double band = tol * es.eigenvalues().cwiseAbs().maxCoeff();
  return static_cast<int>((es.eigenvalues().array() < -band).count());
}

Eigen::Quaterniond random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Eigen::Quaterniond(g(rng), g(rng), g(rng), g(rng)).normalized();
}

}  // namespace

TEST_CASE("geodesic loops") {
  const auto loop = geodesic_loop(1, 64);
  CHECK(loop.segments() == 64);
  CHECK(is_valid(loop));
  CHECK(loop.points.front().coeffs() == Eigen::Quaterniond::Identity().coeffs());
  CHECK(loop.points.back().coeffs() == Eigen::Quaterniond::Identity().coeffs());
  for (const auto& q : loop.points) CHECK(std::abs(q.norm() - 1) < 1e-12);
  CHECK_THROWS_AS(geodesic_loop(0, 64), InvalidArgument);
  CHECK_THROWS_AS(geodesic_loop(1, 15), InvalidArgument);
  CHECK(is_valid(constant_loop(16)));
  CHECK(discrete_energy(constant_loop(16)) == 0);
}

TEST_CASE("discrete energy and length of circle subgroups") {
  CHECK(discrete_energy(geodesic_loop(1, 64)) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(discrete_energy(geodesic_loop(2, 64)) == doctest::Approx(8.0).epsilon(1e-3));
  CHECK(discrete_lplus(geodesic_loop(1, 64)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-3));
  CHECK(discrete_lplus(constant_loop(64)) == 0);
  // uniform sampling of a geodesic is exact; N = 16 and 64 agree far inside O(1/N^2)
  CHECK(std::abs(discrete_energy(geodesic_loop(1, 16)) - discrete_energy(geodesic_loop(1, 64))) < 1.0 / (16 * 16));
  for (int m = 1; m <= 3; ++m) {
    // lattice-unit energy of [2m] is <[2m],[2m]> = 2 m^2
    CHECK(discrete_energy(geodesic_loop(m, 96)) == doctest::Approx(2.0 * m * m).epsilon(1e-10));
    CHECK(discrete_lplus(geodesic_loop(m, 96)) == doctest::Approx(std::sqrt(2.0) * m).epsilon(1e-10));
  }
}

TEST_CASE("lattice distance") {
  const auto id = Eigen::Quaterniond::Identity();
  CHECK(lattice_distance(id, id) == 0);
  // the antipode -1 is the far end of the circle subgroup: half of sqrt 2
  CHECK(lattice_distance(id, Eigen::Quaterniond(-1, 0, 0, 0)) == doctest::Approx(1 / std::sqrt(2.0)));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_rotation(rng), q = random_rotation(rng), g = random_rotation(rng);
    CHECK(lattice_distance(p, q) == doctest::Approx(lattice_distance(q, p)));
    CHECK(lattice_distance(g * p, g * q) == doctest::Approx(lattice_distance(p, q)));
    CHECK(lattice_distance(p * g, q * g) == doctest::Approx(lattice_distance(p, q)));
  }
}

TEST_CASE("Cauchy-Schwarz on random loops") {
  std::mt19937_64 rng(20240101);
  std::uniform_int_distribution<int> size(16, 96);
  for (int i = 0; i < 1000; ++i) {
    const auto loop = random_loop(size(rng), rng);
    REQUIRE(is_valid(loop));
    const double l = discrete_lplus(loop);
    CHECK(l * l <= discrete_energy(loop) * (1 + 1e-10));
  }
}

TEST_CASE("conjugation preserves energy and length") {
  std::mt19937_64 rng(9);
  const auto loop = random_loop(40, rng);
  const auto g = random_rotation(rng);
  const auto c = conjugated(loop, g);
  CHECK(is_valid(c));
  CHECK(discrete_energy(c) == doctest::Approx(discrete_energy(loop)).epsilon(1e-12));
  CHECK(discrete_lplus(c) == doctest::Approx(discrete_lplus(loop)).epsilon(1e-12));
}

TEST_CASE("banded second differences match the dense computation") {
  const auto loop = geodesic_loop(1, 32);
  for (auto f : {Functional::Energy, Functional::LPlus}) {
    const Eigen::MatrixXd band = second_difference_matrix(f, loop, 1e-4);
    const Eigen::MatrixXd dense = dense_second_differences(f, loop, 1e-4);
    CHECK(band.rows() == 93);
    CHECK((band - dense).cwiseAbs().maxCoeff() < 1e-5 * dense.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("energy Hessian negative counts match the virtual index") {
  const auto a1 = build_root_system(Family::A, 1);
  for (int m = 1; m <= 3; ++m) {
    CAPTURE(m);
    const auto expected = virtual_index(weights_at_max(make_circle_subgroup(a1, Coweight{2 * m})));
    CHECK(expected == 2 * (2 * m - 1));
    for (int n : {64, 128}) {
      const auto rep = hessian_spectrum(Functional::Energy, m, n);
      CHECK(rep.dimension == 3 * (n - 1));
      CHECK(rep.negative_count == expected);
      CHECK(rep.zero_count == 2);
      CHECK(rep.negative_count + rep.zero_count <= rep.dimension);
      CHECK(rep.min_eigenvalue < 0);
    }
  }
}

TEST_CASE("length second differences along the energy-unstable directions") {
  for (int n : {64, 128}) {
    const auto rep = hessian_spectrum(Functional::LPlus, 1, n);
    CHECK(rep.dimension == 2);
    CHECK(rep.negative_count >= 2);
    CHECK(rep.unrestricted_negative_count.has_value());
  }
  const auto rep2 = hessian_spectrum(Functional::LPlus, 2, 64);
  CHECK(rep2.negative_count >= 6);
}

TEST_CASE("Hessian counts do not depend on the subgroup axis or on conjugation") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 3; ++trial) {
    HessianOptions opt;
    opt.axis = Eigen::Vector3d(g(rng), g(rng), g(rng)).normalized();
    const auto rep = hessian_spectrum(Functional::Energy, 2, 64, opt);
    CHECK(rep.negative_count == 6);
    CHECK(rep.zero_count == 2);
  }
  const auto loop = conjugated(geodesic_loop(1, 64), random_rotation(rng));
  CHECK(count_negative(second_difference_matrix(Functional::Energy, loop, 1e-4), 1e-6) == 2);
}

TEST_CASE("Hessian argument checks") {
  HessianOptions opt;
  CHECK_THROWS_AS(hessian_spectrum(Functional::Energy, 1, 16), InvalidArgument);
  CHECK_THROWS_AS(hessian_spectrum(Functional::Energy, 0, 64), InvalidArgument);
  opt.step = 1e-1;
  CHECK_THROWS_AS(hessian_spectrum(Functional::Energy, 1, 64, opt), InvalidArgument);
  opt.step = 1e-4;
  opt.tol = 0;
  CHECK_THROWS_AS(hessian_spectrum(Functional::Energy, 1, 64, opt), InvalidArgument);
  CHECK(parse_functional("lplus") == Functional::LPlus);
  CHECK(to_string(Functional::Energy) == "energy");
  CHECK_THROWS_AS(parse_functional("area"), InvalidArgument);
  CHECK_THROWS_AS(second_difference_matrix(Functional::Energy, DiscreteLoop{}, 1e-4), InvalidArgument);
}
