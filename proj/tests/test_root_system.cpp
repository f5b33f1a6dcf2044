#include <doctest.h>

#include <set>

#include "hofer/errors.hpp"
#include "hofer/root_system.hpp"
#include "oracles.hpp"

using namespace hofer;

namespace {

std::set<std::vector<std::int64_t>> as_set(const std::vector<RootVector>& roots) {
  std::set<std::vector<std::int64_t>> s;
  for (const auto& r : roots) s.insert(std::vector<std::int64_t>(r.data(), r.data() + r.size()));
  return s;
}

RootVector root(std::initializer_list<std::int64_t> c) {
  RootVector v(static_cast<Eigen::Index>(c.size()));
  std::copy(c.begin(), c.end(), v.data());
  return v;
}

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(build_root_system(Family::A, 1).positive_roots().size() == 1);
  CHECK(build_root_system(Family::A, 2).positive_roots().size() == 3);
  CHECK(build_root_system(Family::G, 2).positive_roots().size() == 6);
  const std::map<std::string, std::size_t> table{{"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"B2", 4},
                                                 {"B3", 9}, {"B4", 16}, {"C2", 4}, {"C3", 9},  {"C4", 16},
                                                 {"D4", 12}, {"G2", 6}, {"F4", 24}};
  for (const auto& [label, count] : table) {
    CAPTURE(label);
    const auto sys = build_root_system(label);
    CHECK(sys.positive_roots().size() == count);
    CHECK(known_positive_root_count(sys.family(), sys.rank()) == count);
  }
}

TEST_CASE("A2 positive roots are alpha1, alpha2, alpha1 + alpha2") {
  const auto a2 = build_root_system(Family::A, 2);
  const auto& roots = a2.positive_roots();
  CHECK(roots[0] == root({1, 0}));
  CHECK(roots[1] == root({0, 1}));
  CHECK(roots[2] == root({1, 1}));
}

TEST_CASE("unsupported systems are rejected") {
  CHECK_THROWS_AS(build_root_system("E6"), UnsupportedSystem);
  CHECK_THROWS_AS(build_root_system("A5"), UnsupportedSystem);
  CHECK_THROWS_AS(build_root_system("B1"), UnsupportedSystem);
  CHECK_THROWS_AS(build_root_system("D3"), UnsupportedSystem);
  CHECK_THROWS_AS(build_root_system("G3"), UnsupportedSystem);
  CHECK_THROWS_AS(build_root_system("A"), UnsupportedSystem);
  CHECK_THROWS_AS(build_root_system(""), UnsupportedSystem);
  CHECK(build_root_system("b3").label() == "B3");
}

TEST_CASE("Cartan matrix and roots match the Euclidean realization") {
  for (const auto& label : supported_system_labels()) {
    CAPTURE(label);
    const auto sys = build_root_system(label);
    const auto r = oracle::simple_roots(label);
    const Eigen::MatrixXd expected = oracle::cartan(r);
    CHECK((sys.cartan_matrix().cast<double>() - expected).norm() < 1e-9);

    std::set<std::vector<std::int64_t>> oracle_roots;
    for (const auto& v : oracle::positive_roots(r)) oracle_roots.insert(std::vector<std::int64_t>(v.data(), v.data() + v.size()));
    CHECK(as_set(sys.positive_roots()) == oracle_roots);

    for (int i = 0; i < sys.rank(); ++i)
      CHECK(to_double(sys.simple_root_length_squared(i)) == doctest::Approx(r.col(i).squaredNorm()));
  }
}

TEST_CASE("Cartan matrix shape") {
  for (const auto& label : supported_system_labels()) {
    const auto c = build_root_system(label).cartan_matrix();
    for (Eigen::Index i = 0; i < c.rows(); ++i)
      for (Eigen::Index j = 0; j < c.cols(); ++j) {
        if (i == j) CHECK(c(i, j) == 2);
        else CHECK(c(i, j) <= 0);
      }
  }
}

TEST_CASE("symmetrizer") {
  for (const auto& label : supported_system_labels()) {
    const auto sys = build_root_system(label);
    const auto& c = sys.cartan_matrix();
    const auto& d = sys.symmetrizer();
    for (int i = 0; i < sys.rank(); ++i) {
      CHECK(d[i] > 0);
      for (int j = 0; j < sys.rank(); ++j) CHECK(d[i] * c(i, j) == d[j] * c(j, i));
    }
  }
}

TEST_CASE("pairing") {
  const auto a1 = build_root_system(Family::A, 1);
  const auto a2 = build_root_system(Family::A, 2);
  CHECK(pairing(a1.positive_roots()[0], Coweight{2}) == 2);
  CHECK(pairing(root({1, 1}), Coweight{1, 1}) == 2);
  for (const auto& r : a2.positive_roots()) CHECK(pairing(r, Coweight::zero(2)) == 0);
  CHECK_THROWS_AS(pairing(root({1, 1}), Coweight{1}), DimensionError);
}

TEST_CASE("inner product values") {
  const auto a1 = build_root_system(Family::A, 1);
  const auto a2 = build_root_system(Family::A, 2);
  const auto b2 = build_root_system(Family::B, 2);
  CHECK(inner(a1, Coweight{2}, Coweight{2}) == 2);
  CHECK(inner(a2, Coweight::zero(2), Coweight{3, -1}) == 0);
  CHECK(inner(a2, Coweight{1, 0}, Coweight{0, 1}) == Rational(1, 3));
  CHECK(inner(a2, Coweight{1, 0}, Coweight{1, 0}) == Rational(2, 3));
  CHECK(inner(b2, Coweight{1, 0}, Coweight{1, 0}) == 1);
  CHECK(inner(b2, Coweight{0, 1}, Coweight{0, 1}) == 2);
  CHECK(inner(b2, Coweight{1, 0}, Coweight{0, 1}) == 1);
  CHECK_THROWS_AS(inner(a2, Coweight{1}, Coweight{1, 0}), DimensionError);
}

TEST_CASE("Gram matrix equals the inverse simple-root Gram of the realization") {
  for (const auto& label : supported_system_labels()) {
    CAPTURE(label);
    const auto sys = build_root_system(label);
    const Eigen::MatrixXd expected = oracle::coweight_gram(oracle::simple_roots(label));
    CHECK((sys.gram_as<double>() - expected).norm() < 1e-9);
    // symmetric, and positive definite by exact leading principal minors
    CHECK(sys.gram_numerators() == IntMatrix(sys.gram_numerators().transpose()));
    for (int k = 1; k <= sys.rank(); ++k) CHECK(exact_determinant(sys.gram_numerators().topLeftCorner(k, k)) > 0);
  }
}

TEST_CASE("reflection closure of positive roots") {
  for (const auto& label : supported_system_labels()) {
    const auto sys = build_root_system(label);
    const auto roots = as_set(sys.positive_roots());
    for (const auto& beta : sys.positive_roots())
      for (int i = 0; i < sys.rank(); ++i) {
        RootVector simple = RootVector::Zero(sys.rank());
        simple[i] = 1;
        if (beta == simple) continue;
        const auto image = reflect_root(sys, i, beta);
        CHECK(roots.count(std::vector<std::int64_t>(image.data(), image.data() + image.size())) == 1);
      }
  }
}

TEST_CASE("Weyl orbits") {
  const auto a1 = build_root_system(Family::A, 1);
  const auto a2 = build_root_system(Family::A, 2);
  const auto o1 = weyl_orbit(a1, Coweight{2});
  REQUIRE(o1.size() == 2);
  CHECK(o1[0] == Coweight{-2});
  CHECK(o1[1] == Coweight{2});
  CHECK(weyl_orbit(a2, Coweight{1, 1}).size() == 6);
  CHECK(weyl_orbit(a2, Coweight{1, 0}).size() == 3);
  CHECK(weyl_orbit(a2, Coweight::zero(2)).size() == 1);
  CHECK(weyl_orbit(a2, Coweight{-1, 2}) == weyl_orbit(a2, Coweight{1, 1}));
}

TEST_CASE("Weyl group order by matrix generation") {
  for (const auto& label : supported_system_labels()) {
    CAPTURE(label);
    const auto sys = build_root_system(label);
    const auto group = oracle::weyl_group(oracle::simple_roots(label), oracle::all_indices(sys.rank()));
    CHECK(static_cast<std::int64_t>(group.size()) == sys.weyl_group_order());
    CHECK(known_weyl_group_order(sys.family(), sys.rank()) == sys.weyl_group_order());
  }
}

TEST_CASE("orbit size times stabilizer order is the group order") {
  for (const auto& label : supported_system_labels()) {
    CAPTURE(label);
    const auto sys = build_root_system(label);
    const auto group = oracle::weyl_group(oracle::simple_roots(label), oracle::all_indices(sys.rank()));
    const int n = sys.rank();
    // a few dominant points per system, including walls
    std::vector<Coweight> points{Coweight::zero(n), Coweight(IntVector::Ones(n))};
    for (int i = 0; i < n; ++i) {
      IntVector c = IntVector::Zero(n);
      c[i] = 2;
      points.emplace_back(c);
      c = IntVector::Ones(n);
      c[i] = 0;
      points.emplace_back(c);
    }
    for (const auto& xi : points) {
      const Eigen::VectorXi v = xi.coords().cast<int>();
      std::int64_t stab = 0;
      std::set<std::vector<int>> images;
      for (const auto& w : group) {
        const Eigen::VectorXi image = w * v;
        stab += image == v;
        images.insert(std::vector<int>(image.data(), image.data() + image.size()));
      }
      const auto orbit = weyl_orbit(sys, xi);
      CHECK(static_cast<std::int64_t>(orbit.size()) * stab == sys.weyl_group_order());
      CHECK(orbit.size() == images.size());
    }
  }
}

TEST_CASE("orbit sum is zero") {
  for (const auto& label : supported_system_labels()) {
    const auto sys = build_root_system(label);
    IntVector start = IntVector::LinSpaced(sys.rank(), 0, sys.rank() - 1);
    IntVector sum = IntVector::Zero(sys.rank());
    for (const auto& w : weyl_orbit(sys, Coweight(start))) sum += w.coords();
    CHECK((sum.array() == 0).all());
  }
}

TEST_CASE("Weyl Poincare polynomials") {
  const auto a1 = build_root_system(Family::A, 1);
  const auto a2 = build_root_system(Family::A, 2);
  CHECK(weyl_poincare(a2) == Polynomial{1, 0, 2, 0, 2, 0, 1});
  CHECK(weyl_poincare(a1) == Polynomial{1, 0, 1});
  for (const auto& label : supported_system_labels())
    CHECK(weyl_poincare(build_root_system(label), std::span<const int>{}) == Polynomial{1});
  const int bad[] = {2};
  CHECK_THROWS_AS(weyl_poincare(a2, bad), DimensionError);
}

TEST_CASE("Weyl Poincare polynomial against length counts and the product formula") {
  for (const auto& label : supported_system_labels()) {
    CAPTURE(label);
    const auto sys = build_root_system(label);
    const auto r = oracle::simple_roots(label);
    const auto positive = oracle::positive_roots(r);
    const auto full = oracle::weyl_product_formula(oracle::exponents(label));
    CHECK(weyl_poincare(sys).coeffs() == full);
    // every parabolic subgroup: generate it and count lengths
    for (int mask = 0; mask < (1 << sys.rank()); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < sys.rank(); ++i)
        if (mask & (1 << i)) subset.push_back(i);
      std::vector<std::int64_t> counts;
      for (const auto& w : oracle::weyl_group(r, subset)) {
        const auto l = static_cast<std::size_t>(2 * oracle::length(w, positive));
        if (counts.size() <= l) counts.resize(l + 1, 0);
        ++counts[l];
      }
      const auto poly = weyl_poincare(sys, subset);
      CHECK(poly == Polynomial(counts));
      CHECK(poly.is_palindromic());
    }
  }
}

TEST_CASE("dominant representative and regularity") {
  const auto a2 = build_root_system(Family::A, 2);
  CHECK(dominant_representative(a2, Coweight{-1, 2}) == Coweight{1, 1});
  CHECK(dominant_representative(a2, Coweight{-1, 0}) == Coweight{0, 1});
  CHECK(is_regular(a2, Coweight{1, 1}));
  CHECK_FALSE(is_regular(a2, Coweight{1, 0}));
  CHECK_FALSE(is_regular(a2, Coweight{1, -1}));  // alpha1 + alpha2 pairs to 0
  for (const auto& label : supported_system_labels()) {
    const auto sys = build_root_system(label);
    for (const auto& w : weyl_orbit(sys, Coweight(IntVector::LinSpaced(sys.rank(), 1, sys.rank())))) {
      CHECK(dominant_representative(sys, w).is_dominant());
      CHECK(is_regular(sys, w));
    }
  }
}

TEST_CASE("coroot lattice membership") {
  const auto a1 = build_root_system(Family::A, 1);
  const auto a2 = build_root_system(Family::A, 2);
  const auto g2 = build_root_system(Family::G, 2);
  CHECK(in_coroot_lattice(a1, Coweight{2}));
  CHECK_FALSE(in_coroot_lattice(a1, Coweight{1}));
  CHECK(in_coroot_lattice(a2, Coweight{1, 1}));
  CHECK_FALSE(in_coroot_lattice(a2, Coweight{1, 0}));
  CHECK(in_coroot_lattice(a2, Coweight{3, 0}));
  CHECK(in_coroot_lattice(g2, Coweight{1, 0}));  // G2 is simply connected and adjoint
  // simple coroots are in the lattice for every system
  for (const auto& label : supported_system_labels()) {
    const auto sys = build_root_system(label);
    for (int i = 0; i < sys.rank(); ++i) CHECK(in_coroot_lattice(sys, sys.simple_coroot(i)));
  }
}
