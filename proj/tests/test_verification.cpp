#include <doctest.h>

#include "hofer/errors.hpp"
#include "hofer/verification.hpp"

using namespace hofer;

TEST_CASE("box iteration visits every point once") {
  int count = 0;
  std::set<Coweight> seen;
  for_each_in_box(3, 2, [&](const Coweight& c) {
    ++count;
    seen.insert(c);
    CHECK(c.coords().cwiseAbs().maxCoeff() <= 2);
  });
  CHECK(count == 125);
  CHECK(seen.size() == 125);
}

TEST_CASE("individual checks pass on small inputs") {
  const auto b2 = build_root_system(Family::B, 2);
  const auto a3 = build_root_system(Family::A, 3);
  for (const auto& r : {check_index_equality(b2, 3), check_norm_inequality(b2, 3, 0, 1),
                        check_norm_inequality(a3, 2, 500, 1), check_hofer_length(a3, 1), check_orbit_sum_zero(a3, 2),
                        check_omega_series(a3, 10), check_hessian(32, 20, 3), check_seidel(2.0)}) {
    CAPTURE(r.name);
    CHECK(r.passed);
    CHECK(r.cases > 0);
    CHECK_FALSE(r.counterexample.has_value());
  }
  CHECK(check_norm_inequality(b2, 2, 0, 1).cases == 24 * 25);
}

TEST_CASE("merging keeps the first counterexample") {
  CheckResult a;
  a.name = "x";
  a.cases = 3;
  CheckResult b;
  b.cases = 2;
  b.passed = false;
  b.counterexample = Counterexample{{"xi", "[1]"}};
  CheckResult c;
  c.passed = false;
  c.counterexample = Counterexample{{"xi", "[2]"}};
  a.merge(b);
  a.merge(c);
  CHECK_FALSE(a.passed);
  CHECK(a.cases == 5);
  REQUIRE(a.counterexample.has_value());
  CHECK(a.counterexample->front().second == "[1]");
}

TEST_CASE("verification runs") {
  VerificationRun run;
  run.systems = {"A1", "B2", "G2"};
  run.coordinate_box = 2;
  run.samples = 100;
  run_verification(run);
  CHECK(run.passed());
  CHECK(run.results.size() == all_check_names().size());
  for (std::size_t i = 0; i < run.results.size(); ++i) CHECK(run.results[i].name == all_check_names()[i]);

  run.checks = {"bogus"};
  CHECK_THROWS_AS(run_verification(run), InvalidArgument);
  run.systems = {"E8"};
  run.checks = {"seidel"};
  CHECK_THROWS_AS(run_verification(run), UnsupportedSystem);
}
