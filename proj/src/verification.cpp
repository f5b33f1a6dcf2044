#include "hofer/verification.hpp"

#include <cmath>
#include <random>
#include <set>

#include "hofer/circle_index.hpp"
#include "hofer/errors.hpp"
#include "hofer/hofer_geometry.hpp"
#include "hofer/loop_morse.hpp"
#include "hofer/quantum.hpp"
#include "hofer/variational.hpp"

namespace hofer {

namespace {

std::string bracket(const Coweight& c) { return "[" + c.to_string() + "]"; }

void fail(CheckResult& r, Counterexample ce) {
  if (r.passed) r.counterexample = std::move(ce);
  r.passed = false;
}

std::string series_string(const TruncatedSeries& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) out += (i ? "," : "") + std::to_string(s.coeffs[i]);
  return out + "]";
}

}  // namespace

void CheckResult::merge(const CheckResult& other) {
  cases += other.cases;
  if (!other.passed && passed) counterexample = other.counterexample;
  passed = passed && other.passed;
}

bool VerificationRun::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

CheckResult check_index_equality(const RootSystem& system, int box) {
  CheckResult r;
  r.name = "index-equality";
  for_each_in_box(system.rank(), box, [&](const Coweight& xi) {
    if (xi.is_zero()) return;
    const auto gamma = make_circle_subgroup(system, xi);
    const auto v = virtual_index(weights_at_max(gamma));
    const auto ri = riemannian_index_conjugate(gamma);
    const auto b = bott_index(system, dominant_representative(system, xi));
    ++r.cases;
    if (v != ri || v != b)
      fail(r, {{"system", system.label()}, {"xi", bracket(xi)}, {"virtual_index", std::to_string(v)},
               {"riemannian_index", std::to_string(ri)}, {"bott_index", std::to_string(b)}});
  });
  return r;
}

CheckResult check_norm_inequality(const RootSystem& system, int box, int samples, std::uint64_t seed) {
  CheckResult r;
  r.name = "norm-inequality";
  auto test = [&](const Coweight& eta, const Coweight& xi) {
    const auto ni = norm_inequality(system, eta, xi);
    ++r.cases;
    if (!ni.holds)
      fail(r, {{"system", system.label()}, {"eta", bracket(eta)}, {"xi", bracket(xi)},
               {"max_squared", to_fraction_string(ni.lhs)}, {"bound", to_fraction_string(ni.rhs)}});
  };
  if (system.rank() <= 2) {
    for_each_in_box(system.rank(), box, [&](const Coweight& xi) {
      if (xi.is_zero()) return;
      for_each_in_box(system.rank(), box, [&](const Coweight& eta) { test(eta, xi); });
    });
    return r;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-box, box);
  auto draw = [&] {
    IntVector c(system.rank());
    for (auto& x : c) x = coord(rng);
    return Coweight(std::move(c));
  };
  for (int s = 0; s < samples; ++s) {
    Coweight xi = draw();
    while (xi.is_zero()) xi = draw();
    test(draw(), xi);
  }
  return r;
}

CheckResult check_hofer_length(const RootSystem& system, int box) {
  CheckResult r;
  r.name = "norm-inequality";
  for_each_in_box(system.rank(), box, [&](const Coweight& xi) {
    if (xi.is_zero()) return;
    ++r.cases;
    const auto len = hofer_length_circle(system, xi);
    const auto self = norm_inequality(system, xi, xi);
    if (len.value_squared != inner(system, xi, xi) || !self.equality)
      fail(r, {{"system", system.label()}, {"xi", bracket(xi)},
               {"hofer_length_squared", to_fraction_string(len.value_squared)},
               {"inner", to_fraction_string(inner(system, xi, xi))},
               {"self_equality", self.equality ? "true" : "false"}});
  });
  return r;
}

CheckResult check_orbit_sum_zero(const RootSystem& system, int box) {
  CheckResult r;
  r.name = "norm-inequality";
  std::set<Coweight> reps;
  for_each_in_box(system.rank(), box, [&](const Coweight& xi) { reps.insert(dominant_representative(system, xi)); });
  for (const auto& rep : reps) {
    ++r.cases;
    IntVector sum = IntVector::Zero(system.rank());
    for (const auto& w : weyl_orbit(system, rep)) sum += w.coords();
    if (!(sum.array() == 0).all())
      fail(r, {{"system", system.label()}, {"orbit_of", bracket(rep)}, {"orbit_sum", bracket(Coweight(sum))}});
  }
  return r;
}

CheckResult check_omega_series(const RootSystem& system, int cutoff) {
  CheckResult r;
  r.name = "omega-series";
  const auto report = omega_g_series(system, cutoff);
  r.cases = 1;
  if (!report.perfect)
    fail(r, {{"system", system.label()}, {"cutoff", std::to_string(cutoff)},
             {"series", series_string(report.series)}, {"oracle", series_string(report.oracle)}});
  return r;
}

CheckResult check_hessian(int n, int random_loops, std::uint64_t seed) {
  CheckResult r;
  r.name = "hessian";
  for (int m : {1, 2}) {
    const auto rep = hessian_spectrum(Functional::Energy, m, n);
    ++r.cases;
    const int expected = 2 * (2 * m - 1);
    if (rep.negative_count != expected || (m == 1 && rep.zero_count != 2))
      fail(r, {{"functional", "energy"}, {"m", std::to_string(m)}, {"n", std::to_string(n)},
               {"negative_count", std::to_string(rep.negative_count)},
               {"zero_count", std::to_string(rep.zero_count)}, {"expected_negative", std::to_string(expected)}});
  }
  {
    const auto rep = hessian_spectrum(Functional::LPlus, 1, n);
    ++r.cases;
    if (rep.negative_count < 2)
      fail(r, {{"functional", "lplus"}, {"m", "1"}, {"n", std::to_string(n)},
               {"negative_count", std::to_string(rep.negative_count)}, {"expected_at_least", "2"}});
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(16, 96);
  for (int i = 0; i < random_loops; ++i) {
    const auto loop = random_loop(size(rng), rng);
    const double e = discrete_energy(loop);
    const double l = discrete_lplus(loop);
    ++r.cases;
    if (l * l > e * (1.0 + 1e-10))
      fail(r, {{"loop", std::to_string(i)}, {"lplus_squared", std::to_string(l * l)}, {"energy", std::to_string(e)}});
  }
  return r;
}

CheckResult check_seidel(double area) {
  CheckResult r;
  r.name = "seidel";
  const auto a1 = build_root_system(Family::A, 1);
  const auto length = hofer_length_circle(a1, Coweight{2});
  const auto rep = psi_leading(length.value_float, 1, {}, area);
  ++r.cases;
  const auto inv = inverse(rep.as_element(), area);
  if (!rep.nonzero || !rep.invertible || rep.leading_basis != Basis::Pt ||
      std::abs(rep.leading_exponent - std::sqrt(2.0)) > 1e-12 * std::sqrt(2.0) || !inv || !inv->verified)
    fail(r, {{"xi", "[2]"}, {"nonzero", rep.nonzero ? "true" : "false"},
             {"invertible", rep.invertible ? "true" : "false"}, {"leading_exponent", std::to_string(rep.leading_exponent)}});

  for (double offset : {0.0, 0.25, 1.0}) {
    ++r.cases;
    bool raised = false;
    try {
      psi_leading(length.value_float, 1, {QuantumTerm{1, Basis::Fund, length.value_float + offset}}, area);
    } catch (const EnergyBoundViolation&) {
      raised = true;
    }
    if (!raised)
      fail(r, {{"correction_exponent", std::to_string(length.value_float + offset)},
               {"leading_exponent", std::to_string(length.value_float)}, {"expected", "EnergyBoundViolation"}});
  }
  return r;
}

void run_verification(VerificationRun& run) {
  run.results.clear();
  std::vector<RootSystem> systems;
  for (const auto& label : run.systems) systems.push_back(build_root_system(label));

  for (const auto& name : run.checks) {
    CheckResult total;
    total.name = name;
    if (name == "index-equality") {
      for (const auto& s : systems) total.merge(check_index_equality(s, run.coordinate_box));
    } else if (name == "norm-inequality") {
      for (const auto& s : systems) {
        total.merge(check_norm_inequality(s, run.coordinate_box, run.samples, run.seed));
        total.merge(check_hofer_length(s, run.coordinate_box));
        total.merge(check_orbit_sum_zero(s, run.coordinate_box));
      }
    } else if (name == "omega-series") {
      for (const auto& s : systems) total.merge(check_omega_series(s, run.series_cutoff));
    } else if (name == "hessian") {
      total.merge(check_hessian(64, 1000, run.seed));
    } else if (name == "seidel") {
      total.merge(check_seidel(1.0));
    } else {
      throw InvalidArgument("unknown check '" + name + "'");
    }
    run.results.push_back(std::move(total));
  }
}

}  // namespace hofer
