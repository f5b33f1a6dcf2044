#include "hofer/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hofer/circle_index.hpp"
#include "hofer/errors.hpp"
#include "hofer/hofer_geometry.hpp"
#include "hofer/loop_morse.hpp"
#include "hofer/quantum.hpp"
#include "hofer/variational.hpp"
#include "hofer/verification.hpp"

namespace hofer::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kLattice = "lattice-units";
constexpr const char* kDimensionless = "dimensionless";

// Thrown for malformed argument values; reported like a parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double fmt(double x) { return round_significant(x, 12); }

Json coweight_json(const Coweight& c) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < c.rank(); ++i) a.push_back(c[i]);
  return a;
}

Coweight parse_coweight(const std::string& text, const RootSystem& system) {
  std::vector<std::int64_t> coords;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse coweight coordinate '" + item + "' in '" + text + "'");
    }
    if (used != item.size()) throw UsageError("cannot parse coweight coordinate '" + item + "' in '" + text + "'");
    coords.push_back(v);
  }
  if (static_cast<int>(coords.size()) != system.rank())
    throw UsageError("coweight '" + text + "' has " + std::to_string(coords.size()) + " coordinates, " +
                     system.label() + " needs " + std::to_string(system.rank()));
  IntVector c(system.rank());
  for (int i = 0; i < system.rank(); ++i) c[i] = coords[static_cast<std::size_t>(i)];
  return Coweight(std::move(c));
}

Json norm_json(const NormReport& r) {
  return Json{{"value_squared", to_fraction_string(r.value_squared)}, {"value", fmt(r.value_float)}};
}

Json term_json(const QuantumTerm& t) {
  return Json{{"coefficient", to_fraction_string(t.coefficient)},
              {"basis", std::string(to_string(t.basis))},
              {"exponent", fmt(t.energy_exponent)}};
}

QuantumTerm parse_correction(const std::string& text) {
  // coefficient:basis:exponent, e.g. "1/2:FUND:0.1"
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) throw UsageError("correction '" + text + "' is not coefficient:basis:exponent");
  QuantumTerm t;
  try {
    t.coefficient = Rational(text.substr(0, first));
    t.basis = parse_basis(text.substr(first + 1, second - first - 1));
    std::size_t used = 0;
    const auto exp_text = text.substr(second + 1);
    t.energy_exponent = std::stod(exp_text, &used);
    if (used != exp_text.size()) throw UsageError("bad exponent");
  } catch (const std::exception&) {
    throw UsageError("cannot parse correction '" + text + "'");
  }
  return t;
}

Json error_json(const std::string& command, const Error& e) {
  return Json{{"command", command}, {"error", Json{{"kind", e.kind()}, {"message", e.what()}}}};
}

struct Emitter {
  std::ostream& out;
  std::string out_path;

  void operator()(const Json& j) const {
    const std::string text = j.dump(2) + "\n";
    out << text;
    if (!out_path.empty()) {
      std::ofstream file(out_path);
      if (!file) throw UsageError("cannot open output file '" + out_path + "'");
      file << text;
    }
  }
};

int cmd_index(const std::string& label, const std::string& xi_text, const Emitter& emit) {
  const auto system = build_root_system(label);
  const auto gamma = make_circle_subgroup(system, parse_coweight(xi_text, system));
  const auto rep = index_equality_report(gamma);
  emit(Json{{"command", "index"},
            {"system", system.label()},
            {"xi", coweight_json(rep.xi)},
            {"regular", rep.regular},
            {"weights", rep.weights.weights},
            {"virtual_index", rep.virtual_index},
            {"riemannian_index", rep.riemannian_index},
            {"agree", rep.agree},
            {"units",
             {{"xi", kDimensionless},
              {"weights", kDimensionless},
              {"virtual_index", kDimensionless},
              {"riemannian_index", kDimensionless}}}});
  return rep.agree ? kSuccess : kCheckFailed;
}

int cmd_weights(const std::string& label, const std::string& xi_text, const Emitter& emit) {
  const auto system = build_root_system(label);
  const auto gamma = make_circle_subgroup(system, parse_coweight(xi_text, system));
  const auto w = weights_at_max(gamma);
  emit(Json{{"command", "weights"},
            {"system", system.label()},
            {"xi", coweight_json(gamma.xi)},
            {"regular", gamma.regular},
            {"weights", w.weights},
            {"complex_dimension", w.weights.size()},
            {"units", {{"xi", kDimensionless}, {"weights", kDimensionless}, {"complex_dimension", kDimensionless}}}});
  return kSuccess;
}

int cmd_hofer(const std::string& label, const std::string& xi_text, const std::string& eta_text,
              const Emitter& emit) {
  const auto system = build_root_system(label);
  const auto xi = parse_coweight(xi_text, system);
  const auto eta = eta_text.empty() ? xi : parse_coweight(eta_text, system);
  const auto length = hofer_length_circle(system, xi);
  const auto pn = positive_norm(system, eta, xi);
  const auto ni = norm_inequality(system, eta, xi);
  Json pn_json = norm_json(pn.norm);
  pn_json["maximum"] = to_fraction_string(pn.maximum);
  pn_json["argmax"] = coweight_json(pn.argmax);
  emit(Json{{"command", "hofer"},
            {"system", system.label()},
            {"xi", coweight_json(xi)},
            {"eta", coweight_json(eta)},
            {"hofer_length", norm_json(length)},
            {"positive_norm", pn_json},
            {"riemannian_norm", norm_json(make_norm_report(inner(system, eta, eta)))},
            {"norm_inequality",
             {{"holds", ni.holds},
              {"equality", ni.equality},
              {"max_squared", to_fraction_string(ni.lhs)},
              {"bound", to_fraction_string(ni.rhs)}}},
            {"units",
             {{"xi", kDimensionless},
              {"eta", kDimensionless},
              {"hofer_length", kLattice},
              {"positive_norm", kLattice},
              {"riemannian_norm", kLattice},
              {"norm_inequality", kLattice}}}});
  return ni.holds ? kSuccess : kCheckFailed;
}

int cmd_omega_series(const std::string& label, int cutoff, const Emitter& emit) {
  const auto system = build_root_system(label);
  const auto report = omega_g_series(system, cutoff);
  Json strata = Json::array();
  for (const auto& s : enumerate_critical_strata(system, cutoff, StrataLattice::Coroot))
    strata.push_back(Json{{"xi", coweight_json(s.xi)},
                          {"bott_index", s.bott_index},
                          {"stratum_poly", s.stratum_poly.coeffs()}});
  emit(Json{{"command", "omega-series"},
            {"system", system.label()},
            {"cutoff", cutoff},
            {"exponents", classical_exponents(system)},
            {"coefficients", report.series.coeffs},
            {"oracle", report.oracle.coeffs},
            {"perfect", report.perfect},
            {"strata", strata},
            {"units",
             {{"cutoff", kDimensionless},
              {"exponents", kDimensionless},
              {"coefficients", kDimensionless},
              {"oracle", kDimensionless},
              {"strata", kDimensionless}}}});
  return report.perfect ? kSuccess : kCheckFailed;
}

int cmd_hessian(int m, int n, const std::string& functional, double tol, double step, std::int64_t seed,
                const Emitter& emit) {
  HessianOptions options;
  options.tol = tol;
  options.step = step;
  if (seed >= 0) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    std::normal_distribution<double> g;
    options.axis = Eigen::Vector3d(g(rng), g(rng), g(rng)).normalized();
  }
  const Functional f = parse_functional(functional);
  const auto rep = hessian_spectrum(f, m, n, options);
  const int expected = 2 * (2 * m - 1);
  const bool consistent = f == Functional::Energy ? rep.negative_count == expected : rep.negative_count >= expected;
  Json axis = Json::array({fmt(options.axis.x()), fmt(options.axis.y()), fmt(options.axis.z())});
  Json j{{"command", "hessian-su2"},
         {"functional", std::string(to_string(f))},
         {"m", m},
         {"n", n},
         {"axis", axis},
         {"dimension", rep.dimension},
         {"negative_count", rep.negative_count},
         {"zero_count", rep.zero_count},
         {"min_eigenvalue", fmt(rep.min_eigenvalue)},
         {"tolerance", fmt(rep.tolerance)},
         {"scale", fmt(rep.scale)},
         {"step", fmt(rep.step)},
         {"expected_negative_count", expected},
         {"consistent", consistent}};
  Json units{{"m", kDimensionless},
             {"n", kDimensionless},
             {"axis", kDimensionless},
             {"dimension", kDimensionless},
             {"negative_count", kDimensionless},
             {"zero_count", kDimensionless},
             {"min_eigenvalue", kLattice},
             {"tolerance", kDimensionless},
             {"scale", kLattice},
             {"step", kDimensionless},
             {"expected_negative_count", kDimensionless}};
  if (rep.unrestricted_negative_count) {
    j["unrestricted_negative_count"] = *rep.unrestricted_negative_count;
    units["unrestricted_negative_count"] = kDimensionless;
  }
  j["units"] = units;
  emit(j);
  return consistent ? kSuccess : kCheckFailed;
}

int cmd_seidel(std::int64_t xi_value, double area, int sign, const std::vector<std::string>& correction_texts,
               const Emitter& emit) {
  const auto a1 = build_root_system(Family::A, 1);
  const Coweight xi{xi_value};
  const auto length = hofer_length_circle(a1, xi);
  std::vector<QuantumTerm> corrections;
  for (const auto& t : correction_texts) corrections.push_back(parse_correction(t));
  const auto rep = psi_leading(length.value_float, sign, corrections, area);
  const auto inv = inverse(rep.as_element(), area);

  Json corr = Json::array();
  for (const auto& c : rep.corrections) corr.push_back(term_json(c));
  Json j{{"command", "seidel-cp1"},
         {"xi", coweight_json(xi)},
         {"area", fmt(area)},
         {"hofer_length", norm_json(length)},
         {"leading",
          {{"sign", rep.sign},
           {"basis", std::string(to_string(rep.leading_basis))},
           {"exponent", fmt(rep.leading_exponent)}}},
         {"corrections", corr},
         {"nonzero", rep.nonzero},
         {"invertible", rep.invertible}};
  if (inv) {
    // Leading term of the inverse: largest exponent after shifting PT by area/2.
    const auto& terms = inv->inverse.terms();
    auto weight = [&](const QuantumTerm& t) { return t.energy_exponent + (t.basis == Basis::Pt ? area / 2 : 0.0); };
    const auto lead = std::max_element(terms.begin(), terms.end(),
                                       [&](const auto& a, const auto& b) { return weight(a) < weight(b); });
    j["inverse_leading"] = term_json(*lead);
    j["inverse_verified"] = inv->verified;
  } else {
    j["inverse_leading"] = nullptr;
    j["inverse_verified"] = false;
  }
  j["units"] = Json{{"xi", kDimensionless},          {"area", kLattice},
                    {"hofer_length", kLattice},      {"leading", kLattice},
                    {"corrections", kLattice},       {"inverse_leading", kLattice}};
  emit(j);
  return rep.nonzero && rep.invertible ? kSuccess : kCheckFailed;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) items.push_back(item);
  return items;
}

int cmd_verify(const std::string& systems, const std::string& checks, int box, int samples, std::int64_t seed,
               int cutoff, const Emitter& emit) {
  VerificationRun run;
  run.systems = systems == "all" ? supported_system_labels() : split_list(systems);
  for (auto& s : run.systems) s = build_root_system(s).label();
  if (checks != "all") run.checks = split_list(checks);
  for (const auto& c : run.checks)
    if (std::find(all_check_names().begin(), all_check_names().end(), c) == all_check_names().end())
      throw UsageError("unknown check '" + c + "'");
  if (box < 0) throw UsageError("--box must be >= 0");
  run.coordinate_box = box;
  run.samples = samples;
  run.seed = static_cast<std::uint64_t>(seed);
  run.series_cutoff = cutoff;
  run_verification(run);

  Json results = Json::array();
  for (const auto& r : run.results) {
    Json ce = nullptr;
    if (r.counterexample) {
      ce = Json::object();
      for (const auto& [k, v] : *r.counterexample) ce[k] = v;
    }
    results.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"counterexample", ce}});
  }
  emit(Json{{"command", "verify"},
            {"systems", run.systems},
            {"coordinate_box", run.coordinate_box},
            {"checks", run.checks},
            {"results", results},
            {"passed", run.passed()},
            {"units", {{"coordinate_box", kDimensionless}, {"results", kDimensionless}}}});
  return run.passed() ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Virtual index, Hofer lengths and loop-group Morse data for circle actions on coadjoint orbits",
               "hofer"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Also write the JSON report to this file");
  app.fallthrough();

  std::string system = "A1", xi, eta, functional = "energy", systems = "all", checks = "all";
  int m = 1, n = 64, cutoff = 8, box = 4, samples = 10000, sign = 1, verify_cutoff = 12;
  double tol = 1e-6, step = 1e-4, area = 1.0;
  std::int64_t seed = -1, seidel_xi = 2, verify_seed = 20240101;
  std::vector<std::string> corrections;

  auto* index = app.add_subcommand("index", "Virtual and Riemannian index of a circle subgroup");
  index->add_option("--system", system, "Root system label, e.g. A2")->required();
  index->add_option("--xi", xi, "Coweight, comma separated, fundamental-coweight basis")->required();

  auto* weights = app.add_subcommand("weights", "Weights of the circle action at the moment-map maximum");
  weights->add_option("--system", system)->required();
  weights->add_option("--xi", xi)->required();

  auto* hofer = app.add_subcommand("hofer", "Hofer length, positive norm and the norm inequality");
  hofer->add_option("--system", system)->required();
  hofer->add_option("--xi", xi, "Base coweight of the orbit")->required();
  hofer->add_option("--eta", eta, "Coweight whose positive norm is taken (default: xi)");

  auto* omega = app.add_subcommand("omega-series", "Poincare series of the based loop group");
  omega->add_option("--system", system)->required();
  omega->add_option("--cutoff", cutoff, "Even truncation degree")->required();

  auto* hessian = app.add_subcommand("hessian-su2", "Finite-difference Hessian spectrum on SU(2) loops");
  hessian->add_option("--m", m, "Winding number")->required();
  hessian->add_option("--n", n, "Sampling resolution N")->required();
  hessian->add_option("--functional", functional, "energy or lplus")->check(CLI::IsMember({"energy", "lplus"}));
  hessian->add_option("--tol", tol, "Relative zero-band tolerance");
  hessian->add_option("--step", step, "Finite-difference step");
  hessian->add_option("--seed", seed, "Random loop axis from this seed (default: first imaginary unit)");

  auto* seidel = app.add_subcommand("seidel-cp1", "Leading term of the CP^1 class of a circle action");
  seidel->add_option("--xi", seidel_xi, "A1 coweight generating the circle action");
  seidel->add_option("--area", area, "Area of the line class");
  seidel->add_option("--sign", sign, "Orientation sign +1 or -1");
  seidel->add_option("--correction", corrections, "Correction term coefficient:basis:exponent (repeatable)");

  auto* verify = app.add_subcommand("verify", "Run the cross-module verification suite");
  verify->add_option("--systems", systems, "Comma separated labels or 'all'");
  verify->add_option("--box", box, "Coordinate bound for coweight sweeps");
  verify->add_option("--checks", checks, "Comma separated subset of checks or 'all'");
  verify->add_option("--samples", samples, "Random pairs per rank >= 3 system");
  verify->add_option("--seed", verify_seed, "Seed for random sampling");
  verify->add_option("--cutoff", verify_cutoff, "Truncation degree for the loop-group series check");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  const Emitter emit{out, out_path};
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*index) return cmd_index(system, xi, emit);
    if (*weights) return cmd_weights(system, xi, emit);
    if (*hofer) return cmd_hofer(system, xi, eta, emit);
    if (*omega) return cmd_omega_series(system, cutoff, emit);
    if (*hessian) return cmd_hessian(m, n, functional, tol, step, seed, emit);
    if (*seidel) return cmd_seidel(seidel_xi, area, sign, corrections, emit);
    if (*verify) return cmd_verify(systems, checks, box, samples, verify_seed, verify_cutoff, emit);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.get_subcommands().front()->help();
    return kUsageError;
  } catch (const EnergyBoundViolation& e) {
    emit(error_json(command, e));
    return kCheckFailed;
  } catch (const NumericalFailure& e) {
    emit(error_json(command, e));
    return kCheckFailed;
  } catch (const InexactDivision& e) {
    emit(error_json(command, e));
    return kCheckFailed;
  } catch (const Error& e) {
    // Rejected input: unsupported system, zero coweight, bad cutoff, ...
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hofer::cli
