#include "hofer/hofer_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hofer/errors.hpp"

namespace hofer {

namespace {

constexpr int kPolarCells = 256;
constexpr int kAzimuthCells = 512;

template <typename Visit>
void for_each_s2_node(Visit&& visit) {
  // Midpoints in the polar angle are symmetric about the equator and the
  // azimuth count is even, so every node x has its antipode -x with the same
  // weight.
  const double dtheta = std::numbers::pi / kPolarCells;
  const double dphi = 2.0 * std::numbers::pi / kAzimuthCells;
  for (int i = 0; i < kPolarCells; ++i) {
    const double theta = (i + 0.5) * dtheta;
    const double weight = std::sin(theta) * dtheta * dphi;
    for (int j = 0; j < kAzimuthCells; ++j) {
      const double phi = j * dphi;
      const Eigen::Vector3d x(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                              std::cos(theta));
      visit(x, weight);
    }
  }
}

}  // namespace

NormReport make_norm_report(Rational value_squared) {
  NormReport r;
  r.value_float = sqrt_to_double(value_squared);
  r.value_squared = std::move(value_squared);
  return r;
}

PositiveNorm positive_norm(const RootSystem& system, const Coweight& eta, const Coweight& xi) {
  if (xi.is_zero()) throw DegenerateOrbit("the orbit of the zero coweight is a point");
  if (eta.rank() != system.rank()) throw DimensionError("eta rank does not match " + system.label());

  // Pre-contract the Gram numerators with eta; each orbit point then costs one
  // integer dot product.
  const IntVector g_eta = system.gram_numerators() * eta.coords();
  const auto orbit = weyl_orbit(system, xi);
  __int128 best = 0;
  const Coweight* best_point = nullptr;
  for (const auto& w : orbit) {
    __int128 value = 0;
    for (Eigen::Index i = 0; i < w.rank(); ++i) value += static_cast<__int128>(w[i]) * g_eta[i];
    if (best_point == nullptr || value > best) {
      best = value;
      best_point = &w;
    }
  }
  PositiveNorm out;
  out.maximum = Rational(Integer(best), Integer(system.gram_denominator()));
  out.argmax = *best_point;
  out.norm = make_norm_report(out.maximum * out.maximum / inner(system, xi, xi));
  return out;
}

NormInequality norm_inequality(const RootSystem& system, const Coweight& eta, const Coweight& xi) {
  const auto pn = positive_norm(system, eta, xi);
  NormInequality out;
  out.lhs = pn.maximum * pn.maximum;
  out.rhs = inner(system, xi, xi) * inner(system, eta, eta);
  out.holds = pn.maximum >= 0 && out.lhs <= out.rhs;
  out.equality = out.lhs == out.rhs;
  return out;
}

bool check_norm_inequality(const RootSystem& system, const Coweight& eta, const Coweight& xi) {
  return norm_inequality(system, eta, xi).holds;
}

NormReport hofer_length_circle(const RootSystem& system, const Coweight& xi) {
  if (xi.is_zero()) throw DegenerateOrbit("the zero coweight generates the constant loop");
  // The generating Hamiltonian is autonomous, so L^+ is its maximum
  // <xi/||xi||, xi> = ||xi||.
  return make_norm_report(inner(system, xi, xi));
}

double max_length_measure(std::span<const double> lengths) {
  if (lengths.empty()) throw EmptyFamily("max length measure of an empty family");
  return *std::max_element(lengths.begin(), lengths.end());
}

double normalization_integral_s2(const Eigen::Vector3d& eta) {
  double total = 0.0;
  for_each_s2_node([&](const Eigen::Vector3d& x, double w) { total += w * x.dot(eta); });
  return total;
}

double max_on_s2_grid(const Eigen::Vector3d& eta) {
  double best = -std::numeric_limits<double>::infinity();
  for_each_s2_node([&](const Eigen::Vector3d& x, double) { best = std::max(best, x.dot(eta)); });
  return best;
}

}  // namespace hofer
