#include "hofer/quantum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "hofer/errors.hpp"

namespace hofer {

namespace {

bool same_exponent(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= QuantumElement::kExponentTolerance * scale;
}

// Element of the Novikov field: sum c eps^e, sorted by decreasing exponent.
struct Series {
  std::vector<std::pair<Rational, double>> terms;

  void normalize() {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::pair<Rational, double>> merged;
    for (auto& t : terms) {
      if (!merged.empty() && same_exponent(merged.back().second, t.second))
        merged.back().first += t.first;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const auto& t) { return t.first == 0; });
    terms = std::move(merged);
  }
};

Series operator*(const Series& a, const Series& b) {
  Series out;
  for (const auto& [ca, ea] : a.terms)
    for (const auto& [cb, eb] : b.terms) out.terms.emplace_back(ca * cb, ea + eb);
  out.normalize();
  return out;
}

Series operator+(Series a, const Series& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  a.normalize();
  return a;
}

Series scaled(Series a, const Rational& s) {
  for (auto& t : a.terms) t.first *= s;
  a.normalize();
  return a;
}

// With y = PT eps^{-area/2}, y^2 = FUND, so x = A + B y and the ring splits
// along y -> +1 and y -> -1.
std::pair<Series, Series> split_channels(const QuantumElement& x, double area) {
  Series a, b;
  for (const auto& t : x.terms()) {
    if (t.basis == Basis::Fund) a.terms.emplace_back(t.coefficient, t.energy_exponent);
    else b.terms.emplace_back(t.coefficient, t.energy_exponent + area / 2.0);
  }
  a.normalize();
  b.normalize();
  return {a + b, a + scaled(b, Rational(-1))};
}

// Leading term inverted, corrections expanded as a geometric series. Returns
// the truncated inverse and the largest exponent of the relative correction
// (-inf when there is none).
std::pair<Series, double> series_inverse(const Series& p, int orders) {
  const auto& [c0, e0] = p.terms.front();
  Series r;
  for (std::size_t i = 1; i < p.terms.size(); ++i)
    r.terms.emplace_back(p.terms[i].first / c0, p.terms[i].second - e0);
  r.normalize();
  const double r_max = r.terms.empty() ? -std::numeric_limits<double>::infinity() : r.terms.front().second;

  Series sum{{{Rational(1), 0.0}}};
  Series power = sum;
  const Series minus_r = scaled(r, Rational(-1));
  for (int k = 1; k <= orders && !r.terms.empty(); ++k) {
    power = power * minus_r;
    sum = sum + power;
  }
  Series lead_inv{{{Rational(1) / c0, -e0}}};
  return {lead_inv * sum, r_max};
}

void require_area(double area) {
  if (!(area > 0.0) || !std::isfinite(area)) throw InvalidArgument("line-class area must be positive");
}

}  // namespace

std::string_view to_string(Basis b) { return b == Basis::Fund ? "FUND" : "PT"; }

Basis parse_basis(std::string_view name) {
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "FUND") return Basis::Fund;
  if (upper == "PT") return Basis::Pt;
  throw InvalidArgument("unknown basis '" + std::string(name) + "' (expected FUND or PT)");
}

QuantumElement::QuantumElement(std::vector<QuantumTerm> terms) : terms_(std::move(terms)) { normalize(); }

QuantumElement QuantumElement::monomial(Rational coefficient, Basis basis, double exponent) {
  return QuantumElement({QuantumTerm{std::move(coefficient), basis, exponent}});
}

void QuantumElement::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const QuantumTerm& a, const QuantumTerm& b) {
    if (a.basis != b.basis) return a.basis < b.basis;
    return a.energy_exponent < b.energy_exponent;
  });
  std::vector<QuantumTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().basis == t.basis &&
        same_exponent(merged.back().energy_exponent, t.energy_exponent))
      merged.back().coefficient += t.coefficient;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const QuantumTerm& t) { return t.coefficient == 0; });
  terms_ = std::move(merged);
}

double QuantumElement::max_exponent() const {
  if (terms_.empty()) throw InvalidArgument("the zero element has no exponent");
  double best = terms_.front().energy_exponent;
  for (const auto& t : terms_) best = std::max(best, t.energy_exponent);
  return best;
}

QuantumElement& QuantumElement::operator+=(const QuantumElement& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

QuantumElement operator*(const Rational& s, const QuantumElement& x) {
  std::vector<QuantumTerm> terms = x.terms_;
  for (auto& t : terms) t.coefficient *= s;
  return QuantumElement(std::move(terms));
}

bool approx_equal(const QuantumElement& a, const QuantumElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.basis != y.basis || x.coefficient != y.coefficient ||
        !same_exponent(x.energy_exponent, y.energy_exponent))
      return false;
  }
  return true;
}

QuantumElement quantum_product(const QuantumElement& a, const QuantumElement& b, double area) {
  require_area(area);
  std::vector<QuantumTerm> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      QuantumTerm t{x.coefficient * y.coefficient, Basis::Fund, x.energy_exponent + y.energy_exponent};
      if (x.basis == Basis::Pt && y.basis == Basis::Pt) t.energy_exponent += area;  // unique line through two points
      else if (x.basis == Basis::Pt || y.basis == Basis::Pt) t.basis = Basis::Pt;
      terms.push_back(std::move(t));
    }
  }
  return QuantumElement(std::move(terms));
}

bool is_invertible(const QuantumElement& x, double area) {
  require_area(area);
  const auto [plus, minus] = split_channels(x, area);
  return !plus.terms.empty() && !minus.terms.empty();
}

std::optional<InverseResult> inverse(const QuantumElement& x, double area, int orders) {
  if (orders < 0) throw InvalidArgument("correction orders must be >= 0");
  if (!is_invertible(x, area)) return std::nullopt;
  const auto [plus, minus] = split_channels(x, area);
  const auto [inv_plus, r_plus] = series_inverse(plus, orders);
  const auto [inv_minus, r_minus] = series_inverse(minus, orders);

  // inverse = ((A+B)^{-1} (1 + y) + (A-B)^{-1} (1 - y)) / 2
  const Rational half(1, 2);
  const Series fund_part = scaled(inv_plus + inv_minus, half);
  const Series y_part = scaled(inv_plus + scaled(inv_minus, Rational(-1)), half);
  std::vector<QuantumTerm> terms;
  for (const auto& [c, e] : fund_part.terms) terms.push_back({c, Basis::Fund, e});
  for (const auto& [c, e] : y_part.terms) terms.push_back({c, Basis::Pt, e - area / 2.0});

  InverseResult result;
  result.inverse = QuantumElement(std::move(terms));
  result.residual = quantum_product(x, result.inverse, area) - QuantumElement::unit();

  // Each channel leaves -(-r)^{orders+1}, so every residual term must sit
  // below `orders` times the largest relative correction exponent.
  const double r_max = std::max(r_plus, r_minus);
  if (!std::isfinite(r_max)) {
    result.verified = result.residual.is_zero();
  } else {
    result.verified = std::all_of(result.residual.terms().begin(), result.residual.terms().end(),
                                  [&](const QuantumTerm& t) {
                                    const double v = t.energy_exponent + (t.basis == Basis::Pt ? area / 2.0 : 0.0);
                                    return v < orders * r_max;
                                  });
  }
  return result;
}

QuantumElement PsiLeadingReport::as_element() const {
  std::vector<QuantumTerm> terms = corrections;
  terms.push_back(QuantumTerm{Rational(sign), leading_basis, leading_exponent});
  return QuantumElement(std::move(terms));
}

PsiLeadingReport psi_leading(double l_plus, int sign, std::vector<QuantumTerm> corrections, double area) {
  require_area(area);
  if (sign != 1 && sign != -1) throw InvalidArgument("orientation sign must be +1 or -1");
  if (!std::isfinite(l_plus)) throw InvalidArgument("leading exponent must be finite");
  for (const auto& c : corrections) {
    if (!(c.energy_exponent < l_plus) || same_exponent(c.energy_exponent, l_plus))
      throw EnergyBoundViolation("correction " + std::string(to_string(c.basis)) + " at exponent " +
                                 std::to_string(c.energy_exponent) + " is not below the leading exponent " +
                                 std::to_string(l_plus));
  }
  PsiLeadingReport report;
  report.sign = sign;
  report.leading_basis = Basis::Pt;
  report.leading_exponent = l_plus;
  std::erase_if(corrections, [](const QuantumTerm& t) { return t.coefficient == 0; });
  report.corrections = std::move(corrections);
  const QuantumElement element = report.as_element();
  report.nonzero = !element.is_zero();
  report.invertible = is_invertible(element, area);
  return report;
}

}  // namespace hofer
