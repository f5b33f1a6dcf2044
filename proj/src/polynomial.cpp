#include "hofer/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hofer/errors.hpp"

namespace hofer {

Polynomial::Polynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::int64_t coeff, int degree) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t Polynomial::operator[](int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

std::int64_t Polynomial::evaluate_at_one() const {
  std::int64_t sum = 0;
  for (auto c : coeffs_) sum += c;
  return sum;
}

bool Polynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

bool Polynomial::has_only_even_powers() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted(int shift) const {
  if (is_zero()) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>(shift), 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(c));
}

Polynomial Polynomial::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  auto end = coeffs_.begin() + std::min<std::ptrdiff_t>(coeffs_.size(), max_degree + 1);
  return Polynomial(std::vector<std::int64_t>(coeffs_.begin(), end));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const auto mag = c < 0 ? -c : c;
    if (mag != 1 || i == 0) out << mag;
    if (i == 1) out << "t";
    if (i > 1) out << "t^" << i;
    first = false;
  }
  return out.str();
}

Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw InexactDivision("division by the zero polynomial");
  const auto lead = divisor.coeffs().back();
  if (lead != 1 && lead != -1) throw InexactDivision("divisor must be monic up to sign");
  if (dividend.is_zero()) return {};

  std::vector<std::int64_t> rem = dividend.coeffs();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) throw InexactDivision("nonzero remainder: " + dividend.to_string());
  std::vector<std::int64_t> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1, 0);
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const auto q = rem[static_cast<std::size_t>(k + dd)] * lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor[j];
  }
  for (auto r : rem)
    if (r != 0)
      throw InexactDivision(dividend.to_string() + " is not divisible by " + divisor.to_string());
  return Polynomial(std::move(quot));
}

}  // namespace hofer
