#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hofer {

/// Integer polynomial in t, coefficient i multiplies t^i. Trailing zeros are
/// trimmed so equality is structural; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<std::int64_t> coeffs);
  explicit Polynomial(std::vector<std::int64_t> coeffs);

  static Polynomial monomial(std::int64_t coeff, int degree);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t operator[](int degree) const;

  std::int64_t evaluate_at_one() const;
  bool is_palindromic() const;
  bool has_only_even_powers() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Multiplication by t^shift.
  Polynomial shifted(int shift) const;

  /// Coefficients of degree > max_degree dropped.
  Polynomial truncated(int max_degree) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Exact quotient; throws InexactDivision unless the remainder is zero.
/// The divisor must have leading coefficient +-1 (true of every Poincare
/// polynomial we divide by).
Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor);

}  // namespace hofer
