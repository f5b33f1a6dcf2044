#pragma once

// Small quantum homology of CP^1 with a formal energy variable, and the
// leading-term structure of the class attached to a Hamiltonian circle
// action.
//
// An element is a finite sum of c * B * eps^e with B in {FUND, PT}, c an exact
// rational and e a real energy exponent. The product table is
//   FUND * x = x,   PT * PT = FUND * eps^area.
// Exponents add under multiplication; corrections of a class are the terms
// below its leading exponent.

#include <optional>
#include <string_view>
#include <vector>

#include "hofer/exact.hpp"

namespace hofer {

enum class Basis { Fund, Pt };

std::string_view to_string(Basis b);
/// "FUND" / "PT" (case-insensitive); throws InvalidArgument.
Basis parse_basis(std::string_view name);

struct QuantumTerm {
  Rational coefficient;
  Basis basis = Basis::Fund;
  double energy_exponent = 0.0;
};

/// Terms are kept sorted by (basis, exponent); terms whose exponents agree to
/// kExponentTolerance (relative) are merged and zero coefficients dropped.
class QuantumElement {
 public:
  static constexpr double kExponentTolerance = 1e-12;

  QuantumElement() = default;
  explicit QuantumElement(std::vector<QuantumTerm> terms);

  static QuantumElement monomial(Rational coefficient, Basis basis, double exponent);
  static QuantumElement unit() { return monomial(1, Basis::Fund, 0.0); }

  const std::vector<QuantumTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest energy exponent among the terms; requires a nonzero element.
  double max_exponent() const;

  QuantumElement& operator+=(const QuantumElement& other);
  friend QuantumElement operator+(QuantumElement a, const QuantumElement& b) { return a += b; }
  friend QuantumElement operator-(QuantumElement a, const QuantumElement& b) {
    return a += Rational(-1) * b;
  }
  friend QuantumElement operator*(const Rational& s, const QuantumElement& x);

  /// Same terms up to the exponent tolerance.
  friend bool approx_equal(const QuantumElement& a, const QuantumElement& b);

 private:
  void normalize();
  std::vector<QuantumTerm> terms_;
};

/// Bilinear product for the given line-class area (> 0).
QuantumElement quantum_product(const QuantumElement& a, const QuantumElement& b, double area);

/// x is a unit iff both of its images under PT -> +-eps^{area/2} FUND are
/// nonzero. The zero element and the zero divisors FUND eps^{area/2} +- PT
/// (and their multiples) are not.
bool is_invertible(const QuantumElement& x, double area);

struct InverseResult {
  QuantumElement inverse;   // truncated after `orders` correction orders
  QuantumElement residual;  // x * inverse - FUND
  bool verified = false;    // residual lies strictly below order `orders`
};

/// Inverse in the completion, truncated after `orders` correction orders and
/// verified by multiplying back. std::nullopt when x is not invertible.
std::optional<InverseResult> inverse(const QuantumElement& x, double area, int orders = 3);

struct PsiLeadingReport {
  int sign = 1;
  Basis leading_basis = Basis::Pt;
  double leading_exponent = 0.0;
  std::vector<QuantumTerm> corrections;
  bool nonzero = false;
  bool invertible = false;

  QuantumElement as_element() const;
};

/// Assembles sign * PT * eps^{l_plus} + corrections. Throws
/// EnergyBoundViolation if some correction exponent is >= l_plus and
/// InvalidArgument for sign not in {+1, -1} or area <= 0.
PsiLeadingReport psi_leading(double l_plus, int sign, std::vector<QuantumTerm> corrections, double area);

}  // namespace hofer
