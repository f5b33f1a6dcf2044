#pragma once

// Exact scalar types and small integer linear algebra shared by the
// combinatorial modules.

#include <cstdint>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace hofer {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest supported rank; bounds the inline storage of the integer types.
inline constexpr int kMaxRank = 4;

using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxRank, 1>;
using IntMatrix =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxRank, kMaxRank>;

/// p/q for any q != 0; the sign is moved to the numerator first.
Rational make_rational(const Integer& p, const Integer& q);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer exact_determinant(const IntMatrix& m);

/// Adjugate, so that m * adjugate(m) == det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// "p/q" with q > 0 and gcd(p, q) == 1; integers are written "p/1".
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

/// Floating square root of a nonnegative exact value.
double sqrt_to_double(const Rational& r);

/// Round to 12 significant digits so that every float leaving the library
/// through a report prints identically.
double round_significant(double x, int digits = 12);

}  // namespace hofer
