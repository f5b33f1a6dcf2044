#include "hofer/exact.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "hofer/errors.hpp"

namespace hofer {

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw std::domain_error("zero denominator");
  return q < 0 ? Rational(-p, -q) : Rational(p, q);
}

Integer exact_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Integer(1);

  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = m(i, j);

  Integer sign = 1;
  Integer prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return Integer(0);
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        // Bareiss guarantees this division is exact.
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix adjugate(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("adjugate of a non-square matrix");
  const Eigen::Index n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Integer cof = exact_determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = static_cast<std::int64_t>(cof);
    }
  }
  return adj;
}

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double sqrt_to_double(const Rational& r) {
  if (r < 0) throw DimensionError("square root of a negative exact value");
  return std::sqrt(to_double(r));
}

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

}  // namespace hofer
