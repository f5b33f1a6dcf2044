#pragma once

// Finite crystallographic root systems of rank <= 4 (no E series), in
// Bourbaki numbering. Roots are integer vectors in the simple-root basis and
// coweights are integer vectors in the fundamental-coweight basis, so the
// pairing between them is a plain dot product.
//
// Conventions:
//   cartan(i, j) = <alpha_i^vee, alpha_j>
//   inner products normalized so that long roots have squared length 2.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hofer/exact.hpp"
#include "hofer/polynomial.hpp"

namespace hofer {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G', F = 'F' };

/// Root written in the simple-root basis.
using RootVector = IntVector;

/// Element of the coweight lattice in the fundamental-coweight basis; the
/// simple root alpha_i pairs with it to coords[i]. A nonzero coweight is the
/// infinitesimal generator of a circle subgroup theta -> exp(2 pi theta xi).
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(IntVector coords) : coords_(std::move(coords)) {}
  Coweight(std::initializer_list<std::int64_t> coords);

  static Coweight zero(Eigen::Index rank) { return Coweight(IntVector::Zero(rank)); }

  const IntVector& coords() const { return coords_; }
  Eigen::Index rank() const { return coords_.size(); }
  std::int64_t operator[](Eigen::Index i) const { return coords_[i]; }

  bool is_zero() const { return (coords_.array() == 0).all(); }
  bool is_dominant() const { return (coords_.array() >= 0).all(); }

  /// Comma separated coordinates, e.g. "1,-2".
  std::string to_string() const;

  friend bool operator==(const Coweight& a, const Coweight& b) {
    return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
  }
  /// Lexicographic, so coweights can key ordered containers.
  friend bool operator<(const Coweight& a, const Coweight& b);

  friend Coweight operator+(const Coweight& a, const Coweight& b) {
    return Coweight(IntVector(a.coords_ + b.coords_));
  }
  friend Coweight operator*(std::int64_t s, const Coweight& a) {
    return Coweight(IntVector(s * a.coords_));
  }

 private:
  IntVector coords_;
};

class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// "A2", "G2", ...
  std::string label() const;

  const IntMatrix& cartan_matrix() const { return cartan_; }
  /// Positive integers d_i with diag(d) * cartan symmetric; d_i is
  /// proportional to the squared length of alpha_i.
  const IntVector& symmetrizer() const { return symmetrizer_; }
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }

  /// Gram matrix of the fundamental coweights is
  /// gram_numerators() / gram_denominator().
  const IntMatrix& gram_numerators() const { return gram_numer_; }
  std::int64_t gram_denominator() const { return gram_denom_; }
  Rational gram(Eigen::Index i, Eigen::Index j) const;

  /// Gram matrix converted to another scalar type (double for display).
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gram_as() const {
    return gram_numer_.cast<Scalar>() / static_cast<Scalar>(gram_denom_);
  }

  /// Squared length of alpha_i under the long-root-squared-length-2 scale.
  Rational simple_root_length_squared(int i) const;

  /// alpha_i^vee in the fundamental-coweight basis (row i of the Cartan matrix).
  Coweight simple_coroot(int i) const;

  /// Order of the Weyl group from the classification table.
  std::int64_t weyl_group_order() const { return weyl_order_; }

 private:
  friend RootSystem build_root_system(Family family, int rank);
  RootSystem() = default;

  Family family_ = Family::A;
  int rank_ = 0;
  IntMatrix cartan_;
  IntVector symmetrizer_;
  std::vector<RootVector> positive_roots_;
  IntMatrix gram_numer_;
  std::int64_t gram_denom_ = 1;
  std::int64_t weyl_order_ = 1;
};

/// Supported: A1-A4, B2-B4, C2-C4, D4, G2, F4. Throws UnsupportedSystem.
RootSystem build_root_system(Family family, int rank);

/// Parses labels such as "A2" or "f4".
RootSystem build_root_system(std::string_view label);

/// Labels of every supported system in a fixed order.
const std::vector<std::string>& supported_system_labels();

/// Known sizes of the positive root set and Weyl group, for self-checks.
std::size_t known_positive_root_count(Family family, int rank);
std::int64_t known_weyl_group_order(Family family, int rank);

/// Cartan matrix for the given type, without building the full system.
IntMatrix cartan_matrix(Family family, int rank);

/// sum_i n_i c_i for root = sum n_i alpha_i. Throws DimensionError.
std::int64_t pairing(const RootVector& root, const Coweight& xi);

/// Exact Ad-invariant inner product of two coweights.
Rational inner(const RootSystem& system, const Coweight& a, const Coweight& b);

/// inner(a, b) * gram_denominator(), an integer.
Integer inner_scaled(const RootSystem& system, const Coweight& a, const Coweight& b);

/// Simple reflection s_i acting on a coweight.
Coweight reflect(const RootSystem& system, int i, const Coweight& xi);

/// Simple reflection s_i acting on a root.
RootVector reflect_root(const RootSystem& system, int i, const RootVector& root);

/// Weyl orbit by breadth-first closure under simple reflections, returned in
/// lexicographic order.
std::vector<Coweight> weyl_orbit(const RootSystem& system, const Coweight& xi);

/// The unique dominant element of the Weyl orbit of xi.
Coweight dominant_representative(const RootSystem& system, const Coweight& xi);

/// True when no root pairs to zero with xi.
bool is_regular(const RootSystem& system, const Coweight& xi);

/// True when xi is an integer combination of simple coroots, i.e. when
/// exp(2 pi xi) is the identity of the simply connected group.
bool in_coroot_lattice(const RootSystem& system, const Coweight& xi);

/// sum_w t^(2 l(w)) over the parabolic subgroup generated by the listed
/// simple reflections, by breadth-first enumeration with length tracking.
Polynomial weyl_poincare(const RootSystem& system, std::span<const int> wall_subset);

/// weyl_poincare over every simple reflection.
Polynomial weyl_poincare(const RootSystem& system);

}  // namespace hofer
