#include "hofer/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hofer/errors.hpp"

namespace hofer {

namespace {

bool supported(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1 && rank <= 4;
    case Family::B:
    case Family::C: return rank >= 2 && rank <= 4;
    case Family::D: return rank == 4;
    case Family::G: return rank == 2;
    case Family::F: return rank == 4;
  }
  return false;
}

std::string make_label(Family family, int rank) {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void require_supported(Family family, int rank) {
  if (!supported(family, rank))
    throw UnsupportedSystem("unsupported root system " + make_label(family, rank) +
                            " (supported: A1-A4, B2-B4, C2-C4, D4, G2, F4)");
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// d_i a_ij = d_j a_ji, propagated along the Dynkin diagram from node 0.
IntVector compute_symmetrizer(const IntMatrix& cartan) {
  const auto n = cartan.rows();
  std::vector<Rational> d(static_cast<std::size_t>(n), Rational(0));
  d[0] = 1;
  std::deque<Eigen::Index> queue{0};
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i || cartan(i, j) == 0 || d[j] != 0) continue;
      d[j] = d[i] * make_rational(cartan(i, j), cartan(j, i));
      queue.push_back(j);
    }
  }
  Integer lcm_den = 1;
  for (const auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
  IntVector out(n);
  Integer g = 0;
  std::vector<Integer> scaled;
  for (const auto& x : d) {
    Integer v = boost::multiprecision::numerator(x) * (lcm_den / boost::multiprecision::denominator(x));
    scaled.push_back(v);
    g = boost::multiprecision::gcd(g, v);
  }
  for (Eigen::Index i = 0; i < n; ++i) out[i] = static_cast<std::int64_t>(scaled[i] / g);
  return out;
}

std::int64_t coroot_dot(const IntMatrix& cartan, int i, const RootVector& root) {
  return cartan.row(i).dot(root);
}

std::vector<RootVector> reflection_closure(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  auto less = [](const RootVector& a, const RootVector& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  };
  std::set<RootVector, decltype(less)> seen(less);
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e = RootVector::Zero(n);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RootVector image = beta;
      image[i] -= coroot_dot(cartan, i, beta);
      if ((image.array() < 0).any()) continue;  // only beta == alpha_i leaves the positive cone
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  std::vector<RootVector> roots(seen.begin(), seen.end());
  // Height first, then reverse lexicographic: simple roots lead in Bourbaki order.
  std::stable_sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) {
    const auto ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
  });
  return roots;
}

}  // namespace

Coweight::Coweight(std::initializer_list<std::int64_t> coords)
    : coords_(static_cast<Eigen::Index>(coords.size())) {
  std::copy(coords.begin(), coords.end(), coords_.data());
}

std::string Coweight::to_string() const {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < coords_.size(); ++i) out << (i ? "," : "") << coords_[i];
  return out.str();
}

bool operator<(const Coweight& a, const Coweight& b) {
  return std::lexicographical_compare(a.coords_.data(), a.coords_.data() + a.coords_.size(),
                                      b.coords_.data(), b.coords_.data() + b.coords_.size());
}

std::string RootSystem::label() const { return make_label(family_, rank_); }

Rational RootSystem::gram(Eigen::Index i, Eigen::Index j) const {
  return Rational(gram_numer_(i, j), gram_denom_);
}

Rational RootSystem::simple_root_length_squared(int i) const {
  return Rational(2 * symmetrizer_[i], symmetrizer_.maxCoeff());
}

Coweight RootSystem::simple_coroot(int i) const { return Coweight(IntVector(cartan_.row(i).transpose())); }

IntMatrix cartan_matrix(Family family, int rank) {
  require_supported(family, rank);
  IntMatrix c = IntMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) c(i, i) = 2;
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
      for (int i = 0; i + 1 < rank; ++i) c(i, i + 1) = c(i + 1, i) = -1;
      if (family == Family::B) c(rank - 1, rank - 2) = -2;  // alpha_n short
      if (family == Family::C) c(rank - 2, rank - 1) = -2;  // alpha_n long
      break;
    case Family::D:
      c(0, 1) = c(1, 0) = -1;
      c(1, 2) = c(2, 1) = -1;
      c(1, 3) = c(3, 1) = -1;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
    case Family::F:
      c(0, 1) = c(1, 0) = -1;
      c(1, 2) = -1;
      c(2, 1) = -2;
      c(2, 3) = c(3, 2) = -1;
      break;
  }
  return c;
}

std::size_t known_positive_root_count(Family family, int rank) {
  require_supported(family, rank);
  switch (family) {
    case Family::A: return static_cast<std::size_t>(rank * (rank + 1) / 2);
    case Family::B:
    case Family::C: return static_cast<std::size_t>(rank * rank);
    case Family::D: return static_cast<std::size_t>(rank * (rank - 1));
    case Family::G: return 6;
    case Family::F: return 24;
  }
  return 0;
}

std::int64_t known_weyl_group_order(Family family, int rank) {
  require_supported(family, rank);
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return (std::int64_t{1} << rank) * factorial(rank);
    case Family::D: return (std::int64_t{1} << (rank - 1)) * factorial(rank);
    case Family::G: return 12;
    case Family::F: return 1152;
  }
  return 0;
}

RootSystem build_root_system(Family family, int rank) {
  RootSystem sys;
  sys.family_ = family;
  sys.rank_ = rank;
  sys.cartan_ = cartan_matrix(family, rank);
  sys.symmetrizer_ = compute_symmetrizer(sys.cartan_);
  sys.positive_roots_ = reflection_closure(sys.cartan_);
  sys.weyl_order_ = known_weyl_group_order(family, rank);

  // Gram of fundamental coweights = diag(2 / |alpha_i|^2) * C^{-T}
  //                               = diag(max d / d_i) * adj(C)^T / det(C).
  const auto det = static_cast<std::int64_t>(exact_determinant(sys.cartan_));
  const IntMatrix adj_t = adjugate(sys.cartan_).transpose();
  const std::int64_t dmax = sys.symmetrizer_.maxCoeff();
  std::int64_t dlcm = 1;
  for (Eigen::Index i = 0; i < rank; ++i) dlcm = std::lcm(dlcm, sys.symmetrizer_[i]);
  IntMatrix numer(rank, rank);
  for (Eigen::Index i = 0; i < rank; ++i)
    for (Eigen::Index j = 0; j < rank; ++j)
      numer(i, j) = dmax * adj_t(i, j) * (dlcm / sys.symmetrizer_[i]);
  std::int64_t denom = det * dlcm;
  std::int64_t g = denom;
  for (Eigen::Index k = 0; k < numer.size(); ++k) g = std::gcd(g, numer.data()[k]);
  sys.gram_numer_ = numer / g;
  sys.gram_denom_ = denom / g;
  return sys;
}

RootSystem build_root_system(std::string_view label) {
  if (label.size() != 2 || !std::isalpha(static_cast<unsigned char>(label[0])) ||
      !std::isdigit(static_cast<unsigned char>(label[1])))
    throw UnsupportedSystem("cannot parse root system label '" + std::string(label) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  const int rank = label[1] - '0';
  switch (letter) {
    case 'A': return build_root_system(Family::A, rank);
    case 'B': return build_root_system(Family::B, rank);
    case 'C': return build_root_system(Family::C, rank);
    case 'D': return build_root_system(Family::D, rank);
    case 'G': return build_root_system(Family::G, rank);
    case 'F': return build_root_system(Family::F, rank);
    default: break;
  }
  throw UnsupportedSystem("unsupported root system family '" + std::string(label) + "'");
}

const std::vector<std::string>& supported_system_labels() {
  static const std::vector<std::string> labels{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2",
                                               "C3", "C4", "D4", "G2", "F4"};
  return labels;
}

std::int64_t pairing(const RootVector& root, const Coweight& xi) {
  if (root.size() != xi.rank())
    throw DimensionError("root has dimension " + std::to_string(root.size()) + ", coweight has rank " +
                         std::to_string(xi.rank()));
  return root.dot(xi.coords());
}

Integer inner_scaled(const RootSystem& system, const Coweight& a, const Coweight& b) {
  if (a.rank() != system.rank() || b.rank() != system.rank())
    throw DimensionError("coweight rank does not match " + system.label());
  const auto& g = system.gram_numerators();
  Integer sum = 0;
  for (Eigen::Index i = 0; i < a.rank(); ++i) {
    if (a[i] == 0) continue;
    Integer row = 0;
    for (Eigen::Index j = 0; j < b.rank(); ++j) row += Integer(g(i, j)) * b[j];
    sum += row * a[i];
  }
  return sum;
}

Rational inner(const RootSystem& system, const Coweight& a, const Coweight& b) {
  return Rational(inner_scaled(system, a, b), Integer(system.gram_denominator()));
}

Coweight reflect(const RootSystem& system, int i, const Coweight& xi) {
  // s_i(xi) = xi - alpha_i(xi) alpha_i^vee
  IntVector c = xi.coords();
  c -= xi[i] * system.cartan_matrix().row(i).transpose();
  return Coweight(std::move(c));
}

RootVector reflect_root(const RootSystem& system, int i, const RootVector& root) {
  RootVector out = root;
  out[i] -= coroot_dot(system.cartan_matrix(), i, root);
  return out;
}

std::vector<Coweight> weyl_orbit(const RootSystem& system, const Coweight& xi) {
  if (xi.rank() != system.rank()) throw DimensionError("coweight rank does not match " + system.label());
  // Every non-dominant point has a unique parent: the reflection in its first
  // negative coordinate. Walking that tree down from the dominant point visits
  // each orbit point once, with no lookup structure.
  std::vector<Coweight> orbit{dominant_representative(system, xi)};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (int i = 0; i < system.rank(); ++i) {
      if (orbit[k][i] <= 0) continue;
      Coweight child = reflect(system, i, orbit[k]);
      bool first_negative = true;
      for (int j = 0; j < i && first_negative; ++j) first_negative = child[j] >= 0;
      if (first_negative) orbit.push_back(std::move(child));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

Coweight dominant_representative(const RootSystem& system, const Coweight& xi) {
  if (xi.rank() != system.rank()) throw DimensionError("coweight rank does not match " + system.label());
  Coweight w = xi;
  for (;;) {
    int i = 0;
    while (i < system.rank() && w[i] >= 0) ++i;
    if (i == system.rank()) return w;
    w = reflect(system, i, w);
  }
}

bool is_regular(const RootSystem& system, const Coweight& xi) {
  return std::none_of(system.positive_roots().begin(), system.positive_roots().end(),
                      [&](const RootVector& r) { return pairing(r, xi) == 0; });
}

bool in_coroot_lattice(const RootSystem& system, const Coweight& xi) {
  // xi = sum x_j alpha_j^vee  <=>  C^T x = c  <=>  x = adj(C^T) c / det(C).
  const IntMatrix& c = system.cartan_matrix();
  const auto det = static_cast<std::int64_t>(exact_determinant(c));
  const IntVector x_scaled = adjugate(IntMatrix(c.transpose())) * xi.coords();
  return std::all_of(x_scaled.begin(), x_scaled.end(), [det](std::int64_t v) { return v % det == 0; });
}

Polynomial weyl_poincare(const RootSystem& system, std::span<const int> wall_subset) {
  for (int i : wall_subset)
    if (i < 0 || i >= system.rank()) throw DimensionError("simple root index out of range");
  // rho^vee is regular, so W_J acts freely on its orbit and each orbit point
  // stands for one group element; BFS depth is the word length.
  const Coweight start(IntVector::Ones(system.rank()));
  std::map<Coweight, int> length{{start, 0}};
  std::deque<Coweight> queue{start};
  while (!queue.empty()) {
    Coweight w = std::move(queue.front());
    queue.pop_front();
    const int lw = length.at(w);
    for (int i : wall_subset) {
      Coweight image = reflect(system, i, w);
      if (length.emplace(image, lw + 1).second) queue.push_back(std::move(image));
    }
  }
  Polynomial poly;
  for (const auto& [w, l] : length) poly += Polynomial::monomial(1, 2 * l);
  return poly;
}

Polynomial weyl_poincare(const RootSystem& system) {
  std::vector<int> all(static_cast<std::size_t>(system.rank()));
  std::iota(all.begin(), all.end(), 0);
  return weyl_poincare(system, all);
}

}  // namespace hofer
