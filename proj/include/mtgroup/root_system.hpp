#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtgroup/errors.hpp"
#include "mtgroup/int_matrix.hpp"
#include "mtgroup/integer.hpp"

namespace mtg {

enum class Family { A, B, C, D };

inline char family_letter(Family f) { return "ABCD"[static_cast<int>(f)]; }

inline Family parse_family(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  throw InvalidInput("unknown root system family '" + std::string(s) + "' (expected A, B, C or D)");
}

/// A root in standard coordinates chi_1, ..., chi_m of the ambient lattice.
using Root = std::vector<int>;

/// Element of X_*(T^ad) (tensor Q), in coordinates lambda_i dual to chi_i.
struct Cocharacter {
  std::vector<Rational> coords;

  std::size_t size() const { return coords.size(); }
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;

  friend Cocharacter operator+(Cocharacter a, const Cocharacter& b) {
    if (a.size() != b.size()) throw InvalidInput("cocharacter sum: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend Cocharacter operator*(const Rational& k, Cocharacter a) {
    for (auto& x : a.coords) x *= k;
    return a;
  }
};

inline Cocharacter make_cocharacter(std::initializer_list<Rational> coords) { return Cocharacter{coords}; }

inline Cocharacter zero_cocharacter(std::size_t dim) { return Cocharacter{std::vector<Rational>(dim)}; }

/// Exact value of <mu, gamma> without the integrality requirement.
inline Rational pairing_value(const Cocharacter& mu, std::span<const int> gamma) {
  if (mu.size() != gamma.size())
    throw InvalidInput("pairing: cocharacter has " + std::to_string(mu.size()) + " coordinates, root has " +
                       std::to_string(gamma.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (gamma[i] != 0) s += mu.coords[i] * gamma[i];
  return s;
}

/// <mu, gamma>; mu must lie in the adjoint cocharacter lattice.
inline Integer pairing(const Cocharacter& mu, std::span<const int> gamma) {
  Rational v = pairing_value(mu, gamma);
  if (!is_integral(v))
    throw InvalidInput("cocharacter pairs non-integrally (" + to_string(v) +
                       ") with a root: not in the adjoint cocharacter lattice");
  return numerator_of(v);
}

/// Classical irreducible root system in Bourbaki coordinates.
///
/// Simple roots are chi_i - chi_{i+1} (i < n) followed by
///   A_n: chi_n - chi_{n+1}   (ambient dimension n + 1)
///   B_n: chi_n
///   C_n: 2 chi_n
///   D_n: chi_{n-1} + chi_n
/// Roots are listed positive first (generation order), then their negatives
/// in the same order.
class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_; }
  std::string name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& simple_roots() const { return simple_; }
  std::vector<Root> positive_roots() const {
    return {roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(roots_.size() / 2)};
  }
  bool is_positive(std::size_t root_index) const { return root_index < roots_.size() / 2; }

  /// Coefficients c_i with roots()[k] = sum c_i alpha_i.
  const std::vector<int>& simple_coefficients(std::size_t root_index) const { return coefficients_.at(root_index); }

  std::optional<std::size_t> index_of(const Root& gamma) const {
    auto it = index_.find(gamma);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Simple coroot alpha_i^vee = 2 alpha_i / (alpha_i, alpha_i).
  const Cocharacter& simple_coroot(std::size_t i) const { return coroots_.at(i); }

  /// Fundamental coweights: <omega_i, alpha_j> = delta_ij, lying in the span of the roots.
  const std::vector<Cocharacter>& fundamental_coweights() const { return coweights_; }

  /// cartan(i, j) = <alpha_i^vee, alpha_j>.
  const IntMatrix& cartan_matrix() const { return cartan_; }

  bool adjacent(std::size_t i, std::size_t j) const { return i != j && cartan_(i, j) != 0; }

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

  friend RootSystem build_root_system(Family family, int rank);

 private:
  RootSystem() = default;

  Family family_ = Family::A;
  int rank_ = 0;
  int ambient_ = 0;
  std::vector<Root> roots_;
  std::vector<Root> simple_;
  std::vector<std::vector<int>> coefficients_;
  std::map<Root, std::size_t> index_;
  std::vector<Cocharacter> coroots_;
  std::vector<Cocharacter> coweights_;
  IntMatrix cartan_;
};

namespace detail {

inline int dot(const Root& a, const Root& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Exact inverse of a nonsingular integer matrix by Gauss-Jordan over Q.
inline std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidInput("singular Gram matrix");
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational k = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= k * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace detail

inline RootSystem build_root_system(Family family, int rank) {
  const int minimum = family == Family::A ? 1 : family == Family::D ? 3 : 2;
  if (rank < minimum)
    throw InvalidInput(std::string("rank too small: ") + family_letter(family) + std::to_string(rank) +
                       " requires rank >= " + std::to_string(minimum));
  if (rank > 64) throw InvalidInput("rank too large (limit 64)");

  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  const int n = rank;
  const int m = family == Family::A ? n + 1 : n;
  rs.ambient_ = m;

  auto unit = [m](int i, int si, int j = -1, int sj = 0) {
    Root r(m, 0);
    r[i] += si;
    if (j >= 0) r[j] += sj;
    return r;
  };

  std::vector<Root> positive;
  if (family == Family::A) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) positive.push_back(unit(i, 1, j, -1));
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        positive.push_back(unit(i, 1, j, -1));
        positive.push_back(unit(i, 1, j, 1));
      }
    if (family == Family::B)
      for (int i = 0; i < n; ++i) positive.push_back(unit(i, 1));
    if (family == Family::C)
      for (int i = 0; i < n; ++i) positive.push_back(unit(i, 2));
  }
  rs.roots_ = positive;
  for (const Root& r : positive) {
    Root neg = r;
    for (int& x : neg) x = -x;
    rs.roots_.push_back(neg);
  }
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_[rs.roots_[k]] = k;

  for (int i = 0; i + 1 < n; ++i) rs.simple_.push_back(unit(i, 1, i + 1, -1));
  switch (family) {
    case Family::A: rs.simple_.push_back(unit(n - 1, 1, n, -1)); break;
    case Family::B: rs.simple_.push_back(unit(n - 1, 1)); break;
    case Family::C: rs.simple_.push_back(unit(n - 1, 2)); break;
    case Family::D: rs.simple_.push_back(unit(n - 2, 1, n - 1, 1)); break;
  }

  // omega_i = sum_j (G^{-1})_{ij} alpha_j with G the Gram matrix of the simple roots.
  std::vector<std::vector<int>> gram(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = detail::dot(rs.simple_[i], rs.simple_[j]);
  auto ginv = detail::inverse(gram);
  for (int i = 0; i < n; ++i) {
    Cocharacter w = zero_cocharacter(m);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k) w.coords[k] += ginv[i][j] * rs.simple_[j][k];
    rs.coweights_.push_back(std::move(w));
  }

  for (const Root& a : rs.simple_) {
    Cocharacter c = zero_cocharacter(m);
    const int len = detail::dot(a, a);
    for (int k = 0; k < m; ++k) c.coords[k] = Rational(2 * a[k], len);
    rs.coroots_.push_back(std::move(c));
  }

  rs.cartan_ = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.cartan_(i, j) = pairing(rs.coroots_[i], rs.simple_[j]);

  for (const Root& r : rs.roots_) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = static_cast<int>(pairing(rs.coweights_[i], r));
    rs.coefficients_.push_back(std::move(c));
  }
  return rs;
}

/// Number of roots predicted by the classical closed forms.
inline std::size_t classical_root_count(Family family, int n) {
  switch (family) {
    case Family::A: return static_cast<std::size_t>(n) * (n + 1);
    case Family::B:
    case Family::C: return 2 * static_cast<std::size_t>(n) * n;
    case Family::D: return 2 * static_cast<std::size_t>(n) * (n - 1);
  }
  return 0;
}

namespace detail {

/// For A_n the ambient space is Q^{n+1}; X_*(T^ad) sits in the sum-zero hyperplane.
inline bool in_root_span(const Cocharacter& mu, const RootSystem& rs) {
  if (rs.family() != Family::A) return true;
  Rational sum = 0;
  for (const auto& x : mu.coords) sum += x;
  return sum == 0;
}

}  // namespace detail

/// (<mu, alpha_1>, ..., <mu, alpha_n>): coordinates of mu against the
/// fundamental coweight basis. Throws if mu is not in X_*(T^ad).
inline std::vector<Integer> simple_pairings(const Cocharacter& mu, const RootSystem& rs) {
  if (mu.size() != static_cast<std::size_t>(rs.ambient_dim()))
    throw InvalidInput("cocharacter has " + std::to_string(mu.size()) + " coordinates, " + rs.name() +
                       " expects " + std::to_string(rs.ambient_dim()));
  if (!detail::in_root_span(mu, rs)) throw InvalidInput("type A cocharacters must have coordinate sum 0");
  std::vector<Integer> out;
  for (const Root& a : rs.simple_roots()) out.push_back(pairing(mu, a));
  return out;
}

inline bool in_coweight_lattice(const Cocharacter& mu, const RootSystem& rs) {
  if (mu.size() != static_cast<std::size_t>(rs.ambient_dim()) || !detail::in_root_span(mu, rs)) return false;
  for (const Root& a : rs.simple_roots())
    if (!is_integral(pairing_value(mu, a))) return false;
  return true;
}

/// sum_i x_i omega_i.
inline Cocharacter from_simple_pairings(const RootSystem& rs, std::span<const Integer> x) {
  if (x.size() != static_cast<std::size_t>(rs.rank())) throw InvalidInput("wrong number of simple pairings");
  Cocharacter mu = zero_cocharacter(rs.ambient_dim());
  for (int i = 0; i < rs.rank(); ++i) {
    if (x[i] == 0) continue;
    mu = mu + Rational(x[i]) * rs.fundamental_coweights()[i];
  }
  return mu;
}

/// X_*(T^ad): the lattice of cocharacters pairing integrally with every root.
struct CoweightLattice {
  std::vector<Cocharacter> basis;
  int rank = 0;
};

inline CoweightLattice coweight_lattice(const RootSystem& rs) {
  return CoweightLattice{rs.fundamental_coweights(), rs.rank()};
}

/// [X_*(T^ad) : coroot lattice] = |det(Cartan matrix)|.
inline Integer fundamental_group_order(const RootSystem& rs) {
  return abs(determinant(rs.cartan_matrix()));
}

}  // namespace mtg
