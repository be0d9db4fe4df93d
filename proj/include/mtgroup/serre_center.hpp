#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mtgroup/errors.hpp"
#include "mtgroup/int_matrix.hpp"
#include "mtgroup/integer.hpp"

namespace mtg {

/// Z/n_1 x ... x Z/n_k, elements as exponent vectors.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
    for (int n : orders_)
      if (n < 1) throw InvalidInput("group generator orders must be positive");
    size_ = 1;
    exponent_ = 1;
    for (int n : orders_) {
      size_ *= n;
      exponent_ = std::lcm(exponent_, n);
      if (size_ > 100000) throw InvalidInput("Galois group too large (limit 100000 elements)");
    }
  }

  const std::vector<int>& orders() const { return orders_; }
  long size() const { return size_; }
  int exponent() const { return exponent_; }

  std::vector<std::vector<int>> elements() const {
    std::vector<std::vector<int>> out;
    std::vector<int> g(orders_.size(), 0);
    for (long count = 0; count < size_; ++count) {
      out.push_back(g);
      for (std::size_t i = orders_.size(); i-- > 0;) {
        if (++g[i] < orders_[i]) break;
        g[i] = 0;
      }
    }
    return out;
  }

  std::vector<int> reduce(std::vector<int> g) const {
    if (g.size() != orders_.size()) throw InvalidInput("group element has wrong number of components");
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = ((g[i] % orders_[i]) + orders_[i]) % orders_[i];
    return g;
  }

  std::vector<int> scale(long k, const std::vector<int>& g) const {
    std::vector<int> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      out[i] = static_cast<int>(((k % orders_[i]) * g[i] % orders_[i] + orders_[i]) % orders_[i]);
    return out;
  }

  bool is_identity(const std::vector<int>& g) const {
    return std::all_of(g.begin(), g.end(), [](int x) { return x == 0; });
  }

  int order_of(const std::vector<int>& g) const {
    int o = 1;
    for (std::size_t i = 0; i < g.size(); ++i) o = std::lcm(o, orders_[i] / std::gcd(orders_[i], g[i]));
    return o;
  }

  /// chi_k(g) = exp(2 pi i v / exponent) with v returned in [0, exponent).
  int character_value(const std::vector<int>& k, const std::vector<int>& g) const {
    long v = 0;
    for (std::size_t i = 0; i < g.size(); ++i) v += static_cast<long>(k[i]) * g[i] * (exponent_ / orders_[i]);
    return static_cast<int>(v % exponent_);
  }

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<int> orders_;
  long size_ = 1;
  int exponent_ = 1;
};

/// A Galois orbit of complex characters, i.e. a rational irreducible representation.
struct RationalCharacter {
  std::vector<int> label;  ///< lexicographically smallest exponent vector in the orbit
  int order = 1;           ///< order of each character in the orbit
  long size = 1;           ///< phi(order)
  int sign_at_conj = 1;    ///< chi(c) = +1 or -1
};

namespace detail {

inline long euler_phi(long m) {
  long result = m;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  if (m > 1) result -= result / m;
  return result;
}

inline int moebius(long m) {
  int mu = 1;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      mu = -mu;
    }
  if (m > 1) mu = -mu;
  return mu;
}

/// sum over t in (Z/m)^x of exp(2 pi i t a / m).
inline long ramanujan_sum(long m, long a) {
  long g = std::gcd(((a % m) + m) % m, m);
  const long q = m / g;
  return moebius(q) * euler_phi(m) / euler_phi(q);
}

}  // namespace detail

/// Rational irreducibles of the group, ordered by label.
inline std::vector<RationalCharacter> rational_characters(const FiniteAbelianGroup& group,
                                                          const std::vector<int>& conj) {
  std::map<std::vector<int>, RationalCharacter> orbits;
  for (const auto& k : group.elements()) {
    const int m = group.order_of(k);
    std::vector<int> best = k;
    for (int t = 1; t < m; ++t)
      if (std::gcd(t, m) == 1) best = std::min(best, group.scale(t, k));
    if (orbits.count(best)) continue;
    const int v = group.character_value(best, conj);
    orbits[best] = RationalCharacter{best, m, detail::euler_phi(m), v == 0 ? 1 : -1};
  }
  std::vector<RationalCharacter> out;
  for (auto& [label, rc] : orbits) out.push_back(rc);
  return out;
}

/// Multiplicity of each rational irreducible (keyed by orbit label).
struct MultiplicityVector {
  std::map<std::vector<int>, long> multiplicity;
  std::map<std::vector<int>, long> orbit_size;

  long dimension() const {
    long d = 0;
    for (const auto& [label, mult] : multiplicity) d += mult * orbit_size.at(label);
    return d;
  }
  long at(const std::vector<int>& label) const {
    auto it = multiplicity.find(label);
    return it == multiplicity.end() ? 0 : it->second;
  }
  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/// Character lattice of a torus split by an abelian extension: the Galois group
/// acts through one integer matrix per generator; `conj` is complex conjugation.
class GaloisModule {
 public:
  GaloisModule(std::vector<int> orders, std::vector<int> conj, std::vector<IntMatrix> action)
      : group_(std::move(orders)), conj_(std::move(conj)), action_(std::move(action)) {
    if (action_.size() != group_.orders().size())
      throw InvalidInput("need one action matrix per group generator (" + std::to_string(group_.orders().size()) + ")");
    if (conj_.size() != group_.orders().size()) throw InvalidInput("c must have one exponent per generator");
    conj_ = group_.reduce(conj_);
    if (!group_.is_identity(group_.scale(2, conj_))) throw InvalidInput("c must satisfy c^2 = 1");
    if (action_.empty()) throw InvalidInput("Galois group needs at least one generator");
    rank_ = action_.front().rows();
    if (rank_ == 0) throw InvalidInput("Galois module of rank 0");
    const IntMatrix id = IntMatrix::identity(rank_);
    for (std::size_t i = 0; i < action_.size(); ++i) {
      const IntMatrix& a = action_[i];
      if (a.rows() != rank_ || a.cols() != rank_) throw InvalidInput("action matrices must all be square of the same size");
      if (power(a, group_.orders()[i]) != id)
        throw InvalidInput("action matrix " + std::to_string(i + 1) + " does not have order dividing " +
                           std::to_string(group_.orders()[i]));
      for (std::size_t j = 0; j < i; ++j)
        if (a * action_[j] != action_[j] * a) throw InvalidInput("action matrices do not commute");
    }
    if (matrix_for(conj_) * matrix_for(conj_) != id) throw InvalidInput("c does not act as an involution");
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<int>& conj() const { return conj_; }
  const std::vector<IntMatrix>& action() const { return action_; }
  std::size_t rank() const { return rank_; }

  IntMatrix matrix_for(const std::vector<int>& g) const {
    IntMatrix m = IntMatrix::identity(rank_);
    for (std::size_t i = 0; i < g.size(); ++i) m = m * power(action_[i], g[i]);
    return m;
  }
  IntMatrix conj_matrix() const { return matrix_for(conj_); }

  friend bool operator==(const GaloisModule& a, const GaloisModule& b) {
    return a.group_ == b.group_ && a.conj_ == b.conj_ && a.action_ == b.action_;
  }

 private:
  static IntMatrix power(const IntMatrix& a, int e) {
    IntMatrix r = IntMatrix::identity(a.rows());
    for (int k = 0; k < e; ++k) r = r * a;
    return r;
  }

  FiniteAbelianGroup group_;
  std::vector<int> conj_;
  std::vector<IntMatrix> action_;
  std::size_t rank_ = 0;
};

/// Block-diagonal sum of two modules over the same group and conjugation.
inline GaloisModule direct_sum(const GaloisModule& a, const GaloisModule& b) {
  if (!(a.group() == b.group()) || a.conj() != b.conj()) throw InvalidInput("direct sum needs the same group and c");
  std::vector<IntMatrix> action;
  const std::size_t ra = a.rank(), rb = b.rank();
  for (std::size_t i = 0; i < a.action().size(); ++i) {
    IntMatrix m(ra + rb, ra + rb);
    for (std::size_t r = 0; r < ra; ++r)
      for (std::size_t c = 0; c < ra; ++c) m(r, c) = a.action()[i](r, c);
    for (std::size_t r = 0; r < rb; ++r)
      for (std::size_t c = 0; c < rb; ++c) m(ra + r, ra + c) = b.action()[i](r, c);
    action.push_back(std::move(m));
  }
  return GaloisModule(a.group().orders(), a.conj(), std::move(action));
}

namespace detail {

inline MultiplicityVector empty_profile(const FiniteAbelianGroup& group, const std::vector<int>& conj) {
  MultiplicityVector mv;
  for (const auto& rc : rational_characters(group, conj)) {
    mv.multiplicity[rc.label] = 0;
    mv.orbit_size[rc.label] = rc.size;
  }
  return mv;
}

/// {f : G -> Z, f(s) + f(sc) constant}: constants give the trivial constituent,
/// and the w = 0 solutions are the c-odd functions, i.e. each orbit with
/// chi(c) = -1 once. With c = 1 only the constants survive.
inline MultiplicityVector serre_profile(const FiniteAbelianGroup& group, const std::vector<int>& conj) {
  MultiplicityVector mv = empty_profile(group, conj);
  for (const auto& rc : rational_characters(group, conj))
    if (group.is_identity(rc.label) || rc.sign_at_conj == -1) mv.multiplicity[rc.label] = 1;
  return mv;
}

}  // namespace detail

/// Multiplicities of the rational irreducibles in X^*(S_K) tensor Q, where
/// Gal(K/Q) is the given group and c its complex conjugation.
inline MultiplicityVector serre_multiplicities(const std::vector<int>& orders, const std::vector<int>& conj) {
  FiniteAbelianGroup group(orders);
  const std::vector<int> c = group.reduce(conj);
  if (group.is_identity(c)) throw InvalidInput("complex conjugation must be nontrivial");
  if (!group.is_identity(group.scale(2, c))) throw InvalidInput("c must satisfy c^2 = 1");
  return detail::serre_profile(group, c);
}

/// Exact decomposition of m tensor Q: the orbit-summed character psi_O is
/// integer valued (a Ramanujan sum), and
///   mult(O) = sum_g tr(M_g) psi_O(g) / (|G| |O|).
inline MultiplicityVector module_multiplicities(const GaloisModule& m) {
  const FiniteAbelianGroup& group = m.group();
  MultiplicityVector mv = detail::empty_profile(group, m.conj());
  const auto elements = group.elements();
  std::vector<Integer> traces;
  traces.reserve(elements.size());
  for (const auto& g : elements) {
    IntMatrix mg = m.matrix_for(g);
    Integer tr = 0;
    for (std::size_t i = 0; i < mg.rows(); ++i) tr += mg(i, i);
    traces.push_back(tr);
  }
  const int n = group.exponent();
  for (const auto& rc : rational_characters(group, m.conj())) {
    Integer total = 0;
    for (std::size_t e = 0; e < elements.size(); ++e) {
      const long v = group.character_value(rc.label, elements[e]);
      const long a = v / (n / rc.order);
      total += traces[e] * detail::ramanujan_sum(rc.order, a);
    }
    const Integer denom = Integer(group.size()) * rc.size;
    if (total % denom != 0) throw InvalidInput("action is not a representation of the stated group");
    mv.multiplicity[rc.label] = static_cast<long>(total / denom);
  }
  if (mv.dimension() != static_cast<long>(m.rank())) throw InvalidInput("inconsistent Galois action");
  return mv;
}

/// X^*(Z) embeds in X^*(S_K) iff each rational irreducible occurs no more
/// often than in X^*(S_K) (rational embeddings scale to lattice ones).
inline bool is_quotient_of_serre(const GaloisModule& m) {
  const MultiplicityVector have = module_multiplicities(m);
  const MultiplicityVector allowed = detail::serre_profile(m.group(), m.conj());
  for (const auto& [label, mult] : have.multiplicity)
    if (mult > allowed.at(label)) return false;
  return true;
}

/// Z-basis of the sublattice fixed by the whole Galois group.
inline IntMatrix galois_fixed_sublattice(const GaloisModule& m) {
  const std::size_t r = m.rank();
  IntMatrix stacked(r * m.action().size(), r);
  const IntMatrix id = IntMatrix::identity(r);
  for (std::size_t k = 0; k < m.action().size(); ++k) {
    IntMatrix d = m.action()[k] - id;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) stacked(k * r + i, j) = d(i, j);
  }
  return integer_kernel(stacked);
}

inline IntMatrix conj_fixed_sublattice(const GaloisModule& m) {
  return integer_kernel(m.conj_matrix() - IntMatrix::identity(m.rank()));
}

/// The torus (or its quotient by the weight subtorus) is compact over R: no
/// c-fixed character outside the weight sublattice.
inline bool is_R_anisotropic(const GaloisModule& m, const std::optional<IntMatrix>& weight = std::nullopt) {
  const IntMatrix fixed = conj_fixed_sublattice(m);
  if (!weight) return fixed.cols() == 0;
  const IntMatrix& w = *weight;
  if (w.rows() != m.rank()) throw InvalidInput("weight sublattice has the wrong ambient rank");
  const std::size_t wr = matrix_rank(w);
  for (const auto& a : m.action())
    if (matrix_rank(w.hcat(a * w)) != wr) throw InvalidInput("weight sublattice is not stable under the Galois action");
  return fixed.cols() == 0 || matrix_rank(w.hcat(fixed)) == wr;
}

}  // namespace mtg
