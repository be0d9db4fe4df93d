#pragma once

// Slow, independent reference implementations used only by the tests. None of
// these go through Smith normal form or the library's coweight bookkeeping.

#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "mtgroup/mtgroup.hpp"

namespace oracle {

using mtg::Integer;
using mtg::Rational;

/// Row-reduces a copy over Q and returns the rank.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Solves sum_i x_i alpha_i = gamma over Q by elimination on the augmented
/// system (consistent and overdetermined).
inline std::vector<Rational> simple_root_coefficients(const mtg::RootSystem& rs, const mtg::Root& gamma) {
  const std::size_t n = rs.rank(), dim = rs.ambient_dim();
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < dim; ++k) m[k][i] = rs.simple_roots()[i][k];
  for (std::size_t k = 0; k < dim; ++k) m[k][n] = gamma[k];
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = row;
    while (p < dim && m[p][c] == 0) ++p;
    if (p == dim) continue;
    std::swap(m[p], m[row]);
    const Rational lead = m[row][c];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k <= n; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][n];
  return x;
}

inline Rational dot(const mtg::Cocharacter& mu, const mtg::Root& gamma) {
  Rational s = 0;
  for (std::size_t k = 0; k < gamma.size(); ++k) s += mu.coords[k] * gamma[k];
  return s;
}

/// Compactness from scratch: parity of the painted coefficients.
inline bool is_compact(const mtg::VoganDiagram& v, const mtg::Root& gamma) {
  const auto x = simple_root_coefficients(v.root_system(), gamma);
  Integer s = 0;
  for (int p : v.painted()) s += mtg::numerator_of(x[p]);
  return s % 2 == 0;
}

/// The defining congruences checked on every root.
inline bool all_roots_polarizable(const mtg::Cocharacter& mu, const mtg::VoganDiagram& v) {
  for (const auto& gamma : v.root_system().roots()) {
    const Rational p = dot(mu, gamma);
    if (mtg::denominator_of(p) != 1) return false;
    const bool even = mtg::numerator_of(p) % 2 == 0;
    if (even != is_compact(v, gamma)) return false;
  }
  return true;
}

/// h^{-j,j} by direct enumeration.
inline std::map<long, long> adjoint_hodge(const mtg::Cocharacter& mu, const mtg::RootSystem& rs) {
  std::map<long, long> h;
  for (const auto& gamma : rs.roots()) ++h[static_cast<long>(mtg::numerator_of(dot(mu, gamma)))];
  h[0] += rs.rank();
  return h;
}

/// Lift search: mu is matched against sum_j c_j g_j with c_j in [lo_j, hi_j],
/// comparing pairings with every simple root. Pairings are exact after scaling
/// by `scale` (a common denominator of all coordinates).
struct BoxProblem {
  std::vector<std::vector<std::int64_t>> generator_pairings;  // per generator, per simple root
  std::vector<std::pair<int, int>> bounds;
};

inline bool box_lifts(const BoxProblem& problem, const std::vector<std::int64_t>& target) {
  const std::size_t g = problem.generator_pairings.size(), r = target.size();
  std::vector<int> c(g);
  for (std::size_t j = 0; j < g; ++j) c[j] = problem.bounds[j].first;
  while (true) {
    bool match = true;
    for (std::size_t i = 0; i < r && match; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < g; ++j) s += c[j] * problem.generator_pairings[j][i];
      match = s == target[i];
    }
    if (match) return true;
    std::size_t j = 0;
    while (j < g && ++c[j] > problem.bounds[j].second) {
      c[j] = problem.bounds[j].first;
      ++j;
    }
    if (j == g) return false;
  }
}

/// Dimension of {(f, w) : f(s) + f(sc) = w for all s} over Q, with f : G -> Q.
inline std::size_t serre_solution_rank(const std::vector<int>& orders, const std::vector<int>& conj) {
  mtg::FiniteAbelianGroup group(orders);
  const auto elements = group.elements();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
  const std::size_t n = elements.size();
  std::vector<std::vector<Rational>> eqs;
  for (const auto& s : elements) {
    std::vector<int> sc(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) sc[k] = (s[k] + conj[k]) % orders[k];
    std::vector<Rational> row(n + 1);
    row[index[s]] += 1;
    row[index[sc]] += 1;
    row[n] = -1;
    eqs.push_back(row);
  }
  return n + 1 - rational_rank(eqs);
}

/// Ramanujan sum as a literal sum of roots of unity.
inline double ramanujan_numeric(long m, long a) {
  std::complex<double> s = 0;
  for (long t = 1; t <= m; ++t)
    if (std::gcd(t, m) == 1) s += std::polar(1.0, 2.0 * M_PI * static_cast<double>(t * a) / static_cast<double>(m));
  return s.real();
}

/// Invariant-factor lists n_1 | n_2 | ... with product <= max_order, each n_i >= 2
/// (the trivial group is {1}).
inline std::vector<std::vector<int>> abelian_groups(int max_order) {
  std::vector<std::vector<int>> out{{1}};
  std::vector<int> current;
  auto rec = [&](auto&& self, int product) -> void {
    const int last = current.empty() ? 1 : current.back();
    for (int n = current.empty() ? 2 : last; product * n <= max_order; n += (current.empty() ? 1 : last)) {
      if (!current.empty() && n % last != 0) continue;
      current.push_back(n);
      out.push_back(current);
      self(self, product * n);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Elements c with c^2 = 1, c != 1.
inline std::vector<std::vector<int>> involutions(const std::vector<int>& orders) {
  mtg::FiniteAbelianGroup group(orders);
  std::vector<std::vector<int>> out;
  for (const auto& g : group.elements())
    if (!group.is_identity(g) && group.is_identity(group.scale(2, g))) out.push_back(g);
  return out;
}

/// Uniform random integer matrix with entries in [lo, hi].
inline mtg::IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  mtg::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

/// Random element of X_*(T^ad) with simple pairings in [-bound, bound].
inline mtg::Cocharacter random_coweight(std::mt19937& rng, const mtg::RootSystem& rs, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Integer> x(rs.rank());
  for (auto& v : x) v = d(rng);
  return mtg::from_simple_pairings(rs, x);
}

}  // namespace oracle
