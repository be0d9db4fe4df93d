#include <gtest/gtest.h>

#include <cmath>

#include "mtgroup/serre_center.hpp"
#include "oracles.hpp"

using namespace mtg;

namespace {

GaloisModule uf() { return GaloisModule({2}, {1}, {IntMatrix{{-1}}}); }
GaloisModule gm() { return GaloisModule({1}, {0}, {IntMatrix{{1}}}); }

/// X^*(S_K) = {f : G -> Z, f(s) + f(sc) constant} with G acting by (t f)(s) = f(st).
/// Basis: the constant function, and f_s - f_{sc} for s in a set of c-coset representatives.
GaloisModule serre_lattice(const std::vector<int>& orders, const std::vector<int>& conj) {
  FiniteAbelianGroup group(orders);
  const auto elements = group.elements();
  auto add = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) s[k] = (a[k] + b[k]) % orders[k];
    return s;
  };
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
  // Functions as vectors in Z^G.
  std::vector<std::vector<Integer>> basis{std::vector<Integer>(elements.size(), 1)};
  std::set<std::vector<int>> used;
  for (const auto& s : elements) {
    if (used.count(s)) continue;
    const auto sc = add(s, conj);
    used.insert(s);
    used.insert(sc);
    std::vector<Integer> f(elements.size());
    f[index[s]] += 1;
    f[index[sc]] -= 1;
    basis.push_back(f);
  }
  const IntMatrix b = IntMatrix::from_columns(elements.size(), basis);
  std::vector<IntMatrix> action;
  for (std::size_t gen = 0; gen < orders.size(); ++gen) {
    std::vector<int> t(orders.size());
    t[gen] = 1;
    std::vector<std::vector<Integer>> images;
    for (const auto& f : basis) {
      std::vector<Integer> tf(elements.size());
      for (const auto& s : elements) tf[index[s]] = f[index[add(s, t)]];
      auto coords = solve_integer(b, tf);
      EXPECT_TRUE(coords.has_value());
      images.push_back(*coords);
    }
    action.push_back(IntMatrix::from_columns(basis.size(), images));
  }
  return GaloisModule(orders, conj, action);
}

}  // namespace

TEST(GaloisModule, Validation) {
  EXPECT_THROW(GaloisModule({2}, {1}, {IntMatrix{{0, 1}, {1, 1}}}), InvalidInput);
  EXPECT_THROW(GaloisModule({2}, {1}, {}), InvalidInput);
  EXPECT_THROW(GaloisModule({4}, {1}, {IntMatrix{{0, -1}, {1, 0}}}), InvalidInput);  // c of order 4
  EXPECT_THROW(GaloisModule({2, 2}, {1, 0}, {IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{-1, 0}, {0, 1}}}), InvalidInput);
  EXPECT_NO_THROW(GaloisModule({4}, {2}, {IntMatrix{{0, -1}, {1, 0}}}));
}

TEST(Serre, QuadraticGroup) {
  const auto mv = serre_multiplicities({2}, {1});
  EXPECT_EQ(mv.at({0}), 1);
  EXPECT_EQ(mv.at({1}), 1);
  EXPECT_EQ(mv.dimension(), 2);
}

TEST(Serre, CyclicFour) {
  const auto mv = serre_multiplicities({4}, {2});
  EXPECT_EQ(mv.at({0}), 1);
  EXPECT_EQ(mv.at({1}), 1);  // faithful characters, chi(c) = -1
  EXPECT_EQ(mv.at({2}), 0);  // order-2 character is trivial on c
  EXPECT_EQ(mv.orbit_size.at({1}), 2);
  EXPECT_EQ(mv.dimension(), 3);
}

TEST(Serre, RejectsBadConjugation) {
  EXPECT_THROW(serre_multiplicities({2}, {0}), InvalidInput);
  EXPECT_THROW(serre_multiplicities({4}, {1}), InvalidInput);
}

TEST(Serre, DimensionMatchesSolutionSpace) {
  for (const auto& orders : oracle::abelian_groups(16))
    for (const auto& c : oracle::involutions(orders)) {
      const auto mv = serre_multiplicities(orders, c);
      EXPECT_EQ(static_cast<std::size_t>(mv.dimension()), oracle::serre_solution_rank(orders, c));
      FiniteAbelianGroup group(orders);
      long odd = 0;
      for (const auto& k : group.elements()) odd += group.character_value(k, c) != 0;
      EXPECT_EQ(mv.dimension(), 1 + odd);
    }
}

TEST(Serre, ModuleOfSerreLatticeHasSerreMultiplicities) {
  for (const auto& orders : oracle::abelian_groups(12))
    for (const auto& c : oracle::involutions(orders)) {
      const GaloisModule s = serre_lattice(orders, c);
      EXPECT_EQ(module_multiplicities(s), serre_multiplicities(orders, c));
      EXPECT_TRUE(is_quotient_of_serre(s));
      EXPECT_FALSE(is_quotient_of_serre(direct_sum(s, s)));
    }
}

TEST(Ramanujan, MatchesRootsOfUnity) {
  for (long m = 1; m <= 30; ++m)
    for (long a = -5; a <= 40; ++a)
      EXPECT_NEAR(static_cast<double>(detail::ramanujan_sum(m, a)), oracle::ramanujan_numeric(m, a), 1e-9) << m << " " << a;
}

TEST(ModuleMultiplicities, Examples) {
  EXPECT_EQ(module_multiplicities(uf()).at({1}), 1);
  EXPECT_EQ(module_multiplicities(uf()).at({0}), 0);
  EXPECT_EQ(module_multiplicities(direct_sum(uf(), uf())).at({1}), 2);
  EXPECT_EQ(module_multiplicities(gm()).at({0}), 1);
}

TEST(ModuleMultiplicities, AdditiveAndDimension) {
  std::mt19937 rng(8);
  // Z/4 acting by rotation on Z^2 plus a sign summand.
  const GaloisModule rot({4}, {2}, {IntMatrix{{0, -1}, {1, 0}}});
  const GaloisModule sign({4}, {2}, {IntMatrix{{-1}}});
  const GaloisModule triv({4}, {2}, {IntMatrix{{1}}});
  for (const auto& [a, b] : std::vector<std::pair<GaloisModule, GaloisModule>>{{rot, sign}, {sign, triv}, {rot, rot}}) {
    const auto sum = module_multiplicities(direct_sum(a, b));
    const auto ma = module_multiplicities(a), mb = module_multiplicities(b);
    for (const auto& [label, m] : sum.multiplicity) EXPECT_EQ(m, ma.at(label) + mb.at(label));
    EXPECT_EQ(sum.dimension(), static_cast<long>(a.rank() + b.rank()));
  }
  EXPECT_EQ(module_multiplicities(rot).at({1}), 1);
}

TEST(Quotient, Examples) {
  EXPECT_TRUE(is_quotient_of_serre(uf()));
  EXPECT_FALSE(is_quotient_of_serre(direct_sum(uf(), uf())));
  EXPECT_TRUE(is_quotient_of_serre(gm()));
  // Z/4 with c = 2: the sign character of order 2 has chi(c) = +1, not allowed.
  EXPECT_FALSE(is_quotient_of_serre(GaloisModule({4}, {2}, {IntMatrix{{-1}}})));
  EXPECT_TRUE(is_quotient_of_serre(GaloisModule({4}, {2}, {IntMatrix{{0, -1}, {1, 0}}})));
}

TEST(Quotient, MonotoneOnSummands) {
  const GaloisModule rot({4}, {2}, {IntMatrix{{0, -1}, {1, 0}}});
  const GaloisModule triv({4}, {2}, {IntMatrix{{1}}});
  const GaloisModule big = direct_sum(rot, triv);
  ASSERT_TRUE(is_quotient_of_serre(big));
  EXPECT_TRUE(is_quotient_of_serre(rot));
  EXPECT_TRUE(is_quotient_of_serre(triv));
}

TEST(Anisotropy, Examples) {
  EXPECT_TRUE(is_R_anisotropic(uf()));
  EXPECT_FALSE(is_R_anisotropic(gm()));
  EXPECT_TRUE(is_R_anisotropic(gm(), IntMatrix{{1}}));
  // Norm-one torus of a cyclic totally real cubic field: c = 1 acts trivially.
  const GaloisModule cubic({3}, {0}, {IntMatrix{{0, -1}, {1, -1}}});
  EXPECT_FALSE(is_R_anisotropic(cubic));
  EXPECT_TRUE(galois_fixed_sublattice(cubic).cols() == 0);
  // U_F plus G_m with G_m as weight line.
  const GaloisModule mixed({2}, {1}, {IntMatrix{{-1, 0}, {0, 1}}});
  EXPECT_TRUE(is_R_anisotropic(mixed, IntMatrix{{0}, {1}}));
  EXPECT_FALSE(is_R_anisotropic(mixed, IntMatrix{{1}, {0}}));
}

TEST(Anisotropy, UnstableWeightRejected) {
  const GaloisModule swap({2}, {0}, {IntMatrix{{0, 1}, {1, 0}}});
  EXPECT_THROW(is_R_anisotropic(swap, IntMatrix{{1}, {0}}), InvalidInput);
}
