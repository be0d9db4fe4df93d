#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace mtg;

TEST(Hodge, KugaSatake) {
  const RootSystem d11 = build_root_system(Family::D, 11);
  const HodgeNumbers hn = adjoint_hodge_numbers(fixture::lambda(11, 0), d11);
  EXPECT_EQ(hn.at(-1), 20);
  EXPECT_EQ(hn.at(0), 191);
  EXPECT_EQ(hn.at(1), 20);
  EXPECT_EQ(hn.total(), 231);
  EXPECT_EQ(hn.h, oracle::adjoint_hodge(fixture::lambda(11, 0), d11));
}

TEST(Hodge, ZeroAndA1) {
  const RootSystem b3 = build_root_system(Family::B, 3);
  const HodgeNumbers zero = adjoint_hodge_numbers(zero_cocharacter(3), b3);
  EXPECT_EQ(zero.h.size(), 1u);
  EXPECT_EQ(zero.at(0), 21);
  const RootSystem a1 = build_root_system(Family::A, 1);
  const HodgeNumbers h = adjoint_hodge_numbers(a1.fundamental_coweights()[0], a1);
  EXPECT_EQ(h.h, (std::map<long, long>{{-1, 1}, {0, 1}, {1, 1}}));
}

TEST(Hodge, SymmetryAndDimension) {
  std::mt19937 rng(4);
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 3; n <= 6; ++n) {
      const RootSystem rs = build_root_system(f, n);
      for (int t = 0; t < 20; ++t) {
        const auto mu = oracle::random_coweight(rng, rs, 3);
        const HodgeNumbers hn = adjoint_hodge_numbers(mu, rs);
        EXPECT_EQ(hn.h, oracle::adjoint_hodge(mu, rs));
        EXPECT_EQ(hn.total(), static_cast<long>(rs.roots().size()) + n);
        long bound = 0;
        for (const auto& gamma : rs.roots()) bound = std::max<long>(bound, abs(static_cast<long>(pairing(mu, gamma))));
        for (const auto& [j, m] : hn.h) {
          EXPECT_EQ(m, hn.at(-j));
          EXPECT_LE(std::abs(j), bound);
        }
      }
    }
}

TEST(Hodge, DimensionMismatch) {
  EXPECT_THROW(adjoint_hodge_numbers(zero_cocharacter(3), build_root_system(Family::D, 4)), InvalidInput);
}

TEST(Hodge, Diamond) {
  const RootSystem d11 = build_root_system(Family::D, 11);
  const std::string text = hodge_diamond(adjoint_hodge_numbers(fixture::lambda(11, 0), d11));
  EXPECT_NE(text.find("h^{1,-1}"), std::string::npos);
  EXPECT_NE(text.find("191"), std::string::npos);
}

TEST(CartanInvolution, Examples) {
  const RootSystem d11 = build_root_system(Family::D, 11);
  const auto v = vogan_diagram_from_label(d11, "so(2,20)");
  EXPECT_TRUE(cartan_involution_check(fixture::lambda(11, 0), v));
  // omega_2 = (1,1,0,...): <omega_2, alpha_1> = 0 is even but alpha_1 is noncompact.
  Cocharacter l2 = zero_cocharacter(11);
  l2.coords[0] = 1;
  l2.coords[1] = 1;
  EXPECT_FALSE(cartan_involution_check(l2, v));
  EXPECT_TRUE(cartan_involution_check(zero_cocharacter(11), vogan_diagram_from_label(d11, "compact")));
  EXPECT_THROW(cartan_involution_check(zero_cocharacter(11), vogan_diagram_from_label(d11, "so(1,21)")),
               NoCompactMaximalTorus);
}

TEST(CartanInvolution, EquivalentToPolarizable) {
  std::mt19937 rng(12);
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 3; n <= 5; ++n) {
      const RootSystem rs = build_root_system(f, n);
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> painted;
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1) painted.push_back(i);
        const auto v = VoganDiagram::inner(rs, painted);
        const auto rep = polarizable_classes_mod2(v)[0].representative;
        EXPECT_TRUE(cartan_involution_check(rep, v));
        for (int t = 0; t < 5; ++t) {
          const auto mu = oracle::random_coweight(rng, rs, 2);
          EXPECT_EQ(cartan_involution_check(mu, v), is_polarizable(mu, v));
        }
      }
    }
}

TEST(CartanDimensions, SumToDimension) {
  const RootSystem d5 = build_root_system(Family::D, 5);
  const auto d = cartan_dimensions(vogan_diagram_from_label(d5, "so(2,8)"));
  EXPECT_EQ(d.compact, 1 + 28);
  EXPECT_EQ(d.noncompact, 16);
}
