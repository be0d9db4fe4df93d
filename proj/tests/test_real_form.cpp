#include <gtest/gtest.h>

#include "mtgroup/real_form.hpp"
#include "oracles.hpp"

using namespace mtg;

namespace {

Root chi_sum(int n, int i, int j, int si, int sj) {
  Root r(n, 0);
  r[i] += si;
  r[j] += sj;
  return r;
}

std::vector<VoganDiagram> all_inner_diagrams(const RootSystem& rs) {
  std::vector<VoganDiagram> out;
  for (int mask = 0; mask < (1 << rs.rank()); ++mask) {
    std::vector<int> painted;
    for (int i = 0; i < rs.rank(); ++i)
      if ((mask >> i) & 1) painted.push_back(i);
    out.push_back(VoganDiagram::inner(rs, painted));
  }
  return out;
}

}  // namespace

TEST(VoganDiagram, Validation) {
  const RootSystem d4 = build_root_system(Family::D, 4);
  EXPECT_THROW(VoganDiagram(d4, {}, {1, 0, 2, 3}), InvalidInput);  // breaks adjacency
  EXPECT_THROW(VoganDiagram(d4, {}, {0, 1, 2}), InvalidInput);
  EXPECT_THROW(VoganDiagram(d4, {}, {0, 0, 2, 3}), InvalidInput);
  EXPECT_THROW(VoganDiagram(d4, {2}, {0, 1, 3, 2}), InvalidInput);  // painting not stable
  EXPECT_THROW(VoganDiagram(d4, {4}, {}), InvalidInput);
  EXPECT_THROW(VoganDiagram(d4, {1, 1}, {}), InvalidInput);
  EXPECT_NO_THROW(VoganDiagram(d4, {2, 3}, {0, 1, 3, 2}));
  // Triality is order 3, not an involution.
  EXPECT_THROW(VoganDiagram(d4, {}, {2, 1, 3, 0}), InvalidInput);
}

TEST(ClassifyRoot, Examples) {
  const RootSystem d4 = build_root_system(Family::D, 4);
  const VoganDiagram so44 = VoganDiagram::inner(d4, {1});
  EXPECT_EQ(classify_root(chi_sum(4, 0, 1, 1, -1), so44), RootKind::compact);
  for (int i = 0; i < 4; ++i) {
    const VoganDiagram v = VoganDiagram::inner(d4, {i});
    EXPECT_EQ(classify_root(d4.simple_roots()[i], v), RootKind::noncompact);
  }
  const RootSystem d11 = build_root_system(Family::D, 11);
  const VoganDiagram so2_20 = vogan_diagram_from_label(d11, "so(2,20)");
  EXPECT_EQ(classify_root(chi_sum(11, 0, 1, 1, 1), so2_20), RootKind::noncompact);
  EXPECT_EQ(classify_root(chi_sum(11, 3, 7, 1, 1), so2_20), RootKind::compact);
}

TEST(ClassifyRoot, OuterFormsHaveNoCompactTorus) {
  const RootSystem d4 = build_root_system(Family::D, 4);
  const VoganDiagram outer = vogan_diagram_from_label(d4, "so(3,5)");
  EXPECT_FALSE(has_compact_maximal_torus(outer));
  EXPECT_THROW(classify_root(d4.simple_roots()[0], outer), NoCompactMaximalTorus);
  try {
    classify_root(d4.simple_roots()[0], outer);
  } catch (const NoCompactMaximalTorus& e) {
    EXPECT_NE(std::string(e.what()).find("no compact maximal torus"), std::string::npos);
  }
}

TEST(CompactTorus, Examples) {
  for (int n = 3; n <= 7; ++n) {
    const RootSystem dn = build_root_system(Family::D, n);
    for (int p = 0; 2 * p + 1 <= n; ++p) {
      const int q = n - p;
      const auto label = "so(" + std::to_string(2 * p + 1) + "," + std::to_string(2 * q - 1) + ")";
      EXPECT_FALSE(has_compact_maximal_torus(vogan_diagram_from_label(dn, label))) << label;
    }
    for (int p = 1; p < n; ++p) {
      const auto label = "so(" + std::to_string(2 * p) + "," + std::to_string(2 * (n - p)) + ")";
      EXPECT_TRUE(has_compact_maximal_torus(vogan_diagram_from_label(dn, label))) << label;
    }
    EXPECT_TRUE(has_compact_maximal_torus(vogan_diagram_from_label(dn, "compact")));
  }
}

TEST(Labels, Paintings) {
  const RootSystem d5 = build_root_system(Family::D, 5);
  EXPECT_EQ(vogan_diagram_from_label(d5, "so(4,6)").painted(), std::vector<int>{1});
  EXPECT_EQ(vogan_diagram_from_label(d5, "so(6,4)").painted(), std::vector<int>{1});
  EXPECT_EQ(vogan_diagram_from_label(d5, "so*(10)").painted(), std::vector<int>{4});
  EXPECT_TRUE(vogan_diagram_from_label(d5, "so(0,10)").painted().empty());
  EXPECT_THROW(vogan_diagram_from_label(d5, "so(2,6)"), InvalidInput);
  EXPECT_THROW(vogan_diagram_from_label(d5, "sp(10,R)"), InvalidInput);
  EXPECT_THROW(vogan_diagram_from_label(d5, "e8"), InvalidInput);
  const RootSystem b3 = build_root_system(Family::B, 3);
  EXPECT_EQ(vogan_diagram_from_label(b3, "so(2,5)").painted(), std::vector<int>{0});
  EXPECT_EQ(vogan_diagram_from_label(b3, "so(6,1)").painted(), std::vector<int>{2});
  const RootSystem a3 = build_root_system(Family::A, 3);
  EXPECT_EQ(vogan_diagram_from_label(a3, "su(2,2)").painted(), std::vector<int>{1});
  const RootSystem c3 = build_root_system(Family::C, 3);
  EXPECT_EQ(vogan_diagram_from_label(c3, "sp(6,R)").painted(), std::vector<int>{2});
}

TEST(Labels, KnownCartanDimensions) {
  // dim k for so(2p,2q) is dim so(2p) + dim so(2q).
  const RootSystem d5 = build_root_system(Family::D, 5);
  for (int p = 1; p < 5; ++p) {
    const auto v = vogan_diagram_from_label(d5, "so(" + std::to_string(2 * p) + "," + std::to_string(10 - 2 * p) + ")");
    const int a = 2 * p, b = 10 - 2 * p;
    long compact = 0;
    for (const auto& gamma : d5.roots()) compact += oracle::is_compact(v, gamma);
    EXPECT_EQ(compact + 5, a * (a - 1) / 2 + b * (b - 1) / 2);
  }
  // so*(10): k = u(5), dimension 25.
  const auto star = vogan_diagram_from_label(d5, "so*(10)");
  long compact = 0;
  for (const auto& gamma : d5.roots()) compact += oracle::is_compact(star, gamma);
  EXPECT_EQ(compact + 5, 25);
  // sp(6,R): k = u(3).
  const RootSystem c3 = build_root_system(Family::C, 3);
  const auto sp = vogan_diagram_from_label(c3, "sp(6,R)");
  compact = 0;
  for (const auto& gamma : c3.roots()) compact += oracle::is_compact(sp, gamma);
  EXPECT_EQ(compact + 3, 9);
}

TEST(ClassifyRoot, AgreesWithOracleAndNegation) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 3; n <= 5; ++n) {
      const RootSystem rs = build_root_system(f, n);
      for (const auto& v : all_inner_diagrams(rs))
        for (const auto& gamma : rs.roots()) {
          Root neg = gamma;
          for (int& x : neg) x = -x;
          const RootKind k = classify_root(gamma, v);
          EXPECT_EQ(k == RootKind::compact, oracle::is_compact(v, gamma));
          EXPECT_EQ(classify_root(neg, v), k);
        }
    }
}

TEST(ClassifyRoot, EmptyPaintingIsCompact) {
  const RootSystem c4 = build_root_system(Family::C, 4);
  const auto v = VoganDiagram::inner(c4, {});
  for (const auto& gamma : c4.roots()) EXPECT_EQ(classify_root(gamma, v), RootKind::compact);
}
