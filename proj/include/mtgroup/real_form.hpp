#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "mtgroup/errors.hpp"
#include "mtgroup/root_system.hpp"

namespace mtg {

/// Vogan diagram: a painting of the simple roots plus a diagram involution.
/// Indices are 0-based here; the JSON and CLI layers use 1-based alpha_i.
class VoganDiagram {
 public:
  VoganDiagram(RootSystem rs, std::vector<int> painted, std::vector<int> automorphism)
      : rs_(std::move(rs)), painted_(std::move(painted)), automorphism_(std::move(automorphism)) {
    const int n = rs_.rank();
    if (automorphism_.empty()) {
      automorphism_.resize(n);
      std::iota(automorphism_.begin(), automorphism_.end(), 0);
    }
    if (static_cast<int>(automorphism_.size()) != n)
      throw InvalidInput("automorphism of " + rs_.name() + " must permute " + std::to_string(n) + " simple roots");
    std::vector<int> seen(n, 0);
    for (int s : automorphism_) {
      if (s < 0 || s >= n || seen[s]++) throw InvalidInput("automorphism is not a permutation of the simple roots");
    }
    for (int i = 0; i < n; ++i) {
      if (automorphism_[automorphism_[i]] != i) throw InvalidInput("diagram automorphism must be an involution");
      for (int j = 0; j < n; ++j)
        if (rs_.cartan_matrix()(automorphism_[i], automorphism_[j]) != rs_.cartan_matrix()(i, j))
          throw InvalidInput("automorphism does not preserve the Dynkin diagram of " + rs_.name());
    }
    std::sort(painted_.begin(), painted_.end());
    if (std::adjacent_find(painted_.begin(), painted_.end()) != painted_.end())
      throw InvalidInput("painted simple root listed twice");
    for (int p : painted_) {
      if (p < 0 || p >= n) throw InvalidInput("painted index out of range for " + rs_.name());
      if (!is_painted(automorphism_[p])) throw InvalidInput("painting is not stable under the diagram automorphism");
    }
  }

  static VoganDiagram inner(RootSystem rs, std::vector<int> painted) {
    return VoganDiagram(std::move(rs), std::move(painted), {});
  }

  const RootSystem& root_system() const { return rs_; }
  const std::vector<int>& painted() const { return painted_; }
  const std::vector<int>& automorphism() const { return automorphism_; }

  bool is_painted(int i) const { return std::binary_search(painted_.begin(), painted_.end(), i); }

  bool is_inner() const {
    for (std::size_t i = 0; i < automorphism_.size(); ++i)
      if (automorphism_[i] != static_cast<int>(i)) return false;
    return true;
  }

  friend bool operator==(const VoganDiagram& a, const VoganDiagram& b) {
    return a.rs_ == b.rs_ && a.painted_ == b.painted_ && a.automorphism_ == b.automorphism_;
  }

 private:
  RootSystem rs_;
  std::vector<int> painted_;
  std::vector<int> automorphism_;
};

enum class RootKind { compact, noncompact };

inline bool has_compact_maximal_torus(const VoganDiagram& v) { return v.is_inner(); }

inline void require_inner(const VoganDiagram& v) {
  if (!v.is_inner()) throw NoCompactMaximalTorus(v.root_system().name() + " diagram has a nontrivial automorphism");
}

/// Noncompact iff the painted simple roots occur in gamma with odd total coefficient.
inline RootKind classify_root(const Root& gamma, const VoganDiagram& v) {
  require_inner(v);
  auto idx = v.root_system().index_of(gamma);
  if (!idx) throw InvalidInput("not a root of " + v.root_system().name());
  const auto& c = v.root_system().simple_coefficients(*idx);
  int sum = 0;
  for (int p : v.painted()) sum += c[p];
  return sum % 2 == 0 ? RootKind::compact : RootKind::noncompact;
}

/// Diagram for a named real form. Accepted labels:
///   "compact"                           any family
///   "so(a,b)", a + b = 2n               family D
///   "so*(2n)"                           family D
///   "su(p,q)", p + q = n + 1            family A
///   "sp(2n,R)"                          family C
///   "so(a,b)", a + b = 2n + 1           family B
inline VoganDiagram vogan_diagram_from_label(const RootSystem& rs, std::string_view label) {
  const int n = rs.rank();
  const std::string text(label);
  auto bad = [&](const std::string& why) {
    return InvalidInput("real form '" + text + "' for " + rs.name() + ": " + why);
  };
  if (text == "compact") return VoganDiagram::inner(rs, {});

  std::smatch m;
  static const std::regex so_re(R"(so\((\d+),(\d+)\))");
  static const std::regex so_star_re(R"(so\*\((\d+)\))");
  static const std::regex su_re(R"(su\((\d+),(\d+)\))");
  static const std::regex sp_re(R"(sp\((\d+),R\))");

  if (std::regex_match(text, m, so_re)) {
    int a = std::stoi(m[1]), b = std::stoi(m[2]);
    if (rs.family() == Family::D) {
      if (a + b != 2 * n) throw bad("signature must sum to " + std::to_string(2 * n));
      if (a % 2 == 0) {
        // so(2p, 2q); so(2p, 2q) = so(2q, 2p), paint alpha_min(p,q).
        int p = std::min(a, b) / 2;
        if (p == 0) return VoganDiagram::inner(rs, {});
        return VoganDiagram::inner(rs, {p - 1});
      }
      // so(2p+1, 2q-1): the diagram involution swaps alpha_{n-1} and alpha_n.
      std::vector<int> swap(n);
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[n - 2], swap[n - 1]);
      int p = (std::min(a, b) - 1) / 2;
      if (p == 0) return VoganDiagram(rs, {}, swap);
      return VoganDiagram(rs, {p - 1}, swap);
    }
    if (rs.family() == Family::B) {
      if (a + b != 2 * n + 1) throw bad("signature must sum to " + std::to_string(2 * n + 1));
      int even = a % 2 == 0 ? a : b;
      int p = even / 2;
      // so(2p, 2q+1): alpha_p painted (p = n paints the short root).
      if (p == 0) return VoganDiagram::inner(rs, {});
      return VoganDiagram::inner(rs, {p - 1});
    }
    throw bad("so(a,b) labels apply to families B and D");
  }
  if (std::regex_match(text, m, so_star_re)) {
    if (rs.family() != Family::D || std::stoi(m[1]) != 2 * n) throw bad("expected so*(" + std::to_string(2 * n) + ") on D");
    return VoganDiagram::inner(rs, {n - 1});
  }
  if (std::regex_match(text, m, su_re)) {
    int p = std::stoi(m[1]), q = std::stoi(m[2]);
    if (rs.family() != Family::A || p + q != n + 1) throw bad("expected su(p,q) with p + q = " + std::to_string(n + 1));
    int k = std::min(p, q);
    if (k == 0) return VoganDiagram::inner(rs, {});
    return VoganDiagram::inner(rs, {k - 1});
  }
  if (std::regex_match(text, m, sp_re)) {
    if (rs.family() != Family::C || std::stoi(m[1]) != 2 * n) throw bad("expected sp(" + std::to_string(2 * n) + ",R) on C");
    return VoganDiagram::inner(rs, {n - 1});
  }
  throw bad("unrecognised label");
}

}  // namespace mtg
