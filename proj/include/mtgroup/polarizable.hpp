#pragma once

#include <cstddef>
#include <vector>

#include "mtgroup/real_form.hpp"
#include "mtgroup/root_system.hpp"

namespace mtg {

/// Required parity of <mu, alpha_i> on each simple root: 1 on painted
/// (noncompact) roots, 0 on the rest.
struct ParityPattern {
  std::vector<int> bits;
  friend bool operator==(const ParityPattern&, const ParityPattern&) = default;
};

inline ParityPattern parity_pattern(const VoganDiagram& v) {
  require_inner(v);
  ParityPattern p{std::vector<int>(v.root_system().rank(), 0)};
  for (int i : v.painted()) p.bits[i] = 1;
  return p;
}

/// <mu, alpha> even on compact roots and odd on noncompact ones. The grading
/// by painted coefficient is additive, so the simple roots decide it.
inline bool is_polarizable(const Cocharacter& mu, const VoganDiagram& v) {
  const ParityPattern pattern = parity_pattern(v);
  const auto x = simple_pairings(mu, v.root_system());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (floor_mod(x[i], 2) != pattern.bits[i]) return false;
  return true;
}

/// A coset of 2 X_*(T^ad), identified by (<mu, alpha_i> mod 2)_i.
struct PolarizableClass {
  std::vector<int> residue;
  /// sum residue_i omega_i.
  Cocharacter representative;
};

/// All residues in X_*(T^ad) / 2 X_*(T^ad) whose lifts are polarizable. For the
/// adjoint lattice the fundamental coweights are dual to the simple roots, so
/// there is exactly one.
inline std::vector<PolarizableClass> polarizable_classes_mod2(const VoganDiagram& v) {
  const ParityPattern pattern = parity_pattern(v);
  std::vector<Integer> x(pattern.bits.begin(), pattern.bits.end());
  return {PolarizableClass{pattern.bits, from_simple_pairings(v.root_system(), x)}};
}

/// The mod 4 convention for l = 2 mu: <l, alpha> = 0 (mod 4) on compact roots
/// and 2 (mod 4) on noncompact roots.
inline bool is_ggk_polarizable(const Cocharacter& l, const VoganDiagram& v) {
  const ParityPattern pattern = parity_pattern(v);
  const auto x = simple_pairings(l, v.root_system());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (floor_mod(x[i], 4) != 2 * pattern.bits[i]) return false;
  return true;
}

}  // namespace mtg
