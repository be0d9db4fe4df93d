#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtgroup/errors.hpp"
#include "mtgroup/lifting.hpp"
#include "mtgroup/real_form.hpp"
#include "mtgroup/serre_center.hpp"

namespace mtg {

/// A connected reductive group: simple factors of the adjoint group with their
/// real forms, the cocharacter lattice of the group, and the Galois module
/// X^*(Z^0) of its connected center.
struct GroupSpec {
  std::vector<VoganDiagram> factors;
  RootDatum lattice;
  std::optional<GaloisModule> center;
  bool weight_gm = false;

  std::vector<RootSystem> root_systems() const {
    std::vector<RootSystem> out;
    for (const auto& v : factors) out.push_back(v.root_system());
    return out;
  }

  void validate() const {
    if (factors.empty()) throw InvalidInput("factors: at least one simple factor is required");
    if (lattice.factors().size() != factors.size())
      throw InvalidInput("lattice: built for " + std::to_string(lattice.factors().size()) + " factors, spec has " +
                         std::to_string(factors.size()));
    for (std::size_t f = 0; f < factors.size(); ++f)
      if (!(lattice.factors()[f] == factors[f].root_system()))
        throw InvalidInput("lattice: factor " + std::to_string(f + 1) + " is " + lattice.factors()[f].name() +
                           " but the diagram is for " + factors[f].root_system().name());
    const int center_rank = center ? static_cast<int>(center->rank()) : 0;
    if (center_rank != lattice.central_rank())
      throw InvalidInput("center: module rank " + std::to_string(center_rank) +
                         " does not match the central rank " + std::to_string(lattice.central_rank()) +
                         " of the lattice");
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  std::string condition;
};

struct Verdict {
  bool is_mt = false;
  std::vector<Check> checks;
  std::optional<Cocharacter> witness;
  std::vector<std::string> notes;

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace check_names {
inline constexpr const char* compact_torus = "compact-maximal-torus";
inline constexpr const char* center_compact = "center-compact-mod-weight";
inline constexpr const char* polarizable_lift = "polarizable-lift";
inline constexpr const char* serre_center = "serre-center";
}  // namespace check_names

inline Verdict mt_verdict(const GroupSpec& spec) {
  spec.validate();
  Verdict v;

  // 1. Every simple factor is an inner form.
  Check torus{check_names::compact_torus, true, "", "the adjoint group has a compact maximal torus over R"};
  for (std::size_t f = 0; f < spec.factors.size(); ++f)
    if (!has_compact_maximal_torus(spec.factors[f])) {
      torus.passed = false;
      torus.detail += (torus.detail.empty() ? "" : "; ") + std::string("factor ") + std::to_string(f + 1) + " (" +
                      spec.factors[f].root_system().name() + ") has a nontrivial diagram automorphism";
    }
  if (torus.passed) torus.detail = "every Vogan diagram has trivial automorphism";
  v.checks.push_back(torus);

  // 2. Z / w(G_m) is compact over R.
  Check compact{check_names::center_compact, true, "", "the center modulo the weight torus is compact over R"};
  if (!spec.center) {
    compact.detail = "semisimple: no central torus";
  } else if (spec.weight_gm) {
    const IntMatrix split = galois_fixed_sublattice(*spec.center);
    if (split.cols() > 1) {
      compact.passed = false;
      compact.detail = "the center contains a split torus of rank " + std::to_string(split.cols()) +
                       "; only one G_m can serve as weight";
    } else {
      compact.passed = is_R_anisotropic(*spec.center, split);
      compact.detail = compact.passed ? "every c-fixed character lies on the weight line"
                                      : "a c-fixed character lies off the weight line";
    }
  } else {
    compact.passed = is_R_anisotropic(*spec.center);
    compact.detail = compact.passed ? "c has no fixed characters" : "c fixes a nonzero character of the center";
    v.notes.push_back("warning: nontrivial center without a weight G_m; the whole center must be compact");
  }
  v.checks.push_back(compact);

  // 3. Some polarizable cocharacter lifts to the group.
  Check lift_check{check_names::polarizable_lift, false, "", "some member of the polarizable congruence class lifts to the group"};
  if (!torus.passed) {
    lift_check.detail = "not evaluated: polarizable classes need a compact maximal torus";
  } else {
    LiftResult r = exists_polarizable_lift(spec.lattice, spec.factors);
    lift_check.passed = r.exists;
    if (r.exists) {
      v.witness = r.witness;
      lift_check.detail = "witness (" + join(r.witness->coords) + ")";
    } else {
      lift_check.detail = "the class meets no element of the image of X_*(T~)";
    }
  }
  v.checks.push_back(lift_check);

  // 4. Z^0 is a quotient of the Serre group.
  Check serre{check_names::serre_center, true, "", "the connected center is a quotient of the Serre group"};
  if (!spec.center) {
    serre.detail = "semisimple: trivial connected center";
  } else {
    serre.passed = is_quotient_of_serre(*spec.center);
    serre.detail = serre.passed ? "multiplicities are dominated by those of X^*(S_K)"
                                : "some rational constituent occurs more often than in X^*(S_K)";
    v.notes.push_back("the center and the derived group are checked independently; their gluing is not examined");
  }
  v.checks.push_back(serre);

  v.is_mt = true;
  for (const auto& c : v.checks) v.is_mt = v.is_mt && c.passed;
  return v;
}

/// A simple adjoint group is a Mumford-Tate group iff its real form has a
/// compact maximal torus.
inline bool simple_adjoint_verdict(Family family, int rank, const VoganDiagram& v) {
  if (v.root_system().family() != family || v.root_system().rank() != rank)
    throw InvalidInput("diagram does not belong to the stated root system");
  return has_compact_maximal_torus(v);
}

}  // namespace mtg
