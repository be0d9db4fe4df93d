#pragma once

#include <string>

#include "mtgroup/mtgroup.hpp"
#include "mtgroup/spec_io.hpp"

namespace fixture {

inline mtg::RootDatum preset(mtg::Family f, int n, const std::string& name) {
  return mtg::preset_datum(mtg::build_root_system(f, n), name);
}

/// so(2p, 2q) on D_{p+q}; p = 0 is the compact form.
inline mtg::VoganDiagram so_even(int p, int q) {
  const auto rs = mtg::build_root_system(mtg::Family::D, p + q);
  return mtg::vogan_diagram_from_label(rs, "so(" + std::to_string(2 * p) + "," + std::to_string(2 * q) + ")");
}

inline mtg::Cocharacter lambda(int n, int i) {
  mtg::Cocharacter mu = mtg::zero_cocharacter(n);
  mu.coords[i] = 1;
  return mu;
}

}  // namespace fixture
