#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mtgroup/real_form.hpp"
#include "mtgroup/root_system.hpp"

namespace mtg {

/// Weight-zero Hodge numbers of the adjoint representation: h[j] = h^{-j,j}.
struct HodgeNumbers {
  std::map<long, long> h;

  long total() const {
    long s = 0;
    for (const auto& [j, n] : h) s += n;
    return s;
  }
  long at(long j) const {
    auto it = h.find(j);
    return it == h.end() ? 0 : it->second;
  }
  friend bool operator==(const HodgeNumbers&, const HodgeNumbers&) = default;
};

/// Ad mu(z) acts on the gamma root space by z^{<mu, gamma>}; the Cartan
/// subalgebra sits in degree 0.
inline HodgeNumbers adjoint_hodge_numbers(const Cocharacter& mu, const RootSystem& rs) {
  if (mu.size() != static_cast<std::size_t>(rs.ambient_dim()))
    throw InvalidInput("cocharacter has " + std::to_string(mu.size()) + " coordinates, " + rs.name() + " expects " +
                       std::to_string(rs.ambient_dim()));
  HodgeNumbers out;
  out.h[0] = rs.rank();
  for (const Root& gamma : rs.roots()) out.h[static_cast<long>(pairing(mu, gamma))] += 1;
  return out;
}

/// Sum over the simple factors of a product; mu is the concatenation.
inline HodgeNumbers adjoint_hodge_numbers(const Cocharacter& mu, std::span<const RootSystem> factors) {
  HodgeNumbers out;
  std::size_t offset = 0, total = 0;
  for (const auto& f : factors) total += f.ambient_dim();
  if (mu.size() != total) throw InvalidInput("cocharacter dimension does not match the product of factors");
  for (const auto& f : factors) {
    Cocharacter part{{mu.coords.begin() + offset, mu.coords.begin() + offset + f.ambient_dim()}};
    for (const auto& [j, n] : adjoint_hodge_numbers(part, f).h) out.h[j] += n;
    offset += f.ambient_dim();
  }
  return out;
}

/// Ad h(i) with l = 2 mu acts on the gamma root space by (-1)^{<mu, gamma>}.
/// It is the Cartan involution of the given real form exactly when that sign
/// is +1 on compact roots and -1 on noncompact roots.
inline bool cartan_involution_check(const Cocharacter& mu, const VoganDiagram& v) {
  require_inner(v);
  for (const Root& gamma : v.root_system().roots()) {
    const bool even = pairing(mu, gamma) % 2 == 0;
    if (even != (classify_root(gamma, v) == RootKind::compact)) return false;
  }
  return true;
}

/// dim k = #compact roots + rank, dim p = #noncompact roots.
struct CartanDimensions {
  long compact = 0;
  long noncompact = 0;
};

inline CartanDimensions cartan_dimensions(const VoganDiagram& v) {
  CartanDimensions d;
  d.compact = v.root_system().rank();
  for (const Root& gamma : v.root_system().roots())
    (classify_root(gamma, v) == RootKind::compact ? d.compact : d.noncompact) += 1;
  return d;
}

/// One-row diamond for a weight-zero structure, e.g.
///   h^{-1,1}  h^{0,0}  h^{1,-1}
///      20       191       20
inline std::string hodge_diamond(const HodgeNumbers& hn) {
  std::vector<std::string> heads, values;
  for (const auto& [j, n] : hn.h) {
    if (n == 0) continue;
    heads.push_back("h^{" + std::to_string(-j) + "," + std::to_string(j) + "}");
    values.push_back(std::to_string(n));
  }
  std::string top, bottom;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    const std::size_t w = std::max(heads[i].size(), values[i].size()) + 2;
    auto pad = [w](const std::string& s) {
      const std::size_t left = (w - s.size()) / 2;
      return std::string(left, ' ') + s + std::string(w - s.size() - left, ' ');
    };
    top += pad(heads[i]);
    bottom += pad(values[i]);
  }
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  return rstrip(top) + "\n" + rstrip(bottom) + "\n";
}

}  // namespace mtg
