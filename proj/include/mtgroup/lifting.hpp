#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtgroup/errors.hpp"
#include "mtgroup/int_matrix.hpp"
#include "mtgroup/polarizable.hpp"
#include "mtgroup/real_form.hpp"
#include "mtgroup/root_system.hpp"

namespace mtg {

/// Cocharacter lattice X_*(T~) of a cover or central extension of a product of
/// simple adjoint groups.
///
/// Generators are rational vectors in the concatenated ambient coordinates of
/// the factors, followed by `central_rank` coordinates for the central torus
/// (which pair to zero with every root). Internally each generator is stored in
/// datum coordinates: its pairings with the simple roots of every factor, then
/// its central coordinates scaled to integers.
class RootDatum {
 public:
  RootDatum(std::vector<RootSystem> factors, std::vector<std::vector<Rational>> generators, int central_rank)
      : factors_(std::move(factors)), generators_(std::move(generators)), central_rank_(central_rank) {
    if (factors_.empty()) throw InvalidInput("root datum needs at least one simple factor");
    if (central_rank_ < 0) throw InvalidInput("negative central rank");
    for (const auto& f : factors_) {
      ss_rank_ += f.rank();
      ambient_ += f.ambient_dim();
    }
    if (generators_.empty()) throw InvalidInput("root datum needs at least one generator");
    const std::size_t width = static_cast<std::size_t>(ambient_ + central_rank_);
    Integer scale = 1;
    for (const auto& g : generators_) {
      if (g.size() != width)
        throw InvalidInput("lattice generator has " + std::to_string(g.size()) + " coordinates, expected " +
                           std::to_string(width));
      for (std::size_t k = ambient_; k < width; ++k) scale = lcm(scale, denominator_of(g[k]));
    }
    central_scale_ = scale;

    const std::size_t rows = static_cast<std::size_t>(ss_rank_ + central_rank_);
    datum_ = IntMatrix(rows, generators_.size());
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      const auto& g = generators_[j];
      std::vector<Integer> x = adjoint_coordinates(Cocharacter{{g.begin(), g.begin() + ambient_}});
      for (int i = 0; i < ss_rank_; ++i) datum_(i, j) = x[i];
      for (int c = 0; c < central_rank_; ++c) datum_(ss_rank_ + c, j) = numerator_of(g[ambient_ + c] * scale);
    }

    // Coroots (with zero central part) lie in every cover's lattice.
    int offset = 0;
    for (const auto& f : factors_) {
      for (int i = 0; i < f.rank(); ++i) {
        std::vector<Integer> coroot(rows);
        for (int k = 0; k < f.rank(); ++k) coroot[offset + k] = f.cartan_matrix()(i, k);
        if (!in_column_lattice(datum_, coroot))
          throw InvalidInput("lattice does not contain the coroot alpha_" + std::to_string(i + 1) + "^vee of " +
                             f.name());
      }
      offset += f.rank();
    }
    if (matrix_rank(datum_) != rows)
      throw InvalidInput("lattice generators do not span the central coordinates (rank deficient)");

    image_ = datum_.row_block(0, ss_rank_);
    image_smith_ = smith_normal_form(image_);
  }

  const std::vector<RootSystem>& factors() const { return factors_; }
  const std::vector<std::vector<Rational>>& generators() const { return generators_; }
  int central_rank() const { return central_rank_; }
  int semisimple_rank() const { return ss_rank_; }
  int ambient_dim() const { return ambient_; }
  bool is_semisimple() const { return central_rank_ == 0; }

  /// Datum coordinates of the generators, (semisimple rank + central rank) x #generators.
  const IntMatrix& datum_matrix() const { return datum_; }
  /// Image of X_*(T~) in X_*(T^ad), in simple-pairing coordinates.
  const IntMatrix& adjoint_image() const { return image_; }
  const SmithForm& adjoint_image_smith() const { return image_smith_; }
  /// Central coordinates of generators are multiplied by this before storage.
  const Integer& central_scale() const { return central_scale_; }

  /// Concatenated simple pairings of mu against every factor.
  std::vector<Integer> adjoint_coordinates(const Cocharacter& mu) const {
    if (mu.size() != static_cast<std::size_t>(ambient_))
      throw InvalidInput("cocharacter has " + std::to_string(mu.size()) + " coordinates, expected " +
                         std::to_string(ambient_));
    std::vector<Integer> out;
    auto parts = split(mu);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      auto x = simple_pairings(parts[f], factors_[f]);
      out.insert(out.end(), x.begin(), x.end());
    }
    return out;
  }

  Cocharacter from_adjoint_coordinates(std::span<const Integer> x) const {
    if (x.size() != static_cast<std::size_t>(ss_rank_)) throw InvalidInput("wrong number of simple pairings");
    Cocharacter mu;
    std::size_t offset = 0;
    for (const auto& f : factors_) {
      auto part = from_simple_pairings(f, x.subspan(offset, f.rank()));
      mu.coords.insert(mu.coords.end(), part.coords.begin(), part.coords.end());
      offset += f.rank();
    }
    return mu;
  }

  std::vector<Cocharacter> split(const Cocharacter& mu) const {
    std::vector<Cocharacter> parts;
    std::size_t offset = 0;
    for (const auto& f : factors_) {
      parts.push_back(Cocharacter{{mu.coords.begin() + offset, mu.coords.begin() + offset + f.ambient_dim()}});
      offset += f.ambient_dim();
    }
    return parts;
  }

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.factors_ == b.factors_ && a.generators_ == b.generators_ && a.central_rank_ == b.central_rank_;
  }

 private:
  std::vector<RootSystem> factors_;
  std::vector<std::vector<Rational>> generators_;
  int central_rank_ = 0;
  int ss_rank_ = 0;
  int ambient_ = 0;
  Integer central_scale_ = 1;
  IntMatrix datum_;
  IntMatrix image_;
  SmithForm image_smith_;
};

/// Class of mu in coker(X_*(T~) -> X_*(T^ad)) = (+) Z/d_i, the d_i being the
/// invariant factors > 1. Zero exactly when mu lifts.
struct ObstructionClass {
  std::vector<Integer> moduli;
  std::vector<Integer> coordinates;

  bool is_zero() const {
    for (const auto& c : coordinates)
      if (c != 0) return false;
    return true;
  }

  Integer order() const {
    Integer o = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) o = lcm(o, moduli[i] / gcd(moduli[i], coordinates[i]));
    return o;
  }

  friend ObstructionClass operator+(const ObstructionClass& a, const ObstructionClass& b) {
    if (a.moduli != b.moduli) throw InvalidInput("obstruction classes live in different groups");
    ObstructionClass s = a;
    for (std::size_t i = 0; i < s.moduli.size(); ++i) s.coordinates[i] = floor_mod(a.coordinates[i] + b.coordinates[i], s.moduli[i]);
    return s;
  }

  friend bool operator==(const ObstructionClass&, const ObstructionClass&) = default;
};

namespace detail {

/// Cokernel coordinates of an adjoint coordinate vector x.
inline ObstructionClass cokernel_class(const RootDatum& rd, std::span<const Integer> x) {
  const SmithForm& f = rd.adjoint_image_smith();
  if (f.rank != static_cast<std::size_t>(rd.semisimple_rank()))
    throw InvalidInput("lattice image has infinite index in X_*(T^ad)");
  std::vector<Integer> ux = f.left * x;
  ObstructionClass c;
  for (std::size_t i = 0; i < f.rank; ++i) {
    const Integer& d = f.diagonal(i, i);
    if (d == 1) continue;
    c.moduli.push_back(d);
    c.coordinates.push_back(floor_mod(ux[i], d));
  }
  return c;
}

inline std::vector<Integer> polarizable_residue(const RootDatum& rd, std::span<const VoganDiagram> diagrams) {
  if (diagrams.size() != rd.factors().size())
    throw InvalidInput("expected one Vogan diagram per simple factor (" + std::to_string(rd.factors().size()) + ")");
  std::vector<Integer> p;
  for (std::size_t f = 0; f < diagrams.size(); ++f) {
    if (!(diagrams[f].root_system() == rd.factors()[f]))
      throw InvalidInput("Vogan diagram " + std::to_string(f + 1) + " is for " + diagrams[f].root_system().name() +
                         " but the factor is " + rd.factors()[f].name());
    for (int bit : parity_pattern(diagrams[f]).bits) p.emplace_back(bit);
  }
  return p;
}

}  // namespace detail

/// mu is the image of some integer combination of the generators.
inline bool lifts_to(const Cocharacter& mu, const RootDatum& rd) {
  const auto x = rd.adjoint_coordinates(mu);
  return in_column_lattice(rd.adjoint_image(), x);
}

/// A preimage of mu in X_*(T~) (ambient coordinates then central coordinates), if any.
inline std::optional<std::vector<Rational>> lift(const Cocharacter& mu, const RootDatum& rd) {
  const auto x = rd.adjoint_coordinates(mu);
  auto y = solve_integer(rd.adjoint_image(), x);
  if (!y) return std::nullopt;
  std::vector<Rational> out(rd.generators().front().size());
  for (std::size_t j = 0; j < y->size(); ++j) {
    if ((*y)[j] == 0) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += Rational((*y)[j]) * rd.generators()[j][k];
  }
  return out;
}

inline ObstructionClass obstruction_class(const Cocharacter& mu, const RootDatum& rd) {
  const auto x = rd.adjoint_coordinates(mu);
  return detail::cokernel_class(rd, x);
}

/// Invariant factors > 1 of coker(X_*(T~) -> X_*(T^ad)).
inline std::vector<Integer> cokernel_invariants(const RootDatum& rd) {
  return detail::cokernel_class(rd, std::vector<Integer>(rd.semisimple_rank())).moduli;
}

/// Invariant factors > 1 of the torsion of X^*(Z) = X^*(T~) / (root lattice),
/// computed on the character side: X^*(T~) is the dual of X_*(T~) and the
/// simple roots are the first coordinate functionals.
inline std::vector<Integer> center_torsion(const RootDatum& rd) {
  const IntMatrix basis = column_lattice_basis(rd.datum_matrix());
  const IntMatrix relations = basis.row_block(0, rd.semisimple_rank()).transpose();
  std::vector<Integer> out;
  for (const auto& d : smith_normal_form(relations).invariant_factors())
    if (d > 1) out.push_back(d);
  return out;
}

struct LiftResult {
  bool exists = false;
  std::optional<Cocharacter> witness;
};

/// Does some member of the polarizable congruence class lift? Decided by
/// membership of the class residue p in image + 2 X_*(T^ad).
///
/// The witness is p - 2 delta for the first delta found by breadth-first
/// search over unit steps, so it depends only on the image lattice.
inline LiftResult exists_polarizable_lift(const RootDatum& rd, std::span<const VoganDiagram> diagrams) {
  const std::vector<Integer> p = detail::polarizable_residue(rd, diagrams);
  const std::size_t r = p.size();
  IntMatrix two(r, r);
  for (std::size_t i = 0; i < r; ++i) two(i, i) = 2;
  if (!in_column_lattice(rd.adjoint_image().hcat(two), p)) return {};

  const ObstructionClass target = detail::cokernel_class(rd, p);
  std::vector<ObstructionClass> steps;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Integer> e(r);
    e[i] = 1;
    steps.push_back(detail::cokernel_class(rd, e));
  }
  auto twice = [](ObstructionClass c) { return c + c; };

  ObstructionClass start = target;
  for (auto& c : start.coordinates) c = 0;
  std::map<std::vector<Integer>, std::vector<Integer>> seen;  // state -> delta
  std::deque<ObstructionClass> queue{start};
  seen[start.coordinates] = std::vector<Integer>(r);
  while (!queue.empty()) {
    ObstructionClass state = queue.front();
    queue.pop_front();
    const std::vector<Integer> delta = seen[state.coordinates];
    if (twice(state) == target) {
      std::vector<Integer> x(r);
      for (std::size_t i = 0; i < r; ++i) x[i] = p[i] - 2 * delta[i];
      return {true, rd.from_adjoint_coordinates(x)};
    }
    for (std::size_t i = 0; i < r; ++i)
      for (int sign : {1, -1}) {
        ObstructionClass step = steps[i];
        if (sign < 0)
          for (std::size_t k = 0; k < step.coordinates.size(); ++k)
            step.coordinates[k] = floor_mod(-step.coordinates[k], step.moduli[k]);
        ObstructionClass next = state + step;
        if (seen.count(next.coordinates)) continue;
        std::vector<Integer> d = delta;
        d[i] += sign;
        seen[next.coordinates] = d;
        queue.push_back(next);
      }
  }
  throw std::logic_error("coset intersection reported a lift but no witness was found");
}

inline LiftResult exists_polarizable_lift(const RootDatum& rd, const VoganDiagram& v) {
  return exists_polarizable_lift(rd, std::span<const VoganDiagram>(&v, 1));
}

/// The same question through the torsion dual: the class of p in
/// coker / 2 coker (= dual of X^*(Z)[2]) must vanish.
inline bool exists_polarizable_lift_by_torsion(const RootDatum& rd, std::span<const VoganDiagram> diagrams) {
  const std::vector<Integer> p = detail::polarizable_residue(rd, diagrams);
  const ObstructionClass o = detail::cokernel_class(rd, p);
  for (std::size_t i = 0; i < o.moduli.size(); ++i)
    if (o.moduli[i] % 2 == 0 && o.coordinates[i] % 2 != 0) return false;
  return true;
}

/// Every member of the polarizable class lifts: p lifts and 2 X_*(T^ad) lies in the image.
inline bool all_polarizable_lift(const RootDatum& rd, std::span<const VoganDiagram> diagrams) {
  const std::vector<Integer> p = detail::polarizable_residue(rd, diagrams);
  if (!detail::cokernel_class(rd, p).is_zero()) return false;
  for (const auto& d : cokernel_invariants(rd))
    if (d != 2) return false;
  return true;
}

inline bool all_polarizable_lift(const RootDatum& rd, const VoganDiagram& v) {
  return all_polarizable_lift(rd, std::span<const VoganDiagram>(&v, 1));
}

// ---------------------------------------------------------------------------
// Isogeny presets

/// One line of a preset recipe.
struct GeneratorRecipe {
  enum class Kind { coroots, coweights, coweight, central };
  Kind kind = Kind::coroots;
  /// For `coweight`: 1-based index, or "n" / "n-1" counted from the end.
  std::string index;
  /// Central coordinates attached to the generator; empty means all zero.
  std::vector<Rational> central;
};

struct IsogenyPreset {
  std::string name;
  int central_rank = 0;
  /// Required rank parity (0 even, 1 odd), if any.
  std::optional<int> rank_parity;
  std::vector<GeneratorRecipe> generators;
};

namespace detail {

inline int resolve_index(const std::string& index, int rank) {
  int k = 0;
  if (index == "n") k = rank;
  else if (index == "n-1") k = rank - 1;
  else {
    try {
      k = std::stoi(index);
    } catch (const std::exception&) {
      throw InvalidInput("bad coweight index '" + index + "'");
    }
  }
  if (k < 1 || k > rank) throw InvalidInput("coweight index " + index + " out of range");
  return k - 1;
}

}  // namespace detail

/// Direct product of presets, one per factor; central coordinates are concatenated.
inline RootDatum make_root_datum(const std::vector<RootSystem>& factors, const std::vector<IsogenyPreset>& presets) {
  if (factors.size() != presets.size()) throw InvalidInput("one preset per factor required");
  int ambient = 0, central = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    ambient += factors[f].ambient_dim();
    central += presets[f].central_rank;
  }
  std::vector<std::vector<Rational>> gens;
  int a_off = 0, c_off = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const RootSystem& rs = factors[f];
    const IsogenyPreset& preset = presets[f];
    if (preset.rank_parity && rs.rank() % 2 != *preset.rank_parity)
      throw InvalidInput("preset '" + preset.name + "' requires " + (*preset.rank_parity ? "odd" : "even") +
                         " rank, got " + rs.name());
    auto emit = [&](const Cocharacter& adj, const std::vector<Rational>& cen) {
      if (!cen.empty() && static_cast<int>(cen.size()) != preset.central_rank)
        throw InvalidInput("preset '" + preset.name + "': central part has wrong length");
      std::vector<Rational> g(ambient + central);
      for (int k = 0; k < rs.ambient_dim(); ++k) g[a_off + k] = adj.coords[k];
      for (std::size_t k = 0; k < cen.size(); ++k) g[ambient + c_off + k] = cen[k];
      gens.push_back(std::move(g));
    };
    for (const auto& line : preset.generators) {
      switch (line.kind) {
        case GeneratorRecipe::Kind::coroots:
          for (int i = 0; i < rs.rank(); ++i) emit(rs.simple_coroot(i), line.central);
          break;
        case GeneratorRecipe::Kind::coweights:
          for (const auto& w : rs.fundamental_coweights()) emit(w, line.central);
          break;
        case GeneratorRecipe::Kind::coweight:
          emit(rs.fundamental_coweights()[detail::resolve_index(line.index, rs.rank())], line.central);
          break;
        case GeneratorRecipe::Kind::central:
          emit(zero_cocharacter(rs.ambient_dim()), line.central);
          break;
      }
    }
    a_off += rs.ambient_dim();
    c_off += preset.central_rank;
  }
  return RootDatum(factors, std::move(gens), central);
}

inline RootDatum make_root_datum(const RootSystem& rs, const IsogenyPreset& preset) {
  return make_root_datum(std::vector<RootSystem>{rs}, std::vector<IsogenyPreset>{preset});
}

/// X_*(T^ad) itself: the adjoint group of a product of simple factors.
inline RootDatum adjoint_datum(const std::vector<RootSystem>& factors) {
  const IsogenyPreset adjoint{"adjoint", 0, std::nullopt, {GeneratorRecipe{GeneratorRecipe::Kind::coweights, {}, {}}}};
  return make_root_datum(factors, std::vector<IsogenyPreset>(factors.size(), adjoint));
}

}  // namespace mtg
