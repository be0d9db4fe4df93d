#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtgroup/errors.hpp"
#include "mtgroup/hodge.hpp"
#include "mtgroup/lifting.hpp"
#include "mtgroup/serre_center.hpp"
#include "mtgroup/verdict.hpp"

namespace mtg {

using nlohmann::json;

/// $MT_ORACLE_PRESET_DIR, else the directory baked in at build time.
inline std::filesystem::path preset_directory() {
  if (const char* env = std::getenv("MT_ORACLE_PRESET_DIR"); env && *env) return env;
#ifdef MTGROUP_PRESET_DIR
  return MTGROUP_PRESET_DIR;
#else
  return "presets";
#endif
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

namespace io_detail {

/// Rethrows InvalidInput with a field path prefix.
template <class F>
auto at_field(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

inline void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw InvalidInput(where + ": expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw InvalidInput(where + ": unknown field '" + key + "'");
}

inline int as_int(const json& j) {
  if (!j.is_number_integer()) throw InvalidInput("expected an integer, got " + j.dump());
  return j.get<int>();
}

inline std::vector<int> as_int_list(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x));
  return out;
}

inline IntMatrix as_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("expected a nonempty array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  IntMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InvalidInput("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_integer()) throw InvalidInput("matrix entries must be integers");
      m(r, c) = Integer(j[r][c].get<long long>());
    }
  }
  return m;
}

inline json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(static_cast<long long>(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace io_detail

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected an integer or a rational string like \"1/2\", got " + j.dump());
}

/// Integers as JSON numbers, proper fractions as "p/q" strings.
inline json rational_to_json(const Rational& q) {
  if (is_integral(q) && abs(numerator_of(q)) < Integer(1LL << 53)) return static_cast<long long>(numerator_of(q));
  return to_string(q);
}

inline json cocharacter_to_json(const Cocharacter& mu) {
  json a = json::array();
  for (const auto& x : mu.coords) a.push_back(rational_to_json(x));
  return a;
}

inline json integers_to_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(static_cast<long long>(x));
  return a;
}

// ---------------------------------------------------------------------------
// Presets

inline GeneratorRecipe recipe_from_json(const json& j) {
  GeneratorRecipe line;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "coroots") line.kind = GeneratorRecipe::Kind::coroots;
    else if (s == "coweights") line.kind = GeneratorRecipe::Kind::coweights;
    else throw InvalidInput("unknown generator keyword '" + s + "'");
    return line;
  }
  io_detail::reject_unknown(j, {"coroots", "coweights", "coweight", "central"}, "generator");
  if (j.contains("central"))
    for (const auto& x : j.at("central")) line.central.push_back(rational_from_json(x));
  if (j.contains("coweight")) {
    line.kind = GeneratorRecipe::Kind::coweight;
    const json& k = j.at("coweight");
    line.index = k.is_string() ? k.get<std::string>() : std::to_string(io_detail::as_int(k));
  } else if (j.contains("coroots")) {
    line.kind = GeneratorRecipe::Kind::coroots;
  } else if (j.contains("coweights")) {
    line.kind = GeneratorRecipe::Kind::coweights;
  } else {
    if (line.central.empty()) throw InvalidInput("central generator without central coordinates");
    line.kind = GeneratorRecipe::Kind::central;
  }
  return line;
}

inline json load_preset_table(Family family, const std::filesystem::path& dir) {
  const auto path = dir / (std::string(1, family_letter(family)) + ".json");
  json table = read_json_file(path);
  if (!table.contains("presets") || !table.at("presets").is_object())
    throw InvalidInput(path.string() + ": missing 'presets' object");
  return table.at("presets");
}

inline std::vector<std::string> preset_names(Family family, const std::filesystem::path& dir = preset_directory()) {
  std::vector<std::string> names;
  const json table = load_preset_table(family, dir);
  for (const auto& [name, value] : table.items()) names.push_back(name);
  return names;
}

inline IsogenyPreset load_preset(Family family, const std::string& name,
                                 const std::filesystem::path& dir = preset_directory()) {
  const json table = load_preset_table(family, dir);
  std::string key = name;
  for (int hops = 0; hops < 8; ++hops) {
    if (!table.contains(key))
      throw InvalidInput(std::string("no preset '") + name + "' for family " + family_letter(family));
    const json& entry = table.at(key);
    if (entry.contains("alias")) {
      key = entry.at("alias").get<std::string>();
      continue;
    }
    io_detail::reject_unknown(entry, {"generators", "central_rank", "rank_parity", "description"}, "preset " + key);
    IsogenyPreset preset;
    preset.name = name;
    preset.central_rank = entry.value("central_rank", 0);
    if (entry.contains("rank_parity")) {
      const auto parity = entry.at("rank_parity").get<std::string>();
      preset.rank_parity = parity == "even" ? 0 : 1;
    }
    for (const auto& line : entry.at("generators")) preset.generators.push_back(recipe_from_json(line));
    return preset;
  }
  throw InvalidInput("preset alias chain too long at '" + name + "'");
}

inline RootDatum preset_datum(const RootSystem& rs, const std::string& name,
                              const std::filesystem::path& dir = preset_directory()) {
  return make_root_datum(rs, load_preset(rs.family(), name, dir));
}

// ---------------------------------------------------------------------------
// Galois modules: {"orders": [..], "c": [..], "action": [matrix, ...]}

inline GaloisModule galois_module_from_json(const json& j) {
  io_detail::reject_unknown(j, {"orders", "c", "action"}, "center");
  auto orders = io_detail::at_field("center.orders", [&] { return io_detail::as_int_list(j.at("orders")); });
  auto conj = io_detail::at_field("center.c", [&] { return io_detail::as_int_list(j.at("c")); });
  std::vector<IntMatrix> action = io_detail::at_field("center.action", [&] {
    std::vector<IntMatrix> out;
    for (const auto& m : j.at("action")) out.push_back(io_detail::as_matrix(m));
    return out;
  });
  return io_detail::at_field("center", [&] { return GaloisModule(orders, conj, action); });
}

inline json galois_module_to_json(const GaloisModule& m) {
  json action = json::array();
  for (const auto& a : m.action()) action.push_back(io_detail::matrix_json(a));
  return json{{"orders", m.group().orders()}, {"c", m.conj()}, {"action", action}};
}

// ---------------------------------------------------------------------------
// Group specs

inline VoganDiagram factor_from_json(const json& j, const std::string& where) {
  io_detail::reject_unknown(j, {"family", "rank", "painted", "automorphism", "real_form"}, where);
  const Family family = io_detail::at_field(where + ".family", [&] { return parse_family(j.at("family").get<std::string>()); });
  const int rank = io_detail::at_field(where + ".rank", [&] { return io_detail::as_int(j.at("rank")); });
  RootSystem rs = io_detail::at_field(where, [&] { return build_root_system(family, rank); });
  if (j.contains("real_form")) {
    if (j.contains("painted") || j.contains("automorphism"))
      throw InvalidInput(where + ": give either real_form or painted/automorphism, not both");
    return io_detail::at_field(where + ".real_form",
                               [&] { return vogan_diagram_from_label(rs, j.at("real_form").get<std::string>()); });
  }
  std::vector<int> painted, automorphism;
  if (j.contains("painted"))
    painted = io_detail::at_field(where + ".painted", [&] { return io_detail::as_int_list(j.at("painted")); });
  if (j.contains("automorphism"))
    automorphism = io_detail::at_field(where + ".automorphism", [&] { return io_detail::as_int_list(j.at("automorphism")); });
  for (int& i : painted) --i;
  for (int& i : automorphism) --i;
  return io_detail::at_field(where, [&] { return VoganDiagram(rs, painted, automorphism); });
}

inline json factor_to_json(const VoganDiagram& v) {
  std::vector<int> painted = v.painted(), automorphism = v.automorphism();
  for (int& i : painted) ++i;
  for (int& i : automorphism) ++i;
  return json{{"family", std::string(1, family_letter(v.root_system().family()))},
              {"rank", v.root_system().rank()},
              {"painted", painted},
              {"automorphism", automorphism}};
}

inline RootDatum lattice_from_json(const json& j, const std::vector<RootSystem>& factors,
                                   const std::filesystem::path& preset_dir) {
  io_detail::reject_unknown(j, {"preset", "presets", "generators", "central_rank"}, "lattice");
  const int kinds = int(j.contains("preset")) + int(j.contains("presets")) + int(j.contains("generators"));
  if (kinds != 1) throw InvalidInput("lattice: give exactly one of preset, presets, generators");
  if (j.contains("generators")) {
    const int central = j.contains("central_rank")
                            ? io_detail::at_field("lattice.central_rank", [&] { return io_detail::as_int(j.at("central_rank")); })
                            : 0;
    std::vector<std::vector<Rational>> gens = io_detail::at_field("lattice.generators", [&] {
      std::vector<std::vector<Rational>> out;
      for (const auto& g : j.at("generators")) {
        std::vector<Rational> v;
        for (const auto& x : g) v.push_back(rational_from_json(x));
        out.push_back(std::move(v));
      }
      return out;
    });
    return io_detail::at_field("lattice", [&] { return RootDatum(factors, std::move(gens), central); });
  }
  if (j.contains("central_rank")) throw InvalidInput("lattice.central_rank: only valid with generators");
  std::vector<std::string> names;
  if (j.contains("preset")) {
    names.assign(factors.size(), io_detail::at_field("lattice.preset", [&] { return j.at("preset").get<std::string>(); }));
  } else {
    names = io_detail::at_field("lattice.presets", [&] { return j.at("presets").get<std::vector<std::string>>(); });
    if (names.size() != factors.size()) throw InvalidInput("lattice.presets: one preset per factor required");
  }
  std::vector<IsogenyPreset> presets;
  for (std::size_t f = 0; f < factors.size(); ++f)
    presets.push_back(io_detail::at_field("lattice.preset", [&] { return load_preset(factors[f].family(), names[f], preset_dir); }));
  return io_detail::at_field("lattice", [&] { return make_root_datum(factors, presets); });
}

inline json lattice_to_json(const RootDatum& rd) {
  json gens = json::array();
  for (const auto& g : rd.generators()) {
    json row = json::array();
    for (const auto& x : g) row.push_back(rational_to_json(x));
    gens.push_back(row);
  }
  return json{{"generators", gens}, {"central_rank", rd.central_rank()}};
}

inline GroupSpec group_spec_from_json(const json& j, const std::filesystem::path& preset_dir = preset_directory()) {
  io_detail::reject_unknown(j, {"factors", "lattice", "center", "weight_gm"}, "spec");
  if (!j.contains("factors") || !j.at("factors").is_array() || j.at("factors").empty())
    throw InvalidInput("factors: expected a nonempty array");
  std::vector<VoganDiagram> factors;
  for (std::size_t f = 0; f < j.at("factors").size(); ++f)
    factors.push_back(factor_from_json(j.at("factors")[f], "factors[" + std::to_string(f) + "]"));
  std::vector<RootSystem> systems;
  for (const auto& v : factors) systems.push_back(v.root_system());
  if (!j.contains("lattice")) throw InvalidInput("lattice: missing");
  RootDatum lattice = lattice_from_json(j.at("lattice"), systems, preset_dir);
  std::optional<GaloisModule> center;
  if (j.contains("center") && !j.at("center").is_null()) center = galois_module_from_json(j.at("center"));
  bool weight = false;
  if (j.contains("weight_gm")) {
    if (!j.at("weight_gm").is_boolean()) throw InvalidInput("weight_gm: expected a boolean");
    weight = j.at("weight_gm").get<bool>();
  }
  GroupSpec spec{std::move(factors), std::move(lattice), std::move(center), weight};
  spec.validate();
  return spec;
}

inline GroupSpec load_group_spec(const std::filesystem::path& path,
                                 const std::filesystem::path& preset_dir = preset_directory()) {
  return group_spec_from_json(read_json_file(path), preset_dir);
}

inline json group_spec_to_json(const GroupSpec& spec) {
  json factors = json::array();
  for (const auto& v : spec.factors) factors.push_back(factor_to_json(v));
  return json{{"factors", factors},
              {"lattice", lattice_to_json(spec.lattice)},
              {"center", spec.center ? galois_module_to_json(*spec.center) : json(nullptr)},
              {"weight_gm", spec.weight_gm}};
}

// ---------------------------------------------------------------------------
// Reports

inline json verdict_to_json(const Verdict& v) {
  json checks = json::array();
  for (const auto& c : v.checks)
    checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"condition", c.condition}});
  return json{{"is_mt", v.is_mt},
              {"checks", checks},
              {"witness", v.witness ? cocharacter_to_json(*v.witness) : json(nullptr)},
              {"notes", v.notes}};
}

inline json hodge_to_json(const HodgeNumbers& hn) {
  json m = json::object();
  for (const auto& [j, n] : hn.h)
    if (n != 0) m[std::to_string(j)] = n;
  return m;
}

inline json multiplicities_to_json(const MultiplicityVector& mv) {
  json a = json::array();
  for (const auto& [label, mult] : mv.multiplicity)
    a.push_back(json{{"orbit", label}, {"size", mv.orbit_size.at(label)}, {"multiplicity", mult}});
  return a;
}

}  // namespace mtg
