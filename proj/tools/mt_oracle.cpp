// mt-oracle: Mumford-Tate group checks for reductive groups given as JSON specs.
//
// Exit codes: 0 success, 1 bad input, 2 no compact maximal torus (classes only).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtgroup/mtgroup.hpp"
#include "mtgroup/spec_io.hpp"

namespace {

using namespace mtg;

struct Options {
  std::string spec_path;
  std::string mu_text;
  bool json_out = false;
  bool quiet = false;
};

Cocharacter parse_mu(const std::string& text, const GroupSpec& spec) {
  if (text.empty()) throw InvalidInput("--mu is required for this command");
  Cocharacter mu{parse_rational_list(text)};
  if (static_cast<int>(mu.size()) != spec.lattice.ambient_dim())
    throw InvalidInput("--mu has " + std::to_string(mu.size()) + " coordinates, expected " +
                       std::to_string(spec.lattice.ambient_dim()));
  const auto parts = spec.lattice.split(mu);
  for (std::size_t f = 0; f < parts.size(); ++f)
    if (!in_coweight_lattice(parts[f], spec.lattice.factors()[f]))
      throw InvalidInput("--mu is not in the coweight lattice of factor " + std::to_string(f + 1));
  return mu;
}

std::string describe(const VoganDiagram& v) {
  std::string s = v.root_system().name() + ", painted {";
  for (std::size_t i = 0; i < v.painted().size(); ++i) s += (i ? "," : "") + std::to_string(v.painted()[i] + 1);
  s += "}";
  if (!v.is_inner()) s += ", outer automorphism";
  return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_classes(const GroupSpec& spec, const Options& opt) {
  for (std::size_t f = 0; f < spec.factors.size(); ++f)
    if (!has_compact_maximal_torus(spec.factors[f]))
      throw NoCompactMaximalTorus("factor " + std::to_string(f + 1) + " (" + spec.factors[f].root_system().name() +
                                  ") is not an inner form");
  json factors = json::array();
  Cocharacter combined;
  std::vector<int> combined_residue;
  for (const auto& v : spec.factors) {
    const auto classes = polarizable_classes_mod2(v);
    json arr = json::array();
    for (const auto& c : classes) {
      arr.push_back(json{{"residue", c.residue}, {"representative", cocharacter_to_json(c.representative)}});
      combined.coords.insert(combined.coords.end(), c.representative.coords.begin(), c.representative.coords.end());
      combined_residue.insert(combined_residue.end(), c.residue.begin(), c.residue.end());
    }
    factors.push_back(json{{"root_system", v.root_system().name()},
                           {"residue_count", std::string("2^") + std::to_string(v.root_system().rank())},
                           {"classes", arr}});
  }
  if (opt.json_out) {
    emit(json{{"spec", group_spec_to_json(spec)},
              {"factors", factors},
              {"product_class", json{{"residue", combined_residue}, {"representative", cocharacter_to_json(combined)}}}});
    return 0;
  }
  if (opt.quiet) {
    std::cout << join(combined.coords) << "\n";
    return 0;
  }
  for (std::size_t f = 0; f < spec.factors.size(); ++f) {
    const auto classes = polarizable_classes_mod2(spec.factors[f]);
    std::cout << "factor " << f + 1 << ": " << describe(spec.factors[f]) << "\n";
    std::cout << "  polarizable classes: " << classes.size() << " of 2^" << spec.factors[f].root_system().rank()
              << " residues mod 2\n";
    for (const auto& c : classes)
      std::cout << "  residue (" << join_ints(c.residue) << ")  representative (" << join(c.representative.coords)
                << ")\n";
  }
  if (spec.factors.size() > 1) std::cout << "product class representative (" << join(combined.coords) << ")\n";
  return 0;
}

int cmd_lift(const GroupSpec& spec, const Options& opt) {
  const Cocharacter mu = parse_mu(opt.mu_text, spec);
  const ObstructionClass obs = obstruction_class(mu, spec.lattice);
  const auto preimage = lift(mu, spec.lattice);
  const auto torsion = center_torsion(spec.lattice);
  if (opt.json_out) {
    json pre = nullptr;
    if (preimage) {
      pre = json::array();
      for (const auto& x : *preimage) pre.push_back(rational_to_json(x));
    }
    emit(json{{"spec", group_spec_to_json(spec)},
              {"mu", cocharacter_to_json(mu)},
              {"lifts", obs.is_zero()},
              {"preimage", pre},
              {"obstruction", json{{"moduli", integers_to_json(obs.moduli)},
                                   {"coordinates", integers_to_json(obs.coordinates)},
                                   {"order", static_cast<long long>(obs.order())}}},
              {"center_torsion", integers_to_json(torsion)}});
    return 0;
  }
  std::cout << (obs.is_zero() ? "lifts" : "does not lift") << "\n";
  if (opt.quiet) return 0;
  if (preimage) std::cout << "preimage (" << join(*preimage) << ")\n";
  std::cout << "obstruction class: order " << obs.order();
  if (!obs.moduli.empty()) {
    std::cout << " in";
    for (std::size_t i = 0; i < obs.moduli.size(); ++i)
      std::cout << (i ? " x" : "") << " Z/" << obs.moduli[i];
    std::cout << ", coordinates (" << join(obs.coordinates) << ")";
  }
  std::cout << "\ncenter torsion invariant factors: [" << join(torsion) << "]\n";
  return 0;
}

void warn_weight(const GroupSpec& spec) {
  if (spec.center && !spec.weight_gm)
    std::cerr << "warning: the center is nontrivial but weight_gm is false; a weight homomorphism is assumed to exist\n";
}

int cmd_verdict(const GroupSpec& spec, const Options& opt) {
  warn_weight(spec);
  const Verdict v = mt_verdict(spec);
  if (opt.json_out) {
    emit(json{{"spec", group_spec_to_json(spec)}, {"verdict", verdict_to_json(v)}});
    return 0;
  }
  std::cout << (v.is_mt ? "Mumford-Tate group: yes" : "Mumford-Tate group: no") << "\n";
  if (opt.quiet) return 0;
  std::size_t width = 0;
  for (const auto& c : v.checks) width = std::max(width, c.name.size());
  for (const auto& c : v.checks) {
    std::cout << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << (c.passed ? "pass" : "FAIL") << "  "
              << c.detail << "\n";
    if (!c.passed) std::cout << "  " << std::string(width + 8, ' ') << "failed condition: " << c.condition << "\n";
  }
  for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
  return 0;
}

int cmd_hodge(const GroupSpec& spec, const Options& opt) {
  const Cocharacter mu = parse_mu(opt.mu_text, spec);
  const auto systems = spec.root_systems();
  const HodgeNumbers hn = adjoint_hodge_numbers(mu, systems);
  if (opt.json_out) {
    emit(json{{"spec", group_spec_to_json(spec)},
              {"mu", cocharacter_to_json(mu)},
              {"hodge_numbers", hodge_to_json(hn)},
              {"dimension", hn.total()}});
    return 0;
  }
  std::cout << hodge_to_json(hn).dump() << "\n";
  if (!opt.quiet) std::cout << hodge_diamond(hn);
  return 0;
}

int cmd_serre_check(const GroupSpec& spec, const Options& opt) {
  warn_weight(spec);
  if (!spec.center) {
    if (opt.json_out) emit(json{{"spec", group_spec_to_json(spec)}, {"center", nullptr}, {"quotient_of_serre", true}});
    else std::cout << "semisimple: trivial connected center\n";
    return 0;
  }
  const GaloisModule& m = *spec.center;
  const MultiplicityVector have = module_multiplicities(m);
  const bool quotient = is_quotient_of_serre(m);
  std::optional<IntMatrix> weight;
  if (spec.weight_gm) weight = galois_fixed_sublattice(m);
  const bool anisotropic = is_R_anisotropic(m, weight);
  std::optional<MultiplicityVector> serre;
  if (!m.group().is_identity(m.conj())) serre = serre_multiplicities(m.group().orders(), m.conj());
  if (opt.json_out) {
    emit(json{{"spec", group_spec_to_json(spec)},
              {"module", multiplicities_to_json(have)},
              {"serre", serre ? multiplicities_to_json(*serre) : json(nullptr)},
              {"quotient_of_serre", quotient},
              {"compact_mod_weight", anisotropic}});
    return 0;
  }
  std::cout << (quotient ? "quotient of the Serre group" : "not a quotient of the Serre group") << "\n";
  if (opt.quiet) return 0;
  std::cout << "  orbit        size  center  serre\n";
  for (const auto& [label, mult] : have.multiplicity) {
    const long allowed = serre ? serre->at(label) : (m.group().is_identity(label) ? 1 : 0);
    std::string name = "(" + join_ints(label) + ")";
    std::cout << "  " << name << std::string(name.size() < 12 ? 12 - name.size() : 1, ' ') << " " << have.orbit_size.at(label)
              << "     " << mult << "       " << allowed << (mult > allowed ? "  exceeds" : "") << "\n";
  }
  std::cout << (anisotropic ? "compact over R" : "not compact over R") << (spec.weight_gm ? " modulo the weight line" : "")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mumford-Tate group oracle"};
  app.require_subcommand(1);
  Options opt;

  auto add = [&](const std::string& name, const std::string& help, bool wants_mu) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--spec", opt.spec_path, "group spec JSON file")->required();
    if (wants_mu) sub->add_option("--mu", opt.mu_text, "cocharacter, comma-separated rationals")->required();
    sub->add_flag("--json", opt.json_out, "emit JSON");
    sub->add_flag("--quiet", opt.quiet, "one-line result");
    return sub;
  };
  CLI::App* classes = add("classes", "polarizable congruence classes", false);
  CLI::App* lift_cmd = add("lift", "lift a cocharacter through the isogeny", true);
  CLI::App* verdict = add("verdict", "full Mumford-Tate decision", false);
  CLI::App* hodge = add("hodge", "Hodge numbers of the adjoint representation", true);
  CLI::App* serre = add("serre-check", "compare the center with the Serre group", false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const GroupSpec spec = load_group_spec(opt.spec_path);
    if (classes->parsed()) return cmd_classes(spec, opt);
    if (lift_cmd->parsed()) return cmd_lift(spec, opt);
    if (verdict->parsed()) return cmd_verdict(spec, opt);
    if (hodge->parsed()) return cmd_hodge(spec, opt);
    if (serre->parsed()) return cmd_serre_check(spec, opt);
  } catch (const NoCompactMaximalTorus& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
