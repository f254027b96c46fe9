// Batch command-line front end: every verification and computation as a
// subcommand with file-based input/output.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "congruence.hpp"
#include "criteria.hpp"
#include "io.hpp"
#include "johnson.hpp"
#include "relations.hpp"
#include "surface.hpp"

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for the mapping class group of a "
               "bordered surface: Torelli, Johnson, and congruence-level "
               "computations"};
  app.require_subcommand(1);

  int genus = 1, n = 3;
  long long p = 3;
  std::string in_path, relation, flavor = "sp", which = "G";

  auto* cmd_boundary = app.add_subcommand("boundary", "print the boundary word");
  cmd_boundary->add_option("--genus", genus, "surface genus")->required();

  auto* cmd_ab = app.add_subcommand("abelianize", "symplectic action of a mapping class");
  cmd_ab->add_option("--in", in_path, "mapping class JSON file")->required();

  auto* cmd_level = app.add_subcommand("level", "congruence level-p membership");
  cmd_level->add_option("--in", in_path, "mapping class JSON file")->required();
  cmd_level->add_option("--p", p, "level")->required();

  auto* cmd_johnson = app.add_subcommand("johnson", "Johnson homomorphism");
  cmd_johnson->add_option("--in", in_path, "mapping class JSON file")->required();
  long long mod = 0;
  cmd_johnson->add_option("--mod", mod, "odd prime p for tau_p");

  auto* cmd_verify = app.add_subcommand("verify", "verify a relation");
  cmd_verify->add_option("--relation", relation, "lantern|crossed-lantern|telescope")
      ->required();
  cmd_verify->add_option("--genus", genus, "surface genus")->required();
  cmd_verify->add_option("--p", p, "odd p for telescope");

  auto* cmd_psi = app.add_subcommand("psi", "congruence abelianization map");
  cmd_psi->add_option("--flavor", flavor, "sp|sl")->required();
  cmd_psi->add_option("--p", p, "prime")->required();
  cmd_psi->add_option("--in", in_path, "integer matrix JSON file")->required();

  auto* cmd_irr = app.add_subcommand("irreducible", "sp_2g(Z/p) irreducibility");
  cmd_irr->add_option("--g", genus, "g")->required();
  cmd_irr->add_option("--p", p, "prime")->required();

  auto* cmd_gen = app.add_subcommand("generate-modp", "catalog generates Sp_2g(Z/p)?");
  cmd_gen->add_option("--g", genus, "g")->required();
  cmd_gen->add_option("--p", p, "prime")->required();

  auto* cmd_charney = app.add_subcommand("charney", "Charney subgroup membership");
  cmd_charney->add_option("--n", n, "matrix size")->required();
  cmd_charney->add_option("--p", p, "prime")->required();
  cmd_charney->add_option("--in", in_path, "integer matrix JSON file")->required();
  cmd_charney->add_option("--which", which, "G|Ghat|K|Khat")->required();

  app.add_subcommand("selftest", "run the full acceptance criteria suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_boundary->parsed()) {
    std::cout << mcg::word_to_json(mcg::boundary_word(genus)).dump() << "\n";
    return 0;
  }
  if (cmd_ab->parsed()) {
    mcg::MappingClass f = mcg::mapping_class_from_json(load_json(in_path));
    std::cout << mcg::matrix_to_json(mcg::mc_abelianize(f)).dump() << "\n";
    return 0;
  }
  if (cmd_level->parsed()) {
    mcg::MappingClass f = mcg::mapping_class_from_json(load_json(in_path));
    bool ok = mcg::congruence_check(mcg::mc_abelianize(f), p);
    std::cout << (ok ? "level-" + std::to_string(p) + ": member"
                     : "level-" + std::to_string(p) + ": NOT a member")
              << "\n";
    return ok ? 0 : 1;
  }
  if (cmd_johnson->parsed()) {
    mcg::MappingClass f = mcg::mapping_class_from_json(load_json(in_path));
    if (mod == 0) {
      std::cout << mcg::exterior_to_json(mcg::johnson_tau(f)).dump() << "\n";
    } else {
      mcg::ModPJohnson t = mcg::johnson_mod_p(f, mod);
      json out = mcg::exterior_to_json(t.value);
      out["residual_zero"] = t.residual_zero;
      std::cout << out.dump() << "\n";
    }
    return 0;
  }
  if (cmd_verify->parsed()) {
    bool ok = false;
    if (relation == "lantern") {
      auto rep = mcg::verify_relation(mcg::lantern_instance(genus));
      ok = rep.all_pass();
      std::cout << "lantern: exact=" << rep.exact << " symplectic=" << rep.symplectic
                << " johnson=" << rep.johnson << "\n";
    } else if (relation == "crossed-lantern") {
      auto res = mcg::crossed_lantern_instance(genus);
      auto rep = mcg::verify_relation(res.relation);
      ok = rep.all_pass() && res.key_fact_conj[0] && res.key_fact_conj[1] &&
           res.key_fact_transport;
      std::cout << "crossed-lantern: exact=" << rep.exact
                << " keyfacts=" << res.key_fact_conj[0] << res.key_fact_conj[1]
                << res.key_fact_transport << "\n";
    } else if (relation == "telescope") {
      auto rep = mcg::telescope_check(static_cast<int>(p), genus);
      ok = rep.pass;
      std::cout << "telescope: conjugates=" << rep.conjugates_verify
                << " bp_coefficient=" << rep.bp_coefficient << "\n";
    } else {
      std::cerr << "unknown relation: " << relation << "\n";
      return 2;
    }
    return ok ? 0 : 1;
  }
  if (cmd_psi->parsed()) {
    mcg::IntMat m = mcg::int_matrix_from_json(load_json(in_path));
    mcg::Flavor fl = flavor == "sp" ? mcg::Flavor::sp : mcg::Flavor::sl;
    if (flavor != "sp" && flavor != "sl") {
      std::cerr << "unknown flavor: " << flavor << "\n";
      return 2;
    }
    std::cout << mcg::int_matrix_to_json(mcg::psi(m, p, fl)).dump() << "\n";
    return 0;
  }
  if (cmd_irr->parsed()) {
    mcg::IrreducibilityReport rep = mcg::sp_irreducible(genus, p);
    if (rep.irreducible)
      std::cout << "irreducible (dimension " << rep.module_dim << ")\n";
    else
      std::cout << "reducible: " << rep.witness << "\n";
    return 0;
  }
  if (cmd_gen->parsed()) {
    bool ok = mcg::mod_p_generates(genus, static_cast<int>(p));
    std::cout << (ok ? "generates" : "does NOT generate") << "\n";
    return ok ? 0 : 1;
  }
  if (cmd_charney->parsed()) {
    mcg::IntMat m = mcg::int_matrix_from_json(load_json(in_path));
    mcg::CharneyWhich w;
    if (which == "G") w = mcg::CharneyWhich::G;
    else if (which == "Ghat") w = mcg::CharneyWhich::Ghat;
    else if (which == "K") w = mcg::CharneyWhich::K;
    else if (which == "Khat") w = mcg::CharneyWhich::Khat;
    else {
      std::cerr << "unknown subgroup: " << which << "\n";
      return 2;
    }
    bool ok = mcg::charney_membership(m, w, n, p);
    std::cout << which << ": " << (ok ? "member" : "NOT a member") << "\n";
    return ok ? 0 : 1;
  }
  // selftest
  bool all = true;
  for (const auto& res : mcg::run_all_criteria(mcg::default_seed())) {
    std::cout << "criterion " << res.number << " (" << res.name << "): "
              << (res.pass ? "PASS" : "FAIL");
    if (!res.detail.empty()) std::cout << " — " << res.detail;
    std::cout << "\n";
    if (!res.pass) all = false;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
