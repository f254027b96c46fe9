// relation-verifier: the lantern and crossed-lantern relations, the
// telescoping argument of the torsion lemma, and the formal abelianization
// calculator for the two-lantern 2-torsion argument.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "johnson.hpp"
#include "surface.hpp"

namespace mcg {

struct RelationInstance {
  SurfaceContext context;
  std::string name;
  std::vector<MappingClass> lhs;  // composed right-to-left
  std::vector<MappingClass> rhs;
};

struct VerificationReport {
  bool exact = false;        // composed automorphisms equal on all generators
  bool symplectic = false;   // equal abelianizations
  bool johnson_checked = false;  // both sides Torelli?
  bool johnson = false;      // equal Johnson images (when checked)
  int first_bad_generator = 0;   // 0 when exact
  bool all_pass() const { return exact && symplectic && (!johnson_checked || johnson); }
};

VerificationReport verify_relation(const RelationInstance& r);

// Seven-twist lantern instance on a genus-2 subsurface of Σ_{g,1} (g ≥ 3):
// (T_{x₃}T_{y₃}⁻¹)(T_{x₂}T_{y₂}⁻¹)(T_{x₁}T_{y₁}⁻¹) = T_sep.
RelationInstance lantern_instance(int g);

struct CrossedLanternResult {
  RelationInstance relation;  // (T_{y₁}T_{y₂}⁻¹)(T_{x₁}T_{x₂}⁻¹) = T_{z₁}T_{z₂}⁻¹
  bool key_fact_conj[2] = {false, false};  // T_{x₂} T_{y_i} T_{x₂}⁻¹ = T_{z_i}
  bool key_fact_transport = false;         // (T_{y₂}T_{y₁}⁻¹)(x₂-twist)(…)⁻¹ = T_{x₁}
};
CrossedLanternResult crossed_lantern_instance(int g);

struct TelescopeReport {
  bool conjugates_verify = false;  // all p conjugated relations exact
  long long bp_coefficient = 0;    // coefficient of the BP_x symbol (= p)
  bool pass = false;
};
TelescopeReport telescope_check(int p, int g = 2);

// Formal words in a free group on abstract symbols; conjugators vanish
// under abelianization.
struct FormalLetter {
  std::string symbol;
  long long exponent = 1;
  std::vector<FormalLetter> conjugator;  // c · symbol^e · c⁻¹
};
using FormalWord = std::vector<FormalLetter>;

std::map<std::string, long long> formal_abelianization(const FormalWord& w);

// The displayed two-lantern product whose abelianization certifies
// 2[T_β] = 0; returns its (all-zero) coefficient map.
std::map<std::string, long long> killsep_formal();

}  // namespace mcg
