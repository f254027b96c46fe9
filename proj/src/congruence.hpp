// congruence-arith: Sp_{2g}(ℤ,p)/SL_n(ℤ,p) machinery — ψ maps, lifts,
// elementary matrices, BMS generators, spinning/irreducibility,
// coinvariants, Charney subgroup predicates.
#pragma once

#include <string>
#include <vector>

#include "snf.hpp"

namespace mcg {

enum class Flavor { sp, sl };

// Block-order form matrix Ω_g = [[0,I],[−I,0]].
IntMat omega(int g);

bool int_mat_equal(const IntMat& a, const IntMat& b);
IntMat int_mat_add(const IntMat& a, const IntMat& b);
// Exact inverse of a matrix with det = ±1 (throws otherwise).
IntMat int_mat_inverse(const IntMat& m);
mpz_class int_mat_det(const IntMat& m);

// MᵀΩM = Ω exactly (modulus 0) or mod `modulus`.
bool is_symplectic(const IntMat& m, long modulus);
// AᵀΩ + ΩA ≡ 0 mod p / trace(A) ≡ 0 mod p.
bool is_sp_lie(const IntMat& a, long p);
bool is_sl_lie(const IntMat& a, long p);

// M = I + pA ⇒ A mod p (entries in [0,p)); checks the precondition and the
// flavor equation (symplectic / det 1 and the Lie identity).
IntMat psi(const IntMat& m, long p, Flavor flavor);

// Standard integer basis of 𝔰𝔭_{2g} (g(2g+1) elements) / 𝔰𝔩_n (n²−1).
std::vector<IntMat> sp_basis(int g);
std::vector<IntMat> sl_basis(int n);

// M ∈ Sp_{2g}(ℤ,p) (resp. SL_n(ℤ,p)) with ψ(M) = X, for X a standard basis
// element; diagonal basis elements use an embedded SL₂ of determinant 1.
IntMat lift_sp_generator(const IntMat& x, long p);
IntMat lift_sl_generator(const IntMat& x, long p);

IntMat elementary(int n, int i, int j);            // I + E_ij, 1-based, i ≠ j
IntMat elementary_pow(int n, int i, int j, long q);  // I + q·E_ij
IntMat commutator(const IntMat& m, const IntMat& n);      // M N M⁻¹ N⁻¹

// The e_{ij}^q normal generators of SL_n(ℤ,q).
std::vector<IntMat> bms_generators(int n, long q);

// Closure of the span of `seeds` (flattened n×n matrices over ℤ/p) under the
// conjugation action of the group generated by `group_gens` mod p; returns
// the dimension of the generated submodule.
long spin_submodule(const std::vector<IntMat>& seeds,
                         const std::vector<IntMat>& group_gens, int n, long p);

struct IrreducibilityReport {
  bool irreducible = false;
  long module_dim = 0;
  std::string witness;  // invariant-submodule description when reducible
};
// Conjugation action of Sp_{2g}(ℤ/p) on 𝔰𝔭_{2g}(ℤ/p), spun from every
// single basis seed and from the scalar matrix I.
IrreducibilityReport sp_irreducible(int g, long p);

// dim of M_Γ = d − rank{(g−1)·x} for the given action matrices (d×d) over
// ℚ (p = 0) or ℤ/p.
long coinvariants(const std::vector<IntMat>& action, int d, long p);

enum class CharneyWhich { G, Ghat, K, Khat };
bool charney_membership(const IntMat& m, CharneyWhich which, int n, long p);

}  // namespace mcg
