// johnson: the class-2 nilpotent quotient Γ = π/γ₂(π), the Johnson
// homomorphism τ: I_{g,1} → ∧³H, and its mod-p version τ_p for odd p.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exterior.hpp"
#include "surface.hpp"

namespace mcg {

// Normal form (a, c) ∈ H × ∧²H with the product
// (a,c)·(a′,c′) = (a+a′, c+c′+κ(a,a′)), κ(a,a′) = Σ_{i<j} a_i a′_j e_i∧e_j.
struct NilpotentElement {
  int rank = 0;
  long long modulus = 0;  // 0 = Γ; odd prime p = Γ_p
  HomVec a;
  ExteriorElement c;  // degree 2
};

NilpotentElement nil_identity(int rank, long long modulus = 0);
NilpotentElement nil_mul(const NilpotentElement& x, const NilpotentElement& y);
NilpotentElement nil_inverse(const NilpotentElement& x);
bool nil_equal(const NilpotentElement& x, const NilpotentElement& y);

// κ as a degree-2 exterior element.
ExteriorElement kappa(const HomVec& a, const HomVec& b, long long modulus);

// Image of a word under π → Γ (m = 0) or Γ_p (m odd prime).
NilpotentElement project_nilpotent(const Word& w, int rank, long long m = 0);

// J_f: column i = c-part of the Γ-image of f(s_i)·s_i⁻¹.  Requires Torelli.
HomToWedge2 johnson_hom(const MappingClass& f);

// τ(f) = iota_solve(J_f) with the frozen calibration (+1).  Throws when J_f
// is outside iota's image (a convention bug, not a user error).
ExteriorElement johnson_tau(const MappingClass& f);

// Closed-form oracle: [x] ∧ (a₁∧b₁ + … + a_h∧b_h) in the supplied cut basis
// (pairs α₁,β₁,…,α_h,β_h as coordinate vectors in H).
ExteriorElement bp_expected(int g, int h, const HomVec& pair_class,
                            const std::vector<HomVec>& cut_basis);

struct ModPJohnson {
  ExteriorElement value;   // τ_p(f) ∈ ∧³H_p
  bool residual_zero = false;  // iota(value) ≡ J_f mod p?
};

// τ_p via Γ_p plus the fixed integral splitting S of iota (S·M = I over ℤ).
// Requires abelianize(f) ≡ I mod p, p odd prime.
ModPJohnson johnson_mod_p(const MappingClass& f, long long p);

// Deterministic surjectivity certificate at g = 3: conjugated bounding pair
// maps whose τ-values span ∧³ℤ⁶ with Smith normal form the identity.
// Each entry: (bounding pair cut-off genus h ∈ {1,2}, conjugator twist ids
// applied first-to-last, each "a<i>±"/"b<i>±"/"c<i>±").
using CertificateEntry = std::pair<int, std::vector<std::string>>;
const std::vector<CertificateEntry>& surjectivity_certificate();

// The mapping class h·B_h·h⁻¹ named by a certificate entry.
MappingClass certificate_element(const SurfaceContext& ctx, const CertificateEntry& e);

}  // namespace mcg
