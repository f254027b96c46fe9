// surface-model: Σ_{g,1} as a marked free group — boundary word, mapping
// class certification, the Dehn twist catalog, bounding pairs, separating
// and boundary twists.
#pragma once

#include <string>
#include <vector>

#include "homology.hpp"
#include "words.hpp"

namespace mcg {

struct SurfaceContext {
  int genus = 0;
  Word delta;  // [s₁,s₂]⋯[s_{2g−1},s_{2g}], length 4g
};

SurfaceContext make_context(int g);
Word boundary_word(int g);

struct MappingClass {
  Automorphism aut;
  int genus = 0;
  std::string provenance;
};

bool is_mapping_class(const Automorphism& f, const SurfaceContext& ctx);

MappingClass mc_identity(const SurfaceContext& ctx);
MappingClass mc_compose(const MappingClass& f, const MappingClass& g);
MappingClass mc_inverse(const MappingClass& f);
SymplecticMatrix mc_abelianize(const MappingClass& f);

// Catalog curve ids:
//   a<i>, b<i>            1 ≤ i ≤ g    standard symplectic-pair curves
//   c<i>                  1 ≤ i < g    chain curve through handles i, i+1
//   p<h>                  1 ≤ h < g    bounding-pair partner of a<h+1>
//   s<h>                  1 ≤ h < g    separating curve cutting off genus h
//   d                                  the boundary curve
//   lanY1 wrap1 wrap3 cly1 clz1 clz2   (g ≥ 2) frozen relation curves
std::vector<std::string> catalog_ids(int g);

// Declared homology class of a catalog curve (interleaved coordinates).
HomVec curve_class(const SurfaceContext& ctx, const std::string& id);

// Right Dehn twist about the catalog curve; validated at construction
// (fixes δ, abelianization = transvection of the declared class).
MappingClass standard_twist(const SurfaceContext& ctx, const std::string& id);

// f ∘ t ∘ f⁻¹, recorded as the twist about the image curve.
MappingClass conjugated_twist(const MappingClass& f, const MappingClass& t);

// T_{p<h>} · T_{a<h+1>}⁻¹ — Torelli bounding pair map of cut-off genus h.
MappingClass bounding_pair(const SurfaceContext& ctx, int h);

MappingClass separating_twist(const SurfaceContext& ctx, int h);
// s_i ↦ δ s_i δ⁻¹ (the boundary Dehn twist, basepoint on the boundary).
MappingClass boundary_twist(const SurfaceContext& ctx);

// Disjointness of the core catalog curves (ids a/b/c/p/s/d), per the
// fixed adjacency rule; disjoint-pair twists must commute exactly.
bool catalog_curves_disjoint(const std::string& id1, const std::string& id2);

// Abelianizations of the generating twists a<i>, b<i>, c<i> (interleaved).
std::vector<Mat> twist_generator_matrices(const SurfaceContext& ctx);

// Catalog twist images generate Sp_{2g}(ℤ/p)? (desk scale; size-guarded)
bool mod_p_generates(int g, int p);

}  // namespace mcg
