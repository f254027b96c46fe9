// homology-symplectic: H₁(Σ_{g,1};ℤ), intersection form, transvections,
// abelianization of automorphisms, congruence/Torelli membership, and the
// desk-scale mod-p generation check.
#pragma once

#include <vector>

#include "words.hpp"

namespace mcg {

// Interleaved basis (a₁, b₁, …, a_g, b_g): a_i = [s_{2i−1}], b_i = [s_{2i}],
// so basis slot k (1-based) is the class of generator s_k.
using HomVec = std::vector<long long>;
using Mat = std::vector<std::vector<long long>>;

enum class BasisOrder { interleaved, block };

struct SymplecticMatrix {
  int genus = 0;
  BasisOrder order = BasisOrder::interleaved;
  Mat rows;
};

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);

// Form matrix J in the requested order; block order is Ω_g = [[0,I],[−I,0]].
Mat form_matrix(int g, BasisOrder order);

// i_a(u, v) with i_a(a_i, b_i) = +1, interleaved coordinates.
long long intersection(const HomVec& u, const HomVec& v);

// Exponent-sum vector of a word (interleaved coordinates).
HomVec abelianize_word(const Word& w, int rank);

// Matrix of v ↦ v + i_a(x, v)·x, interleaved order.
SymplecticMatrix transvection(const HomVec& x);

// Column i = class of forward image of s_i.  Throws on a non-symplectic
// result (internal inconsistency in the construction that produced f).
SymplecticMatrix abelianize(const Automorphism& f);

bool is_symplectic_matrix(const SymplecticMatrix& m);

// Conjugate by the interleaved↔block basis permutation (involutive).
SymplecticMatrix convert_order(const SymplecticMatrix& m, BasisOrder target);

// M ≡ I mod p (p ≥ 2 required) / M = I.
bool congruence_check(const SymplecticMatrix& m, long long p);
bool torelli_check(const SymplecticMatrix& m);

// BFS closure of the subgroup of Sp_{2g}(ℤ/p) generated by `gens` (entries
// reduced mod p), compared against the order obtained by exhaustively
// enumerating all symplectic matrices over ℤ/p.  Size guards throw.
struct ModPGenerationReport {
  long long closure_order = 0;
  long long full_order = 0;
  bool generates = false;
};
ModPGenerationReport mod_p_generation(const std::vector<Mat>& gens, int g, int p);

}  // namespace mcg
