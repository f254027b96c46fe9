// exterior-algebra: ∧^k of a rank-N lattice over ℤ or ℤ/m, wedge products,
// pushforward of the fundamental class, and the contraction iota with its
// exact integral inverse on the image.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace mcg {

// Coefficients keyed by strictly increasing 1-based index tuples.
struct ExteriorElement {
  int rank = 0;
  int degree = 0;
  long long modulus = 0;  // 0 = integers
  std::map<std::vector<int>, long long> terms;

  static ExteriorElement zero(int rank, int degree, long long modulus = 0);
  bool is_zero() const { return terms.empty(); }
};

bool operator==(const ExteriorElement& a, const ExteriorElement& b);

// Sort indices, track sign, drop repeated-index terms and zero coefficients.
ExteriorElement make_element(int rank, int degree, long long modulus,
                             const std::vector<std::pair<std::vector<int>, long long>>& raw);

ExteriorElement add(const ExteriorElement& a, const ExteriorElement& b);
ExteriorElement scale(const ExteriorElement& a, long long c);
ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v);
ExteriorElement reduce_mod(const ExteriorElement& a, long long m);

// Degree-1 element from a coordinate vector.
ExteriorElement vector_element(const std::vector<long long>& coords, long long modulus = 0);

// Σ_i φ(α_i) ∧ φ(β_i); images listed (φ(α₁), φ(β₁), …, φ(α_g), φ(β_g)).
ExteriorElement pushforward_fundamental(const std::vector<std::vector<long long>>& images,
                                        int target_rank);

// Functorial pushforward ∧^k(φ) along the linear map e_i ↦ images[i−1]
// (image vectors live in the target lattice, modulus taken from t).
ExteriorElement exterior_pushforward(const std::vector<std::vector<long long>>& images,
                                     const ExteriorElement& t);

// Symplectic pairing on the interleaved basis a₁,b₁,…  (1-based indices):
// i_a(e_{2k-1}, e_{2k}) = +1.
long long sympl_pairing(int i, int j);

// Linear map H → ∧²H given column-wise: column v (1-based generator index)
// is an ExteriorElement of degree 2.
struct HomToWedge2 {
  int rank = 0;
  long long modulus = 0;
  std::vector<ExteriorElement> columns;  // size rank
};

bool operator==(const HomToWedge2& a, const HomToWedge2& b);

// iota(x∧y∧z)(v) = i(x,v) y∧z + i(y,v) z∧x + i(z,v) x∧y, extended linearly.
HomToWedge2 iota(const ExteriorElement& t);

// Exact inversion of iota on its image.  ok=false (not an exception) when L
// is outside the image over ℤ (or over ℤ/m for m>0).
struct IotaSolveResult {
  bool ok = false;
  ExteriorElement value;
};
IotaSolveResult iota_solve(const HomToWedge2& L);

// Basis enumeration helpers (strictly increasing tuples).
std::vector<std::vector<int>> basis_tuples(int rank, int degree);

}  // namespace mcg
