// Smith normal form over ℤ with unimodular transforms, exact (GMP integers).
#pragma once

#include <gmpxx.h>

#include <vector>

namespace mcg {

using IntMat = std::vector<std::vector<mpz_class>>;

IntMat int_mat_identity(int n);
IntMat int_mat_mul(const IntMat& a, const IntMat& b);

struct SmithResult {
  IntMat u;               // rows transform
  IntMat s;               // diagonalized matrix, u*a*v = s
  IntMat v;               // columns transform
  std::vector<mpz_class> diag;  // nonzero invariant factors (absolute values)
};

SmithResult smith_normal_form(const IntMat& a);

// Integer left inverse L with L*m = I (columns count square identity), or
// empty when the column lattice is not a direct summand (some invariant
// factor != 1).
IntMat left_inverse(const IntMat& m);

}  // namespace mcg
