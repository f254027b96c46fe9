#include "snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace mcg {

IntMat int_mat_identity(int n) {
  IntMat m(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  if (!a.empty() && a[0].size() != k) throw std::invalid_argument("int_mat_mul: shape");
  IntMat out(n, std::vector<mpz_class>(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

SmithResult smith_normal_form(const IntMat& input) {
  SmithResult res;
  IntMat a = input;
  size_t m = a.size(), n = m ? a[0].size() : 0;
  res.u = int_mat_identity(static_cast<int>(m));
  res.v = int_mat_identity(static_cast<int>(n));
  IntMat& u = res.u;
  IntMat& v = res.v;

  size_t t = 0;
  while (t < m && t < n) {
    // Pivot: smallest nonzero entry of the trailing block.
    size_t pi = 0, pj = 0;
    bool found = false;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (a[i][j] != 0) {
          if (!found || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0) {
            pi = i; pj = j; found = true;
          }
        }
    if (!found) break;
    std::swap(a[t], a[pi]);
    std::swap(u[t], u[pi]);
    for (size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);
    for (size_t i = 0; i < n; ++i) std::swap(v[i][t], v[i][pj]);

    bool again = false;
    for (size_t i = t + 1; i < m; ++i) {
      if (a[i][t] != 0) {
        mpz_class q = a[i][t] / a[t][t];
        for (size_t j = 0; j < n; ++j) a[i][j] -= q * a[t][j];
        for (size_t j = 0; j < m; ++j) u[i][j] -= q * u[t][j];
        if (a[i][t] != 0) again = true;
      }
    }
    for (size_t j = t + 1; j < n; ++j) {
      if (a[t][j] != 0) {
        mpz_class q = a[t][j] / a[t][t];
        for (size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][t];
        for (size_t i = 0; i < n; ++i) v[i][j] -= q * v[i][t];
        if (a[t][j] != 0) again = true;
      }
    }
    if (again) continue;
    if (a[t][t] < 0) {
      for (size_t i = 0; i < m; ++i) a[i][t] = -a[i][t];
      for (size_t i = 0; i < n; ++i) v[i][t] = -v[i][t];
    }
    ++t;
  }
  // Note: the diagonal is not sorted into a divisibility chain.  Every use
  // here only needs the multiset of elementary divisors up to units (rank,
  // "all ones", lattice index), which is invariant under any unimodular
  // diagonalization.
  res.s = a;
  for (size_t i = 0; i < t; ++i) res.diag.push_back(abs(a[i][i]));
  return res;
}

IntMat left_inverse(const IntMat& mat) {
  size_t m = mat.size(), n = m ? mat[0].size() : 0;
  SmithResult r = smith_normal_form(mat);
  if (r.diag.size() != n) return {};
  for (const auto& d : r.diag)
    if (d != 1) return {};
  // u*mat*v = [I;0]  =>  L = v * [I 0] * u  satisfies L*mat = I.
  IntMat l(n, std::vector<mpz_class>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < n; ++k) l[i][j] += r.v[i][k] * r.u[k][j];
  return l;
}

}  // namespace mcg
