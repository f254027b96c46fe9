#include "congruence.hpp"

#include <stdexcept>

namespace mcg {

namespace {

mpz_class mod_p(const mpz_class& x, long p) {
  mpz_class r = x % p;
  if (r < 0) r += p;
  return r;
}

// Gauss–Jordan inverse of a matrix mod p (p prime); throws if singular.
IntMat mat_inverse_mod_p(const IntMat& m, long p) {
  int n = static_cast<int>(m.size());
  IntMat a = m, inv = int_mat_identity(n);
  for (auto& row : a)
    for (auto& x : row) x = mod_p(x, p);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) throw std::invalid_argument("mat_inverse_mod_p: singular");
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    mpz_class pinv;
    mpz_class pp(p);
    if (mpz_invert(pinv.get_mpz_t(), a[c][c].get_mpz_t(), pp.get_mpz_t()) == 0)
      throw std::invalid_argument("mat_inverse_mod_p: non-invertible pivot");
    for (int j = 0; j < n; ++j) {
      a[c][j] = mod_p(a[c][j] * pinv, p);
      inv[c][j] = mod_p(inv[c][j] * pinv, p);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpz_class f = a[r][c];
      for (int j = 0; j < n; ++j) {
        a[r][j] = mod_p(a[r][j] - f * a[c][j], p);
        inv[r][j] = mod_p(inv[r][j] - f * inv[c][j], p);
      }
    }
  }
  return inv;
}

std::vector<mpz_class> flatten(const IntMat& m, long p) {
  std::vector<mpz_class> v;
  for (const auto& row : m)
    for (const auto& x : row) v.push_back(p ? mod_p(x, p) : x);
  return v;
}

}  // namespace

IntMat omega(int g) {
  IntMat j(2 * g, std::vector<mpz_class>(2 * g, 0));
  for (int i = 0; i < g; ++i) {
    j[i][g + i] = 1;
    j[g + i][i] = -1;
  }
  return j;
}

bool int_mat_equal(const IntMat& a, const IntMat& b) { return a == b; }

IntMat int_mat_add(const IntMat& a, const IntMat& b) {
  IntMat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

mpz_class int_mat_det(const IntMat& m) {
  // Fraction-free Bareiss elimination.
  int n = static_cast<int>(m.size());
  IntMat a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) { piv = r; break; }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMat int_mat_inverse(const IntMat& m) {
  mpz_class d = int_mat_det(m);
  if (d != 1 && d != -1) throw std::invalid_argument("int_mat_inverse: det != ±1");
  int n = static_cast<int>(m.size());
  // Adjugate via cofactor determinants (matrices here are small, n ≤ 8).
  IntMat inv(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<mpz_class> row;
        for (int c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(row);
      }
      mpz_class cof = n == 1 ? mpz_class(1) : int_mat_det(minor);
      inv[i][j] = ((i + j) % 2 == 0 ? cof : -cof) * d;  // d = 1/det
    }
  return inv;
}

bool is_symplectic(const IntMat& m, long modulus) {
  int n = static_cast<int>(m.size());
  if (n % 2 != 0) return false;
  IntMat w = omega(n / 2);
  IntMat mt(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mt[i][j] = m[j][i];
  IntMat lhs = int_mat_mul(int_mat_mul(mt, w), m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpz_class d = lhs[i][j] - w[i][j];
      if (modulus == 0 ? d != 0 : d % modulus != 0) return false;
    }
  return true;
}

bool is_sp_lie(const IntMat& a, long p) {
  int n = static_cast<int>(a.size());
  IntMat w = omega(n / 2);
  IntMat at(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = a[j][i];
  IntMat lhs = int_mat_add(int_mat_mul(at, w), int_mat_mul(w, a));
  for (const auto& row : lhs)
    for (const auto& x : row)
      if (p == 0 ? x != 0 : x % p != 0) return false;
  return true;
}

bool is_sl_lie(const IntMat& a, long p) {
  mpz_class tr = 0;
  for (size_t i = 0; i < a.size(); ++i) tr += a[i][i];
  return p == 0 ? tr == 0 : tr % p == 0;
}

IntMat psi(const IntMat& m, long p, Flavor flavor) {
  int n = static_cast<int>(m.size());
  if (flavor == Flavor::sp) {
    if (!is_symplectic(m, 0)) throw std::invalid_argument("psi: not symplectic");
  } else {
    if (int_mat_det(m) != 1) throw std::invalid_argument("psi: det != 1");
  }
  IntMat a(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpz_class d = m[i][j] - (i == j ? 1 : 0);
      if (d % p != 0) throw std::invalid_argument("psi: M != I mod p");
      a[i][j] = mod_p(d / p, p);
    }
  if (flavor == Flavor::sp ? !is_sp_lie(a, p) : !is_sl_lie(a, p))
    throw std::logic_error("psi: image fails the Lie flavor equation");
  return a;
}

std::vector<IntMat> sp_basis(int g) {
  int n = 2 * g;
  std::vector<IntMat> out;
  auto zero = [&] { return IntMat(n, std::vector<mpz_class>(n, 0)); };
  // a-block E_ij with d-block −E_ji (gl_g part), including diagonals.
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      IntMat x = zero();
      x[i][j] = 1;
      x[g + j][g + i] = -1;
      out.push_back(x);
    }
  // b-block symmetric.
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      IntMat x = zero();
      x[i][g + j] = 1;
      x[j][g + i] = 1;
      if (i == j) x[i][g + j] = 1;  // E_ii alone
      out.push_back(x);
    }
  // c-block symmetric.
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      IntMat x = zero();
      x[g + i][j] = 1;
      x[g + j][i] = 1;
      if (i == j) x[g + i][j] = 1;
      out.push_back(x);
    }
  return out;
}

std::vector<IntMat> sl_basis(int n) {
  std::vector<IntMat> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      IntMat x(n, std::vector<mpz_class>(n, 0));
      x[i][j] = 1;
      out.push_back(x);
    }
  for (int i = 0; i + 1 < n; ++i) {
    IntMat x(n, std::vector<mpz_class>(n, 0));
    x[i][i] = 1;
    x[i + 1][i + 1] = -1;
    out.push_back(x);
  }
  return out;
}

namespace {

// det-1 matrix [[1+p, p²],[−p², 1−p+p²−p³]] embedded at coordinates (r, s):
// ≡ I mod p and ψ-image diag(+1 at r, −1 at s).
IntMat embedded_sl2(int n, int r, int s, long p) {
  IntMat m = int_mat_identity(n);
  mpz_class pp(p);
  m[r][r] = 1 + pp;
  m[r][s] = pp * pp;
  m[s][r] = -pp * pp;
  m[s][s] = 1 - pp + pp * pp - pp * pp * pp;
  return m;
}

bool equal_mod_p(const IntMat& a, const IntMat& b, long p) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if ((a[i][j] - b[i][j]) % p != 0) return false;
  return true;
}

}  // namespace

IntMat lift_sp_generator(const IntMat& x, long p) {
  int n = static_cast<int>(x.size());
  int g = n / 2;
  // Diagonal gl-part basis elements need the embedded SL₂ trick.
  for (int i = 0; i < g; ++i) {
    IntMat diag(n, std::vector<mpz_class>(n, 0));
    diag[i][i] = 1;
    diag[g + i][g + i] = -1;
    if (equal_mod_p(x, diag, p)) return embedded_sl2(n, i, g + i, p);
  }
  for (const auto& b : sp_basis(g)) {
    if (!equal_mod_p(x, b, p)) continue;
    IntMat m = int_mat_identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m[r][c] += p * b[r][c];
    if (!is_symplectic(m, 0))
      throw std::logic_error("lift_sp_generator: naive lift not symplectic");
    return m;
  }
  throw std::invalid_argument("lift_sp_generator: not a standard basis element");
}

IntMat lift_sl_generator(const IntMat& x, long p) {
  int n = static_cast<int>(x.size());
  for (int i = 0; i + 1 < n; ++i) {
    IntMat h(n, std::vector<mpz_class>(n, 0));
    h[i][i] = 1;
    h[i + 1][i + 1] = -1;
    if (equal_mod_p(x, h, p)) return embedded_sl2(n, i, i + 1, p);
  }
  for (const auto& b : sl_basis(n)) {
    if (!equal_mod_p(x, b, p)) continue;
    IntMat m = int_mat_identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m[r][c] += p * b[r][c];
    if (int_mat_det(m) != 1)
      throw std::logic_error("lift_sl_generator: naive lift has det != 1");
    return m;
  }
  throw std::invalid_argument("lift_sl_generator: not a standard basis element");
}

IntMat elementary(int n, int i, int j) { return elementary_pow(n, i, j, 1); }

IntMat elementary_pow(int n, int i, int j, long q) {
  if (i == j) throw std::invalid_argument("elementary: i == j");
  if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("elementary: index");
  IntMat m = int_mat_identity(n);
  m[i - 1][j - 1] = q;
  return m;
}

IntMat commutator(const IntMat& m, const IntMat& n) {
  return int_mat_mul(int_mat_mul(m, n), int_mat_mul(int_mat_inverse(m), int_mat_inverse(n)));
}

std::vector<IntMat> bms_generators(int n, long q) {
  std::vector<IntMat> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back(elementary_pow(n, i, j, q));
  return out;
}

long spin_submodule(const std::vector<IntMat>& seeds,
                         const std::vector<IntMat>& group_gens, int n, long p) {
  // Row-echelon basis over ℤ/p of the flattened n×n matrices.
  std::vector<std::vector<mpz_class>> basis;  // echelonized rows
  std::vector<int> pivots;
  auto insert = [&](std::vector<mpz_class> v) {
    for (size_t k = 0; k < basis.size(); ++k) {
      if (v[pivots[k]] != 0) {
        mpz_class f = mod_p(v[pivots[k]], p);
        for (size_t j = 0; j < v.size(); ++j) v[j] = mod_p(v[j] - f * basis[k][j], p);
      }
    }
    for (size_t j = 0; j < v.size(); ++j) v[j] = mod_p(v[j], p);
    int piv = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) { piv = static_cast<int>(j); break; }
    if (piv < 0) return false;
    mpz_class pinv, pp(p);
    mpz_invert(pinv.get_mpz_t(), v[piv].get_mpz_t(), pp.get_mpz_t());
    for (auto& x : v) x = mod_p(x * pinv, p);
    basis.push_back(v);
    pivots.push_back(piv);
    return true;
  };
  std::vector<IntMat> frontier;
  for (const auto& s : seeds)
    if (insert(flatten(s, p))) frontier.push_back(s);
  std::vector<std::pair<IntMat, IntMat>> actions;  // (h, h⁻¹) mod p
  for (const auto& h : group_gens) {
    IntMat hm = h;
    for (auto& row : hm)
      for (auto& x : row) x = mod_p(x, p);
    actions.push_back({hm, mat_inverse_mod_p(hm, p)});
  }
  while (!frontier.empty()) {
    std::vector<IntMat> next;
    for (const auto& x : frontier)
      for (const auto& [h, hi] : actions) {
        IntMat y = int_mat_mul(int_mat_mul(h, x), hi);
        for (auto& row : y)
          for (auto& v : row) v = mod_p(v, p);
        if (insert(flatten(y, p))) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return static_cast<long>(basis.size());
}

IrreducibilityReport sp_irreducible(int g, long p) {
  if (g > 2 || p > 7) throw std::invalid_argument("sp_irreducible: size guard");
  int n = 2 * g;
  IrreducibilityReport rep;
  rep.module_dim = static_cast<long>(g) * (2 * g + 1);
  // Conjugation action generators: symplectic transvections that generate
  // Sp_{2g}(ℤ/p) (the standard/chain transvection family, block order).
  std::vector<IntMat> gens;
  {
    // Transvections T_x: v ↦ v + ⟨x,v⟩x for x over a spanning curve family
    // a_i, b_i, a_i + a_{i+1}, with inverses.
    auto transv = [&](const std::vector<long>& x, int sign) {
      IntMat w = omega(g);
      IntMat m = int_mat_identity(n);
      for (int col = 0; col < n; ++col) {
        mpz_class c = 0;
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s)
            if (w[r][s] != 0) c += mpz_class(x[r]) * w[r][s] * (s == col ? 1 : 0);
        for (int r = 0; r < n; ++r) m[r][col] += sign * c * x[r];
      }
      return m;
    };
    std::vector<std::vector<long>> curves;
    for (int i = 0; i < g; ++i) {
      std::vector<long> a(n, 0), b(n, 0);
      a[i] = 1;
      b[g + i] = 1;
      curves.push_back(a);
      curves.push_back(b);
    }
    for (int i = 0; i + 1 < g; ++i) {
      std::vector<long> c(n, 0);
      c[i] = 1;
      c[i + 1] = 1;
      curves.push_back(c);
    }
    for (const auto& x : curves) {
      gens.push_back(transv(x, 1));
      gens.push_back(transv(x, -1));
    }
  }
  rep.irreducible = true;
  // Scalar seed I — lies inside 𝔰𝔭 only when 2Ω ≡ 0, i.e. p = 2, where it
  // spans the invariant line.
  if (is_sp_lie(int_mat_identity(n), p) &&
      spin_submodule({int_mat_identity(n)}, gens, n, p) < rep.module_dim) {
    rep.irreducible = false;
    rep.witness = "scalar matrix I spans a proper invariant submodule";
    return rep;
  }
  for (const auto& b : sp_basis(g)) {
    long d = spin_submodule({b}, gens, n, p);
    if (d < rep.module_dim) {
      rep.irreducible = false;
      rep.witness = "basis seed spins to dimension " + std::to_string(d);
      return rep;
    }
  }
  return rep;
}

long coinvariants(const std::vector<IntMat>& action, int d, long p) {
  // Stack rows (g − I)·e_k for every generator g and basis vector e_k.
  IntMat rows;
  for (const auto& gmat : action) {
    for (int k = 0; k < d; ++k) {
      std::vector<mpz_class> r(d, 0);
      for (int i = 0; i < d; ++i) r[i] = gmat[i][k] - (i == k ? 1 : 0);
      rows.push_back(r);
    }
  }
  if (rows.empty()) return d;
  long rank;
  if (p == 0) {
    rank = static_cast<long>(smith_normal_form(rows).diag.size());
  } else {
    // Gaussian elimination mod p.
    std::vector<std::vector<mpz_class>> a = rows;
    for (auto& row : a)
      for (auto& x : row) x = mod_p(x, p);
    int r0 = 0;
    for (int c = 0; c < d && r0 < static_cast<int>(a.size()); ++c) {
      int piv = -1;
      for (int r = r0; r < static_cast<int>(a.size()); ++r)
        if (a[r][c] != 0) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(a[r0], a[piv]);
      mpz_class pinv, pp(p);
      mpz_invert(pinv.get_mpz_t(), a[r0][c].get_mpz_t(), pp.get_mpz_t());
      for (int j = 0; j < d; ++j) a[r0][j] = mod_p(a[r0][j] * pinv, p);
      for (int r = 0; r < static_cast<int>(a.size()); ++r) {
        if (r == r0 || a[r][c] == 0) continue;
        mpz_class f = a[r][c];
        for (int j = 0; j < d; ++j) a[r][j] = mod_p(a[r][j] - f * a[r0][j], p);
      }
      ++r0;
    }
    rank = r0;
  }
  return d - rank;
}

bool charney_membership(const IntMat& m, CharneyWhich which, int n, long p) {
  if (static_cast<int>(m.size()) != n) throw std::invalid_argument("charney: size");
  if (int_mat_det(m) != 1) return false;
  // First column must be (1, 0, …, 0)ᵀ.
  if (m[0][0] != 1) return false;
  for (int i = 1; i < n; ++i)
    if (m[i][0] != 0) return false;
  bool block_identity = which == CharneyWhich::K || which == CharneyWhich::Khat;
  bool tail_in_p = which == CharneyWhich::G || which == CharneyWhich::K;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      mpz_class d = m[i][j] - (i == j ? 1 : 0);
      if (block_identity ? d != 0 : d % p != 0) return false;
    }
  if (tail_in_p)
    for (int j = 1; j < n; ++j)
      if (m[0][j] % p != 0) return false;
  return true;
}

}  // namespace mcg
