#include "homology.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace mcg {

Mat mat_identity(int n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  if (!a.empty() && a[0].size() != k) throw std::invalid_argument("mat_mul: shape");
  Mat out(n, std::vector<long long>(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

Mat mat_transpose(const Mat& a) {
  size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  Mat out(m, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

Mat form_matrix(int g, BasisOrder order) {
  Mat j(2 * g, std::vector<long long>(2 * g, 0));
  if (order == BasisOrder::interleaved) {
    for (int i = 0; i < g; ++i) {
      j[2 * i][2 * i + 1] = 1;
      j[2 * i + 1][2 * i] = -1;
    }
  } else {
    for (int i = 0; i < g; ++i) {
      j[i][g + i] = 1;
      j[g + i][i] = -1;
    }
  }
  return j;
}

long long intersection(const HomVec& u, const HomVec& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw std::invalid_argument("intersection: rank mismatch");
  long long s = 0;
  for (size_t k = 0; k + 1 < u.size(); k += 2)
    s += u[k] * v[k + 1] - u[k + 1] * v[k];
  return s;
}

HomVec abelianize_word(const Word& w, int rank) {
  HomVec v(rank, 0);
  for (int letter : w) {
    int i = std::abs(letter);
    if (i < 1 || i > rank) throw std::invalid_argument("abelianize_word: letter range");
    v[i - 1] += letter > 0 ? 1 : -1;
  }
  return v;
}

SymplecticMatrix transvection(const HomVec& x) {
  int n = static_cast<int>(x.size());
  if (n % 2 != 0) throw std::invalid_argument("transvection: odd rank");
  SymplecticMatrix m;
  m.genus = n / 2;
  m.order = BasisOrder::interleaved;
  m.rows = mat_identity(n);
  for (int j = 0; j < n; ++j) {
    HomVec ej(n, 0);
    ej[j] = 1;
    long long c = intersection(x, ej);
    if (c == 0) continue;
    for (int i = 0; i < n; ++i) m.rows[i][j] += c * x[i];
  }
  return m;
}

bool is_symplectic_matrix(const SymplecticMatrix& m) {
  Mat j = form_matrix(m.genus, m.order);
  return mat_mul(mat_mul(mat_transpose(m.rows), j), m.rows) == j;
}

SymplecticMatrix abelianize(const Automorphism& f) {
  int n = f.rank();
  if (n % 2 != 0) throw std::invalid_argument("abelianize: odd rank");
  SymplecticMatrix m;
  m.genus = n / 2;
  m.order = BasisOrder::interleaved;
  m.rows.assign(n, std::vector<long long>(n, 0));
  for (int j = 1; j <= n; ++j) {
    HomVec col = abelianize_word(f.forward.image(j), n);
    for (int i = 0; i < n; ++i) m.rows[i][j - 1] = col[i];
  }
  if (!is_symplectic_matrix(m))
    throw std::logic_error("abelianize: result is not symplectic (broken construction)");
  return m;
}

SymplecticMatrix convert_order(const SymplecticMatrix& m, BasisOrder target) {
  if (m.order == target) return m;
  int g = m.genus, n = 2 * g;
  // perm[k] = interleaved slot feeding block slot k (0-based):
  // block (a₁..a_g, b₁..b_g) ← interleaved (a₁,b₁,…).
  std::vector<int> perm(n);
  for (int i = 0; i < g; ++i) {
    perm[i] = 2 * i;
    perm[g + i] = 2 * i + 1;
  }
  SymplecticMatrix out;
  out.genus = g;
  out.order = target;
  out.rows.assign(n, std::vector<long long>(n, 0));
  if (target == BasisOrder::block) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.rows[i][j] = m.rows[perm[i]][perm[j]];
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.rows[perm[i]][perm[j]] = m.rows[i][j];
  }
  return out;
}

bool congruence_check(const SymplecticMatrix& m, long long p) {
  if (p < 2) throw std::invalid_argument("congruence_check: p < 2");
  int n = static_cast<int>(m.rows.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long d = m.rows[i][j] - (i == j ? 1 : 0);
      if (d % p != 0) return false;
    }
  return true;
}

bool torelli_check(const SymplecticMatrix& m) {
  return m.rows == mat_identity(static_cast<int>(m.rows.size()));
}

namespace {

using Key = std::vector<int>;

Key mat_key(const Mat& m, int p) {
  Key k;
  k.reserve(m.size() * m.size());
  for (const auto& row : m)
    for (long long v : row) k.push_back(static_cast<int>(((v % p) + p) % p));
  return k;
}

Mat key_mat(const Key& k, int n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = k[i * n + j];
  return m;
}

}  // namespace

ModPGenerationReport mod_p_generation(const std::vector<Mat>& gens, int g, int p) {
  int n = 2 * g;
  // Exhaustive enumeration guard: p^(n²) matrices scanned.
  double count = 1;
  for (int i = 0; i < n * n; ++i) {
    count *= p;
    if (count > 2e6) throw std::invalid_argument("mod_p_generation: size guard exceeded");
  }
  Mat j = form_matrix(g, BasisOrder::interleaved);
  auto symplectic_mod_p = [&](const Mat& m) {
    Mat lhs = mat_mul(mat_mul(mat_transpose(m), j), m);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (((lhs[a][b] - j[a][b]) % p + p) % p != 0) return false;
    return true;
  };

  ModPGenerationReport rep;
  // Full order by enumeration.
  long long total = 1;
  for (int i = 0; i < n * n; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    Mat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        m[i][jj] = c % p;
        c /= p;
      }
    if (symplectic_mod_p(m)) ++rep.full_order;
  }

  // BFS closure of the generated subgroup.
  std::set<Key> seen;
  std::vector<Key> frontier;
  Key id = mat_key(mat_identity(n), p);
  seen.insert(id);
  frontier.push_back(id);
  std::vector<Key> gen_keys;
  for (const auto& gmat : gens) {
    Key k = mat_key(gmat, p);
    if (!symplectic_mod_p(key_mat(k, n)))
      throw std::invalid_argument("mod_p_generation: non-symplectic generator");
    gen_keys.push_back(k);
  }
  while (!frontier.empty()) {
    std::vector<Key> next;
    for (const auto& cur : frontier)
      for (const auto& gk : gen_keys) {
        Key prod = mat_key(mat_mul(key_mat(cur, n), key_mat(gk, n)), p);
        if (seen.insert(prod).second) next.push_back(prod);
      }
    frontier = std::move(next);
  }
  rep.closure_order = static_cast<long long>(seen.size());
  rep.generates = rep.closure_order == rep.full_order;
  return rep;
}

}  // namespace mcg
