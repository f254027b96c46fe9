#include "exterior.hpp"

#include <algorithm>
#include <stdexcept>

#include "snf.hpp"

namespace mcg {

namespace {

long long norm_coeff(long long c, long long modulus) {
  if (modulus == 0) return c;
  long long r = c % modulus;
  if (r < 0) r += modulus;
  return r;
}

void add_term(ExteriorElement& e, std::vector<int> idx, long long coeff) {
  // Sort the tuple, tracking the permutation sign; kill repeated indices.
  int sign = 1;
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    for (size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  for (int v : idx)
    if (v < 1 || v > e.rank) throw std::invalid_argument("exterior index out of range");
  long long c = norm_coeff(e.terms[idx] + sign * coeff, e.modulus);
  if (c == 0) e.terms.erase(idx);
  else e.terms[idx] = c;
}

}  // namespace

ExteriorElement ExteriorElement::zero(int rank, int degree, long long modulus) {
  ExteriorElement e;
  e.rank = rank;
  e.degree = degree;
  e.modulus = modulus;
  return e;
}

bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
  return a.rank == b.rank && a.degree == b.degree && a.modulus == b.modulus &&
         a.terms == b.terms;
}

ExteriorElement make_element(int rank, int degree, long long modulus,
                             const std::vector<std::pair<std::vector<int>, long long>>& raw) {
  ExteriorElement e = ExteriorElement::zero(rank, degree, modulus);
  for (const auto& [idx, coeff] : raw) {
    if (static_cast<int>(idx.size()) != degree)
      throw std::invalid_argument("make_element: tuple length != degree");
    add_term(e, idx, coeff);
  }
  return e;
}

ExteriorElement add(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.rank != b.rank || a.degree != b.degree || a.modulus != b.modulus)
    throw std::invalid_argument("add: incompatible exterior elements");
  ExteriorElement e = a;
  for (const auto& [idx, coeff] : b.terms) add_term(e, idx, coeff);
  return e;
}

ExteriorElement scale(const ExteriorElement& a, long long c) {
  ExteriorElement e = ExteriorElement::zero(a.rank, a.degree, a.modulus);
  for (const auto& [idx, coeff] : a.terms) add_term(e, idx, coeff * c);
  return e;
}

ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v) {
  if (u.rank != v.rank || u.modulus != v.modulus)
    throw std::invalid_argument("wedge: incompatible exterior elements");
  ExteriorElement e = ExteriorElement::zero(u.rank, u.degree + v.degree, u.modulus);
  for (const auto& [iu, cu] : u.terms)
    for (const auto& [iv, cv] : v.terms) {
      std::vector<int> idx = iu;
      idx.insert(idx.end(), iv.begin(), iv.end());
      add_term(e, idx, cu * cv);
    }
  return e;
}

ExteriorElement reduce_mod(const ExteriorElement& a, long long m) {
  ExteriorElement e = ExteriorElement::zero(a.rank, a.degree, m);
  for (const auto& [idx, coeff] : a.terms) add_term(e, idx, coeff);
  return e;
}

ExteriorElement vector_element(const std::vector<long long>& coords, long long modulus) {
  ExteriorElement e = ExteriorElement::zero(static_cast<int>(coords.size()), 1, modulus);
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) add_term(e, {static_cast<int>(i + 1)}, coords[i]);
  return e;
}

ExteriorElement pushforward_fundamental(const std::vector<std::vector<long long>>& images,
                                        int target_rank) {
  if (images.size() % 2 != 0)
    throw std::invalid_argument("pushforward_fundamental: odd number of images");
  ExteriorElement acc = ExteriorElement::zero(target_rank, 2, 0);
  for (size_t k = 0; k + 1 < images.size(); k += 2) {
    std::vector<long long> a = images[k], b = images[k + 1];
    a.resize(target_rank, 0);
    b.resize(target_rank, 0);
    acc = add(acc, wedge(vector_element(a), vector_element(b)));
  }
  return acc;
}

ExteriorElement exterior_pushforward(const std::vector<std::vector<long long>>& images,
                                     const ExteriorElement& t) {
  int target_rank = images.empty() ? t.rank : static_cast<int>(images[0].size());
  ExteriorElement acc = ExteriorElement::zero(target_rank, t.degree, t.modulus);
  for (const auto& [idx, coeff] : t.terms) {
    ExteriorElement prod = make_element(target_rank, 0, t.modulus, {{{}, 1}});
    for (int i : idx) prod = wedge(prod, vector_element(images.at(i - 1), t.modulus));
    acc = add(acc, scale(prod, coeff));
  }
  return acc;
}

long long sympl_pairing(int i, int j) {
  if (j == i + 1 && i % 2 == 1) return 1;
  if (i == j + 1 && j % 2 == 1) return -1;
  return 0;
}

bool operator==(const HomToWedge2& a, const HomToWedge2& b) {
  return a.rank == b.rank && a.modulus == b.modulus && a.columns == b.columns;
}

HomToWedge2 iota(const ExteriorElement& t) {
  if (t.degree != 3) throw std::invalid_argument("iota: degree-3 input required");
  HomToWedge2 L;
  L.rank = t.rank;
  L.modulus = t.modulus;
  L.columns.assign(t.rank, ExteriorElement::zero(t.rank, 2, t.modulus));
  for (const auto& [idx, coeff] : t.terms) {
    int x = idx[0], y = idx[1], z = idx[2];
    for (int v = 1; v <= t.rank; ++v) {
      ExteriorElement& col = L.columns[v - 1];
      if (long long p = sympl_pairing(x, v)) add_term(col, {y, z}, coeff * p);
      if (long long p = sympl_pairing(y, v)) add_term(col, {z, x}, coeff * p);
      if (long long p = sympl_pairing(z, v)) add_term(col, {x, y}, coeff * p);
    }
  }
  return L;
}

std::vector<std::vector<int>> basis_tuples(int rank, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Iterative enumeration of strictly increasing tuples.
  std::vector<int> idx(degree);
  if (degree == 0) {
    out.push_back({});
    return out;
  }
  if (degree > rank) return out;
  for (int i = 0; i < degree; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(idx);
    int k = degree - 1;
    while (k >= 0 && idx[k] == rank - (degree - 1 - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < degree; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

IotaSolveResult iota_solve(const HomToWedge2& L) {
  IotaSolveResult res;
  int n = L.rank;
  long long m = L.modulus;
  auto triples = basis_tuples(n, 3);
  auto pairs = basis_tuples(n, 2);
  std::map<std::vector<int>, size_t> pair_pos;
  for (size_t i = 0; i < pairs.size(); ++i) pair_pos[pairs[i]] = i;
  size_t rows = static_cast<size_t>(n) * pairs.size();

  auto flatten = [&](const HomToWedge2& h) {
    std::vector<mpz_class> vec(rows, 0);
    for (int v = 1; v <= n; ++v)
      for (const auto& [idx, coeff] : h.columns[v - 1].terms)
        vec[(v - 1) * pairs.size() + pair_pos.at(idx)] = static_cast<long>(coeff);
    return vec;
  };

  // The iota matrix and its SNF depend only on the rank; cache them.
  struct IotaCache {
    IntMat mat;
    SmithResult snf;
  };
  static std::map<int, IotaCache> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    IotaCache c;
    c.mat.assign(rows, std::vector<mpz_class>(triples.size(), 0));
    for (size_t col_i = 0; col_i < triples.size(); ++col_i) {
      ExteriorElement basis = make_element(n, 3, 0, {{triples[col_i], 1}});
      auto col = flatten(iota(basis));
      for (size_t r = 0; r < rows; ++r) c.mat[r][col_i] = col[r];
    }
    c.snf = smith_normal_form(c.mat);
    it = cache.emplace(n, std::move(c)).first;
  }
  std::vector<mpz_class> target = flatten(L);

  // Solve mat * t = target exactly via SNF: u*mat*v = s, so s*y = u*target
  // and t = v*y; over ℤ/m the diagonal equations are solved with gcd.
  const SmithResult& s = it->second.snf;
  size_t t_rank = s.diag.size();
  std::vector<mpz_class> c(rows, 0);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < rows; ++j) c[i] += s.u[i][j] * target[j];
  std::vector<mpz_class> y(triples.size(), 0);
  bool ok = true;
  for (size_t i = 0; i < rows && ok; ++i) {
    mpz_class d = i < t_rank ? s.s[i][i] : 0;
    if (i < triples.size() && d != 0) {
      if (m == 0) {
        if (c[i] % d != 0) ok = false;
        else y[i] = c[i] / d;
      } else {
        mpz_class g, inv, tmp, mm(static_cast<long>(m));
        mpz_gcdext(g.get_mpz_t(), inv.get_mpz_t(), tmp.get_mpz_t(), d.get_mpz_t(),
                   mm.get_mpz_t());
        if (c[i] % g != 0) ok = false;
        else y[i] = ((c[i] / g) * inv) % mm;
      }
    } else {
      // No pivot in this row: consistency requires c_i = 0 (mod m).
      if (m == 0 ? c[i] != 0 : c[i] % mpz_class(static_cast<long>(m)) != 0) ok = false;
    }
  }
  if (!ok) return res;
  std::vector<mpz_class> t(triples.size(), 0);
  for (size_t i = 0; i < triples.size(); ++i)
    for (size_t j = 0; j < triples.size(); ++j) t[i] += s.v[i][j] * y[j];

  ExteriorElement val = ExteriorElement::zero(n, 3, m);
  for (size_t i = 0; i < triples.size(); ++i) {
    mpz_class cc = t[i];
    if (m != 0) {
      mpz_class mm(static_cast<long>(m));
      cc = ((cc % mm) + mm) % mm;
    }
    if (!cc.fits_slong_p()) throw std::overflow_error("iota_solve: coefficient overflow");
    if (cc != 0) add_term(val, triples[i], cc.get_si());
  }
  // Independent verification that iota(value) reproduces L exactly.
  HomToWedge2 back = iota(val);
  HomToWedge2 want = L;
  if (m != 0) {
    for (auto& colv : want.columns) colv = reduce_mod(colv, m);
    for (auto& colv : want.columns) colv.modulus = m;
  }
  if (!(back == want)) return res;
  res.ok = true;
  res.value = val;
  return res;
}

}  // namespace mcg
