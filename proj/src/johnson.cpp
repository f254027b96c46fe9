#include "johnson.hpp"

#include <stdexcept>

#include "snf.hpp"

namespace mcg {

namespace {

bool odd_prime(long long m) {
  if (m < 3 || m % 2 == 0) return false;
  for (long long d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

void check_modulus(long long m) {
  if (m != 0 && !odd_prime(m))
    throw std::invalid_argument("nilpotent quotient: modulus must be 0 or an odd prime");
}

}  // namespace

ExteriorElement kappa(const HomVec& a, const HomVec& b, long long modulus) {
  int n = static_cast<int>(a.size());
  std::vector<std::pair<std::vector<int>, long long>> raw;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = i + 1; j < n; ++j)
      if (b[j] != 0) raw.push_back({{i + 1, j + 1}, a[i] * b[j]});
  }
  return make_element(n, 2, modulus, raw);
}

NilpotentElement nil_identity(int rank, long long modulus) {
  check_modulus(modulus);
  NilpotentElement e;
  e.rank = rank;
  e.modulus = modulus;
  e.a.assign(rank, 0);
  e.c = ExteriorElement::zero(rank, 2, modulus);
  return e;
}

NilpotentElement nil_mul(const NilpotentElement& x, const NilpotentElement& y) {
  if (x.rank != y.rank || x.modulus != y.modulus)
    throw std::invalid_argument("nil_mul: incompatible elements");
  NilpotentElement r = nil_identity(x.rank, x.modulus);
  for (int i = 0; i < x.rank; ++i) {
    r.a[i] = x.a[i] + y.a[i];
    if (x.modulus != 0) r.a[i] = ((r.a[i] % x.modulus) + x.modulus) % x.modulus;
  }
  r.c = add(add(x.c, y.c), kappa(x.a, y.a, x.modulus));
  return r;
}

NilpotentElement nil_inverse(const NilpotentElement& x) {
  NilpotentElement r = nil_identity(x.rank, x.modulus);
  for (int i = 0; i < x.rank; ++i) {
    r.a[i] = -x.a[i];
    if (x.modulus != 0) r.a[i] = ((r.a[i] % x.modulus) + x.modulus) % x.modulus;
  }
  r.c = add(scale(x.c, -1), kappa(x.a, x.a, x.modulus));
  return r;
}

bool nil_equal(const NilpotentElement& x, const NilpotentElement& y) {
  if (x.rank != y.rank || x.modulus != y.modulus) return false;
  if (x.modulus == 0) return x.a == y.a && x.c == y.c;
  for (int i = 0; i < x.rank; ++i)
    if (((x.a[i] - y.a[i]) % x.modulus + x.modulus) % x.modulus != 0) return false;
  return x.c == y.c;  // coefficients already reduced into [0, p)
}

NilpotentElement project_nilpotent(const Word& w, int rank, long long m) {
  check_modulus(m);
  NilpotentElement r = nil_identity(rank, m);
  for (int letter : w) {
    int i = std::abs(letter);
    if (i < 1 || i > rank) throw std::invalid_argument("project_nilpotent: letter range");
    NilpotentElement gen = nil_identity(rank, m);
    gen.a[i - 1] = 1;
    r = nil_mul(r, letter > 0 ? gen : nil_inverse(gen));
  }
  return r;
}

HomToWedge2 johnson_hom(const MappingClass& f) {
  SymplecticMatrix m = mc_abelianize(f);
  if (!torelli_check(m))
    throw std::invalid_argument("johnson_hom: mapping class is not Torelli");
  int rank = 2 * f.genus;
  HomToWedge2 J;
  J.rank = rank;
  J.modulus = 0;
  for (int i = 1; i <= rank; ++i) {
    Word w = multiply(f.aut.forward.image(i), Word{-i});
    NilpotentElement e = project_nilpotent(w, rank, 0);
    J.columns.push_back(e.c);
  }
  return J;
}

ExteriorElement johnson_tau(const MappingClass& f) {
  // Frozen calibration: the iota convention below yields
  // τ(T_{p1}·T_{a2}⁻¹) = +a₁∧b₁∧a₂, so the global constant is +1.
  IotaSolveResult r = iota_solve(johnson_hom(f));
  if (!r.ok) throw std::logic_error("johnson_tau: J_f outside the image of iota");
  return r.value;
}

ExteriorElement bp_expected(int g, int h, const HomVec& pair_class,
                            const std::vector<HomVec>& cut_basis) {
  int rank = 2 * g;
  if (h < 1 || h >= g || static_cast<int>(cut_basis.size()) != 2 * h)
    throw std::invalid_argument("bp_expected: dimension mismatch");
  std::vector<std::vector<long long>> imgs;
  for (const auto& v : cut_basis) {
    if (static_cast<int>(v.size()) != rank)
      throw std::invalid_argument("bp_expected: dimension mismatch");
    imgs.push_back(v);
  }
  ExteriorElement omega = pushforward_fundamental(imgs, rank);
  return wedge(vector_element(std::vector<long long>(pair_class.begin(), pair_class.end())),
               omega);
}

ModPJohnson johnson_mod_p(const MappingClass& f, long long p) {
  if (!odd_prime(p)) throw std::invalid_argument("johnson_mod_p: p must be an odd prime");
  if (!congruence_check(mc_abelianize(f), p))
    throw std::invalid_argument("johnson_mod_p: mapping class is not level p");
  int rank = 2 * f.genus;

  // J_f over Γ_p.
  HomToWedge2 J;
  J.rank = rank;
  J.modulus = p;
  for (int i = 1; i <= rank; ++i) {
    Word w = multiply(f.aut.forward.image(i), Word{-i});
    NilpotentElement e = project_nilpotent(w, rank, p);
    // Level-p classes need not be Torelli; only the c-part enters J.
    J.columns.push_back(e.c);
  }

  // Fixed-for-all-time projection: an integral left inverse S of the iota
  // matrix M (possible since all invariant factors of M are 1), reduced
  // mod p.  τ_p = S·J; residual = M·τ_p − J mod p.
  auto pairs = basis_tuples(rank, 2);
  auto triples = basis_tuples(rank, 3);
  std::map<std::vector<int>, size_t> pair_pos;
  for (size_t i = 0; i < pairs.size(); ++i) pair_pos[pairs[i]] = i;
  size_t rows = static_cast<size_t>(rank) * pairs.size();
  auto flatten = [&](const HomToWedge2& h) {
    std::vector<mpz_class> vec(rows, 0);
    for (int v = 1; v <= rank; ++v)
      for (const auto& [idx, coeff] : h.columns[v - 1].terms)
        vec[(v - 1) * pairs.size() + pair_pos.at(idx)] = static_cast<long>(coeff);
    return vec;
  };
  struct Split {
    IntMat m, s;
  };
  static std::map<int, Split> cache;
  auto it = cache.find(rank);
  if (it == cache.end()) {
    Split sp;
    sp.m.assign(rows, std::vector<mpz_class>(triples.size(), 0));
    for (size_t c = 0; c < triples.size(); ++c) {
      ExteriorElement basis = make_element(rank, 3, 0, {{triples[c], 1}});
      auto col = flatten(iota(basis));
      for (size_t r = 0; r < rows; ++r) sp.m[r][c] = col[r];
    }
    sp.s = left_inverse(sp.m);
    if (sp.s.empty())
      throw std::logic_error("johnson_mod_p: iota does not split integrally at this rank");
    it = cache.emplace(rank, std::move(sp)).first;
  }
  const IntMat& M = it->second.m;
  const IntMat& S = it->second.s;
  std::vector<mpz_class> b = flatten(J);
  std::vector<mpz_class> t(triples.size(), 0);
  for (size_t i = 0; i < triples.size(); ++i) {
    for (size_t j = 0; j < rows; ++j) t[i] += S[i][j] * b[j];
    { mpz_class pp(static_cast<long>(p)); t[i] = ((t[i] % pp) + pp) % pp; }
  }
  ModPJohnson out;
  std::vector<std::pair<std::vector<int>, long long>> raw;
  for (size_t i = 0; i < triples.size(); ++i)
    if (t[i] != 0) raw.push_back({triples[i], t[i].get_si()});
  out.value = make_element(rank, 3, p, raw);
  out.residual_zero = true;
  for (size_t r = 0; r < rows && out.residual_zero; ++r) {
    mpz_class s = -b[r];
    for (size_t c = 0; c < triples.size(); ++c) s += M[r][c] * t[c];
    if (s % mpz_class(static_cast<long>(p)) != 0) out.residual_zero = false;
  }
  return out;
}

const std::vector<CertificateEntry>& surjectivity_certificate() {
  static const std::vector<CertificateEntry> cert = {
      {2, {"b3+", "b1-", "b2-", "c1-", "c2-"}},
      {1, {"c2+", "b2-", "a1+", "b1+", "b1-", "a3-", "b1-", "c2+", "a1+", "c2-", "b3+", "b2+", "c1+", "a3+", "b3-", "b3-"}},
      {2, {"c2-", "b1-", "c1-", "c2-", "c1+", "a3+", "c1-", "c2-", "a1+", "b2-", "a2+", "a1-", "b1-", "c1-", "c2-", "a2+", "c2-", "b2-"}},
      {1, {"b1-", "c2+", "c2-", "a3+", "c1+", "a3-", "c2-", "c1+", "c1-", "b2+", "a3-", "a3+", "a1+", "a1-", "a2+", "c2+", "c2-"}},
      {1, {"b2+", "a3+", "c2-", "c2+", "c2-", "c1-", "a1-", "a3-", "b3+"}},
      {2, {"b1-", "c2+", "a3+", "c2+", "a2-", "c1-", "c2-", "b1+", "a3+", "c2-", "b3-"}},
      {1, {"b2+", "c1-", "a2+", "c2+", "a1+"}},
      {1, {"c2-", "a2+", "b2-", "c2-", "a2+", "a3-", "b1+", "c1-", "a2-"}},
      {1, {"a2+", "a3-", "c1-", "c1+", "a2+", "b2+", "c1+", "a1+", "b1-", "c1+", "b1+", "a1-", "b3-", "b3-", "a1+", "a1+", "c2-", "b3+"}},
      {2, {"a3-", "c2+", "b3+", "b1-", "c2-", "c2+", "a2-", "a2+", "b2+", "c1-", "b3+", "c2+", "b2-", "b1+"}},
      {1, {"c1+", "a1-", "b2+", "a2-", "a1-", "a1-", "c2+", "b2+", "c2-", "a1+", "a2+", "b2+"}},
      {1, {"b3-", "b3+", "c2+", "a1-", "c1+", "b3+", "b2+", "c2+", "c1-", "b1-", "b3-", "a3+", "c1+", "a3-"}},
      {2, {"b3-", "c2+", "c2+", "c2-", "a3-", "b2+", "a2-", "c1-", "a2+"}},
      {1, {"b3-", "b1+", "b3-", "a3-", "b2+", "a2+", "b2-", "a2+", "b1-", "b3+", "c2-", "b1-", "b1+", "c1+", "a3+", "a3-", "b1-"}},
      {1, {"b1+", "c2-", "a3-", "a3+", "b2-", "a2-", "b3+", "c1-", "b3+", "b3+", "c2-", "c1+", "b3+", "a2-", "b2+", "c2+"}},
      {1, {"a2+", "b2+", "a3+", "c2-", "a2+", "b3+", "b3-", "c1+", "b2+", "a2+", "a2+", "a2+"}},
      {1, {"b1+", "b1-", "b3+", "a2+", "a3-", "c2-", "b2-", "b3+", "c2+", "b2-", "c1+", "b2-", "b3+", "c1-", "a1-"}},
      {1, {"b2-", "c2-", "a1-", "b3-", "b2-", "c1+", "c2+", "b1+", "b2-", "a1-", "a1+", "c1-"}},
      {1, {"a2+", "a2-", "a2+", "b2+", "a3+", "b1-", "c1+", "a3+", "c2-", "b3-", "b2+", "b2+", "a2-", "b3-", "c2-", "b1+"}},
      {1, {"b3-", "b3-", "a3-", "b2+", "c1-", "c2-", "a1-", "c2-", "b3+", "b2+", "b1+", "c1+", "a2-", "a3+", "a3-"}},
      {1, {"c1-", "b2-", "a2+", "a2-", "a1+", "c1+", "a3+"}},
      {2, {"b3+", "b2-", "c2+", "b2+", "a2-", "a3-"}},
      {1, {"b2+", "a2-", "b1+", "c2+", "a1-", "b2+", "c1-", "b1+", "b2+", "c2+", "b2+", "a1+", "b2-"}},
      {1, {"b2+", "c1-", "c2-", "b3+", "b2+", "c1-", "c2+", "b1+", "a2+", "b2-", "a3+", "a1-", "b1+"}},
  };
  return cert;
}

MappingClass certificate_element(const SurfaceContext& ctx, const CertificateEntry& e) {
  MappingClass h = mc_identity(ctx);
  for (const auto& name : e.second) {
    std::string id = name.substr(0, name.size() - 1);
    MappingClass t = standard_twist(ctx, id);
    if (name.back() == '-') t = mc_inverse(t);
    h = mc_compose(t, h);  // applied first-to-last
  }
  return conjugated_twist(h, bounding_pair(ctx, e.first));
}

}  // namespace mcg
