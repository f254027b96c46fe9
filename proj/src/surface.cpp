#include "surface.hpp"

#include <map>
#include <stdexcept>

namespace mcg {

namespace {

// Frozen relation-curve twists, derived once from an explicit disk-with-bands
// model of Σ_{2,1} and validated against the invariant suite (δ fixed,
// transvection abelianization, forward∘backward = id).  Supported on bands
// 1–4 and stable under genus increase (identity on s_j, j > 4).
struct FrozenCurve {
  const char* id;
  std::vector<int> curve_word;       // reduced word of the curve
  std::vector<long long> hom_class;  // first four interleaved coordinates
  std::vector<std::vector<int>> fwd; // images of s_1..s_4
  std::vector<std::vector<int>> bwd;
};

const std::vector<FrozenCurve>& frozen_curves() {
  static const std::vector<FrozenCurve> data = {
      {"lanY1", {2, -1, -2, 3, 4, -3, -4, -3}, {-1, 0, -1, 0},
       {{1}, {3, 4, 3, -4, -3, 2, 1}, {3}, {4, 3, -4, -3, 2, 1, -2, 3, 4}},
       {{1}, {2, -1, -2, 3, 4, -3, -4, -3, 2}, {3}, {-3, 2, -1, -2, 3, 4, -3}}},
      {"wrap1", {4, 3, -4, -3, 2, 1, -2}, {1, 0, 0, 0},
       {{1}, {4, 3, -4, -3, 2, 1},
        {4, 3, -4, -3, 2, 1, -2, 3, 2, -1, -2, 3, 4, -3, -4},
        {4, 3, -4, -3, 2, 1, -2, 4, 2, -1, -2, 3, 4, -3, -4}},
       {{1}, {2, -1, -2, 3, 4, -3, -4, 2},
        {2, -1, -2, 3, 4, -3, -4, 3, 4, 3, -4, -3, 2, 1, -2},
        {2, -1, -2, 3, 4, -3, 4, 3, -4, -3, 2, 1, -2}}},
      {"wrap3", {4, 3, -4, -3, 2, 1, -2, -1, 3}, {0, 0, 1, 0},
       {{3, 4, 3, -4, -3, 2, 1, -2, 1, 2, -1, -2, 3, 4, -3, -4, -3},
        {3, 4, 3, -4, -3, 2, 1, -2, -1, 2, 1, 2, -1, -2, 3, 4, -3, -4, -3},
        {3}, {4, 3, -4, -3, 2, 1, -2, -1, 3, 4}},
       {{1, 2, -1, -2, 3, 4, -3, -4, -3, 1, 3, 4, 3, -4, -3, 2, 1, -2, -1},
        {1, 2, -1, -2, 3, 4, -3, -4, -3, 2, 3, 4, 3, -4, -3, 2, 1, -2, -1},
        {3}, {-3, 1, 2, -1, -2, 3, 4, -3}}},
      {"cly1", {1, 2, -1, -2, 3, 4, -3, -4, 2}, {0, 1, 0, 0},
       {{-2, 4, 3, -4, -3, 2, 1, -2}, {2},
        {4, 3, -4, -3, 2, 1, -2, -1, -2, 3, 2, 1, 2, -1, -2, 3, 4, -3, -4},
        {4, 3, -4, -3, 2, 1, -2, -1, -2, 4, 2, 1, 2, -1, -2, 3, 4, -3, -4}},
       {{1, 2, -1, -2, 3, 4, -3, -4, 2, 1}, {2},
        {2, 1, 2, -1, -2, 3, 4, -3, -4, 3, 4, 3, -4, -3, 2, 1, -2, -1, -2},
        {2, 1, 2, -1, -2, 3, 4, -3, 4, 3, -4, -3, 2, 1, -2, -1, -2}}},
      {"clz1", {1, 2}, {1, 1, 0, 0},
       {{-2}, {2, 1, 2}, {3}, {4}},
       {{1, 2, 1}, {-1}, {3}, {4}}},
      {"clz2", {4, 3, -4, -3, 2, 1}, {1, 1, 0, 0},
       {{-2, 3, 4, -3, -4}, {4, 3, -4, -3, 2, 1, 2},
        {4, 3, -4, -3, 2, 1, 3, -1, -2, 3, 4, -3, -4},
        {4, 3, -4, -3, 2, 1, 4, -1, -2, 3, 4, -3, -4}},
       {{1, 4, 3, -4, -3, 2, 1}, {-1, -2, 3, 4, -3, -4, 2},
        {-1, -2, 3, 4, -3, -4, 3, 4, 3, -4, -3, 2, 1},
        {-1, -2, 3, 4, -3, 4, 3, -4, -3, 2, 1}}},
  };
  return data;
}

// δ-prefix D_h = [s₁,s₂]⋯[s_{2h−1},s_{2h}].
Word d_word(int h, int rank) {
  std::vector<int> raw;
  for (int i = 1; i <= h; ++i) {
    int a = 2 * i - 1, b = 2 * i;
    raw.insert(raw.end(), {a, b, -a, -b});
  }
  return reduce(raw, rank);
}

Word conj(const Word& c, const Word& w) {  // c w c⁻¹
  return multiply(multiply(c, w), invert(c));
}

struct TwistData {
  Endomorphism fwd, bwd;
  HomVec cls;
};

TwistData build_twist(const SurfaceContext& ctx, const std::string& id) {
  int g = ctx.genus, rank = 2 * g;
  TwistData t;
  t.fwd = Endomorphism::identity(rank);
  t.bwd = Endomorphism::identity(rank);
  t.cls.assign(rank, 0);
  auto set = [&](Endomorphism& e, int i, std::vector<int> w) {
    e.images[i - 1] = reduce(w, rank);
  };
  for (const auto& fc : frozen_curves()) {
    if (id == fc.id) {
      if (g < 2) throw std::invalid_argument("standard_twist: curve " + id + " needs g >= 2");
      for (int j = 1; j <= 4; ++j) {
        set(t.fwd, j, fc.fwd[j - 1]);
        set(t.bwd, j, fc.bwd[j - 1]);
      }
      for (int k = 0; k < 4; ++k) t.cls[k] = fc.hom_class[k];
      return t;
    }
  }
  char kind = id[0];
  int idx = id.size() > 1 ? std::stoi(id.substr(1)) : 0;
  if (kind == 'a' && id.size() > 1 && idx >= 1 && idx <= g) {
    int u = 2 * idx - 1, v = 2 * idx;
    set(t.fwd, v, {v, u});
    set(t.bwd, v, {v, -u});
    t.cls[u - 1] = 1;
  } else if (kind == 'b' && idx >= 1 && idx <= g) {
    int u = 2 * idx - 1, v = 2 * idx;
    set(t.fwd, u, {u, -v});
    set(t.bwd, u, {u, v});
    t.cls[v - 1] = 1;
  } else if (kind == 'c' && idx >= 1 && idx < g) {
    int u = 2 * idx - 1, v = 2 * idx + 1;
    set(t.fwd, u, {-v, u, v});
    set(t.fwd, u + 1, {-v, -u, v, u, u + 1, u, v});
    set(t.fwd, v, {-v, -u, v, u, v});
    set(t.fwd, v + 1, {v + 1, u, v});
    set(t.bwd, u, {u, v, u, -v, -u});
    set(t.bwd, u + 1, {u, v, -u, -v, u + 1, -v, -u});
    set(t.bwd, v, {u, v, -u});
    set(t.bwd, v + 1, {v + 1, -v, -u});
    t.cls[u - 1] = 1;
    t.cls[v - 1] = 1;
  } else if (kind == 'p' && idx >= 1 && idx < g) {
    Word w = multiply(d_word(idx, rank), Word{2 * idx + 1});
    Word wi = invert(w);
    for (int j = 1; j <= 2 * idx + 1; ++j) {
      t.fwd.images[j - 1] = conj(wi, Word{j});
      t.bwd.images[j - 1] = conj(w, Word{j});
    }
    t.fwd.images[2 * idx + 1] = multiply(Word{2 * idx + 2}, w);
    t.bwd.images[2 * idx + 1] = multiply(Word{2 * idx + 2}, wi);
    t.cls[2 * idx] = 1;  // homologous to a_{idx+1}
  } else if (kind == 's' && id.size() > 1 && idx >= 1 && idx < g) {
    Word d = d_word(idx, rank);
    for (int j = 1; j <= 2 * idx; ++j) {
      t.fwd.images[j - 1] = conj(invert(d), Word{j});
      t.bwd.images[j - 1] = conj(d, Word{j});
    }
  } else if (id == "d") {
    for (int j = 1; j <= rank; ++j) {
      t.fwd.images[j - 1] = conj(ctx.delta, Word{j});
      t.bwd.images[j - 1] = conj(invert(ctx.delta), Word{j});
    }
  } else {
    throw std::invalid_argument("standard_twist: unknown catalog id " + id);
  }
  return t;
}

}  // namespace

Word boundary_word(int g) {
  if (g < 1) throw std::invalid_argument("boundary_word: g < 1");
  return d_word(g, 2 * g);
}

SurfaceContext make_context(int g) {
  SurfaceContext ctx;
  ctx.genus = g;
  ctx.delta = boundary_word(g);
  return ctx;
}

bool is_mapping_class(const Automorphism& f, const SurfaceContext& ctx) {
  if (f.rank() != 2 * ctx.genus) throw std::invalid_argument("is_mapping_class: rank");
  return apply(f.forward, ctx.delta) == ctx.delta;
}

MappingClass mc_identity(const SurfaceContext& ctx) {
  return MappingClass{Automorphism::identity(2 * ctx.genus), ctx.genus, "1"};
}

MappingClass mc_compose(const MappingClass& f, const MappingClass& g) {
  if (f.genus != g.genus) throw std::invalid_argument("mc_compose: genus mismatch");
  return MappingClass{compose(f.aut, g.aut), f.genus, f.provenance + " * " + g.provenance};
}

MappingClass mc_inverse(const MappingClass& f) {
  return MappingClass{f.aut.inverse(), f.genus, "(" + f.provenance + ")^-1"};
}

SymplecticMatrix mc_abelianize(const MappingClass& f) { return abelianize(f.aut); }

std::vector<std::string> catalog_ids(int g) {
  std::vector<std::string> ids;
  for (int i = 1; i <= g; ++i) {
    ids.push_back("a" + std::to_string(i));
    ids.push_back("b" + std::to_string(i));
  }
  for (int i = 1; i < g; ++i) ids.push_back("c" + std::to_string(i));
  for (int i = 1; i < g; ++i) ids.push_back("p" + std::to_string(i));
  for (int i = 1; i < g; ++i) ids.push_back("s" + std::to_string(i));
  ids.push_back("d");
  if (g >= 2)
    for (const auto& fc : frozen_curves()) ids.push_back(fc.id);
  return ids;
}

HomVec curve_class(const SurfaceContext& ctx, const std::string& id) {
  return build_twist(ctx, id).cls;
}

MappingClass standard_twist(const SurfaceContext& ctx, const std::string& id) {
  TwistData t = build_twist(ctx, id);
  MappingClass mc{Automorphism{t.fwd, t.bwd}, ctx.genus, "T" + id};
  check_automorphism(mc.aut);
  if (!is_mapping_class(mc.aut, ctx))
    throw std::logic_error("standard_twist: " + id + " does not fix delta");
  SymplecticMatrix m = abelianize(mc.aut);
  if (m.rows != transvection(t.cls).rows)
    throw std::logic_error("standard_twist: " + id + " abelianization != transvection");
  return mc;
}

MappingClass conjugated_twist(const MappingClass& f, const MappingClass& t) {
  MappingClass out = mc_compose(mc_compose(f, t), mc_inverse(f));
  out.provenance = "(" + f.provenance + ")(" + t.provenance + ")(" + f.provenance + ")^-1";
  return out;
}

MappingClass bounding_pair(const SurfaceContext& ctx, int h) {
  if (h < 1 || h >= ctx.genus) throw std::invalid_argument("bounding_pair: h out of range");
  MappingClass bp = mc_compose(standard_twist(ctx, "p" + std::to_string(h)),
                               mc_inverse(standard_twist(ctx, "a" + std::to_string(h + 1))));
  if (!torelli_check(mc_abelianize(bp)))
    throw std::logic_error("bounding_pair: not Torelli");
  return bp;
}

MappingClass separating_twist(const SurfaceContext& ctx, int h) {
  if (h < 1 || h >= ctx.genus) throw std::invalid_argument("separating_twist: h out of range");
  return standard_twist(ctx, "s" + std::to_string(h));
}

MappingClass boundary_twist(const SurfaceContext& ctx) {
  return standard_twist(ctx, "d");
}

bool catalog_curves_disjoint(const std::string& id1, const std::string& id2) {
  if (id1 == id2) return false;  // a curve is not disjoint from itself
  char k1 = id1[0], k2 = id2[0];
  if (id1 == "d" || id2 == "d") return true;  // boundary-parallel, disjoint from all
  auto core = [](const std::string& id) {
    if (id.size() < 2 || std::string("abcps").find(id[0]) == std::string::npos) return false;
    for (size_t i = 1; i < id.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
  };
  if (!core(id1) || !core(id2))
    throw std::invalid_argument("catalog_curves_disjoint: non-core catalog id");
  int i1 = std::stoi(id1.substr(1)), i2 = std::stoi(id2.substr(1));
  auto adjacent = [](char ka, int ia, char kb, int ib) {
    if (ka == 'a' && kb == 'b') return ia == ib;
    if (ka == 'b' && kb == 'c') return ib == ia || ib == ia - 1;
    if (ka == 'b' && kb == 'p') return ia == ib + 1;
    if (ka == 'c' && kb == 'c') return ia == ib + 1 || ib == ia + 1;
    if (ka == 'c' && kb == 'p') return ia == ib + 1;
    if (ka == 'c' && kb == 's') return ia == ib;
    return false;
  };
  return !(adjacent(k1, i1, k2, i2) || adjacent(k2, i2, k1, i1));
}

std::vector<Mat> twist_generator_matrices(const SurfaceContext& ctx) {
  std::vector<Mat> out;
  for (int i = 1; i <= ctx.genus; ++i) {
    out.push_back(mc_abelianize(standard_twist(ctx, "a" + std::to_string(i))).rows);
    out.push_back(mc_abelianize(standard_twist(ctx, "b" + std::to_string(i))).rows);
  }
  for (int i = 1; i < ctx.genus; ++i)
    out.push_back(mc_abelianize(standard_twist(ctx, "c" + std::to_string(i))).rows);
  // Inverse transvections too, so BFS closure needs no inverse bookkeeping.
  size_t n = out.size();
  for (size_t k = 0; k < n; ++k) {
    SymplecticMatrix m{ctx.genus, BasisOrder::interleaved, out[k]};
    // transvection inverses are transvections of the same curve, opposite sign:
    Mat inv = mat_identity(2 * ctx.genus);
    for (int i = 0; i < 2 * ctx.genus; ++i)
      for (int j = 0; j < 2 * ctx.genus; ++j)
        inv[i][j] = 2 * (i == j ? 1 : 0) - out[k][i][j];
    out.push_back(inv);
  }
  return out;
}

bool mod_p_generates(int g, int p) {
  SurfaceContext ctx = make_context(g);
  return mod_p_generation(twist_generator_matrices(ctx), g, p).generates;
}

}  // namespace mcg
