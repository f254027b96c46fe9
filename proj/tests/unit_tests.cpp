#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "congruence.hpp"
#include "exterior.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "johnson.hpp"
#include "relations.hpp"
#include "snf.hpp"
#include "surface.hpp"
#include "words.hpp"

using namespace mcg;

TEST_CASE("free reduction and word arithmetic") {
  CHECK(reduce({1, 2, -2, -1, 3}, 4) == Word{3});
  CHECK(multiply({1, 2}, {-2, 3}) == Word{1, 3});
  CHECK(invert({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(cyclic_reduce({1, 2, 3, -1}) == Word{2, 3});
  CHECK_THROWS_AS(reduce({0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(reduce({5}, 4), std::invalid_argument);
}

TEST_CASE("endomorphism composition is right-to-left") {
  // f: s1 -> s1 s2,  g: s1 -> s2.  (f after g)(s1) = f(s2) = s2.
  Endomorphism f = Endomorphism::identity(2);
  f.images[0] = {1, 2};
  Endomorphism g = Endomorphism::identity(2);
  g.images[0] = {2};
  CHECK(mcg::apply(compose_endo(f, g), {1}) == Word{2});
  CHECK(mcg::apply(compose_endo(g, f), {1}) == Word{2, 2});
}

TEST_CASE("check_automorphism rejects a non-invertible pair") {
  Endomorphism f = Endomorphism::identity(2);
  f.images[0] = {1, 2};
  Automorphism bad{f, Endomorphism::identity(2)};
  CHECK_THROWS_AS(check_automorphism(bad), std::invalid_argument);
}

TEST_CASE("boundary word") {
  CHECK(boundary_word(1) == Word{1, 2, -1, -2});
  CHECK(boundary_word(2) == Word{1, 2, -1, -2, 3, 4, -3, -4});
}

TEST_CASE("catalog twists: defining images and delta invariance") {
  SurfaceContext ctx = make_context(2);
  MappingClass ta = standard_twist(ctx, "a1");
  CHECK(ta.aut.forward.image(2) == Word{2, 1});
  CHECK(ta.aut.forward.image(1) == Word{1});
  MappingClass tb = standard_twist(ctx, "b1");
  CHECK(tb.aut.forward.image(1) == Word{1, -2});
  for (const auto& id : catalog_ids(2)) {
    MappingClass t = standard_twist(ctx, id);
    CHECK(mcg::apply(t.aut.forward, ctx.delta) == ctx.delta);
    CHECK(auto_equal(compose(t.aut, t.aut.inverse()), Automorphism::identity(4)));
  }
}

TEST_CASE("transvection at genus 1") {
  SymplecticMatrix t = transvection({1, 0});
  CHECK(t.rows == Mat{{1, 1}, {0, 1}});
  CHECK(is_symplectic_matrix(t));
  SymplecticMatrix u = transvection({0, 1});
  CHECK(u.rows == Mat{{1, 0}, {-1, 1}});
}

TEST_CASE("abelianization of a twist equals the transvection of its class") {
  SurfaceContext ctx = make_context(3);
  for (const auto& id : {"a2", "b3", "c1", "lanY1", "wrap3"}) {
    MappingClass t = standard_twist(ctx, id);
    SymplecticMatrix ab = mc_abelianize(t);
    CHECK(ab.rows == transvection(curve_class(ctx, id)).rows);
  }
}

TEST_CASE("interleaved/block order conversion is involutive and preserves the form") {
  SurfaceContext ctx = make_context(2);
  SymplecticMatrix m = mc_abelianize(standard_twist(ctx, "c1"));
  SymplecticMatrix b = convert_order(m, BasisOrder::block);
  CHECK(b.order == BasisOrder::block);
  CHECK(is_symplectic_matrix(b));
  CHECK(convert_order(b, BasisOrder::interleaved).rows == m.rows);
}

TEST_CASE("small symplectic group orders over Z/p") {
  SurfaceContext c1 = make_context(1);
  auto r1 = mod_p_generation(twist_generator_matrices(c1), 1, 2);
  CHECK(r1.full_order == 6);
  CHECK(r1.generates);
  auto r2 = mod_p_generation(twist_generator_matrices(c1), 1, 3);
  CHECK(r2.full_order == 24);
  CHECK(r2.generates);
  SurfaceContext c2 = make_context(2);
  auto r3 = mod_p_generation(twist_generator_matrices(c2), 2, 2);
  CHECK(r3.full_order == 720);
  CHECK(r3.generates);
}

TEST_CASE("wedge product anticommutes and squares to zero") {
  ExteriorElement x = vector_element({1, 0, 0, 0});
  ExteriorElement y = vector_element({0, 2, 1, 0});
  CHECK(wedge(x, y) == scale(wedge(y, x), -1));
  CHECK(wedge(x, x).is_zero());
}

TEST_CASE("iota round-trip at genus 3") {
  for (const auto& tuple : basis_tuples(6, 3)) {
    ExteriorElement t = make_element(6, 3, 0, {{tuple, 1}});
    IotaSolveResult r = iota_solve(iota(t));
    CHECK(r.ok);
    CHECK(r.value == t);
  }
}

TEST_CASE("nilpotent quotient: commutator lands on the symplectic class") {
  // rho([s1, s2]) = (0, e1 ^ e2)
  NilpotentElement x = project_nilpotent({1, 2, -1, -2}, 4);
  CHECK(x.a == HomVec{0, 0, 0, 0});
  CHECK(x.c == make_element(4, 2, 0, {{{1, 2}, 1}}));
  // group law round-trip
  NilpotentElement u = project_nilpotent({1, 2, 3}, 4);
  NilpotentElement v = project_nilpotent({-3, 4}, 4);
  CHECK(nil_equal(nil_mul(u, v), project_nilpotent({1, 2, 4}, 4)));
  CHECK(nil_equal(nil_mul(u, nil_inverse(u)), nil_identity(4)));
}

TEST_CASE("Johnson homomorphism: vanishing and bounding-pair value") {
  SurfaceContext ctx = make_context(3);
  CHECK(johnson_tau(separating_twist(ctx, 1)).is_zero());
  CHECK(johnson_tau(boundary_twist(ctx)).is_zero());
  MappingClass bp = bounding_pair(ctx, 1);
  std::vector<HomVec> cut = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}};
  ExteriorElement expect = bp_expected(3, 1, curve_class(ctx, "a2"), cut);
  CHECK(johnson_tau(bp) == expect);
  CHECK_FALSE(expect.is_zero());
}

TEST_CASE("psi on the elementary example") {
  IntMat m = {{1, 3}, {0, 1}};
  IntMat expect = {{0, 1}, {0, 0}};
  CHECK(int_mat_equal(psi(m, 3, Flavor::sl), expect));
  CHECK_THROWS_AS(psi(IntMat{{1, 1}, {0, 1}}, 3, Flavor::sl), std::invalid_argument);
}

TEST_CASE("elementary commutator identity") {
  // [e_21(3), e_13(3)] = e_23(9)
  IntMat lhs = commutator(elementary_pow(3, 2, 1, 3), elementary_pow(3, 1, 3, 3));
  CHECK(int_mat_equal(lhs, elementary_pow(3, 2, 3, 9)));
}

TEST_CASE("Charney subgroup predicates") {
  int n = 3;
  long long p = 3;
  IntMat m1 = elementary_pow(n, 1, 2, 1);  // identity block, tail not in pZ
  CHECK(charney_membership(m1, CharneyWhich::Khat, n, p));
  CHECK(charney_membership(m1, CharneyWhich::Ghat, n, p));
  CHECK_FALSE(charney_membership(m1, CharneyWhich::K, n, p));
  CHECK_FALSE(charney_membership(m1, CharneyWhich::G, n, p));
  IntMat m2 = elementary_pow(n, 1, 2, p);  // tail in pZ too
  CHECK(charney_membership(m2, CharneyWhich::K, n, p));
  CHECK(charney_membership(m2, CharneyWhich::G, n, p));
  IntMat m3 = elementary_pow(n, 2, 3, p);  // block = I mod p only
  CHECK(charney_membership(m3, CharneyWhich::G, n, p));
  CHECK(charney_membership(m3, CharneyWhich::Ghat, n, p));
  CHECK_FALSE(charney_membership(m3, CharneyWhich::K, n, p));
  CHECK_FALSE(charney_membership(m3, CharneyWhich::Khat, n, p));
  IntMat m4 = elementary_pow(n, 2, 1, 1);  // first column not e1
  CHECK_FALSE(charney_membership(m4, CharneyWhich::Ghat, n, p));
}

TEST_CASE("lantern relation holds and a corrupted instance fails") {
  RelationInstance r = lantern_instance(3);
  CHECK(verify_relation(r).all_pass());
  RelationInstance bad = r;
  bad.lhs.pop_back();  // negative control
  CHECK_FALSE(verify_relation(bad).exact);
}

TEST_CASE("crossed lantern and telescope") {
  CrossedLanternResult cl = crossed_lantern_instance(2);
  CHECK(verify_relation(cl.relation).all_pass());
  CHECK(cl.key_fact_conj[0]);
  CHECK(cl.key_fact_conj[1]);
  CHECK(cl.key_fact_transport);
  TelescopeReport t = telescope_check(3);
  CHECK(t.pass);
  CHECK(t.bp_coefficient == 3);
}

TEST_CASE("formal two-lantern abelianization vanishes") {
  auto coeffs = killsep_formal();
  CHECK(coeffs.empty());
}

TEST_CASE("Smith normal form transforms and left inverse") {
  IntMat a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  SmithResult s = smith_normal_form(a);
  CHECK(int_mat_equal(int_mat_mul(int_mat_mul(s.u, a), s.v), s.s));
  mpz_class prod = 1;
  for (const auto& d : s.diag) prod *= d;
  CHECK(prod == abs(int_mat_det(a)));
  IntMat tall = {{1, 0}, {0, 1}, {1, 1}};
  IntMat l = left_inverse(tall);
  REQUIRE_FALSE(l.empty());
  CHECK(int_mat_equal(int_mat_mul(l, tall), int_mat_identity(2)));
}

TEST_CASE("JSON round-trips") {
  SurfaceContext ctx = make_context(2);
  MappingClass f = mc_compose(standard_twist(ctx, "a1"),
                              mc_inverse(standard_twist(ctx, "c1")));
  MappingClass f2 = mapping_class_from_json(mapping_class_to_json(f));
  CHECK(auto_equal(f.aut, f2.aut));
  CHECK(f2.genus == 2);

  ExteriorElement t = make_element(6, 3, 5, {{{1, 2, 4}, 3}, {{2, 3, 5}, 4}});
  CHECK(exterior_from_json(exterior_to_json(t)) == t);

  SymplecticMatrix m = mc_abelianize(f);
  CHECK(matrix_from_json(matrix_to_json(m)).rows == m.rows);

  IntMat im = {{mpz_class("123456789012345678901234567890"), 1}, {0, -7}};
  CHECK(int_mat_equal(int_matrix_from_json(int_matrix_to_json(im)), im));
}

TEST_CASE("level and Torelli predicates") {
  SurfaceContext ctx = make_context(2);
  MappingClass bp = bounding_pair(ctx, 1);
  CHECK(torelli_check(mc_abelianize(bp)));
  MappingClass ta = standard_twist(ctx, "a1");
  CHECK_FALSE(torelli_check(mc_abelianize(ta)));
  // T_a^p is level-p
  MappingClass power = mc_identity(ctx);
  for (int k = 0; k < 3; ++k) power = mc_compose(power, ta);
  CHECK(congruence_check(mc_abelianize(power), 3));
  CHECK_FALSE(congruence_check(mc_abelianize(ta), 3));
}
