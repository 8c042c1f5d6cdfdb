#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picurve/gos.hpp"

using namespace picurve;

namespace {

FlModule sign_f3() {
    return module_from_generator_action(cyclic_group(2), 3, {FlMatrix::from_rows(3, {{2}}, 1)}, 1);
}

RamificationFiltration tame_point(const FlModule& m) {
    RamificationFiltration f;
    f.galois_group = m.group;
    f.generic_module = m;
    f.chain = {full_subgroup(m.group), trivial_subgroup(m.group)};
    return f;
}

// wildly ramified: G_0 = G_1 = C2, sign module over F_3
RamificationFiltration wild_sign_point() {
    FlModule m = sign_f3();
    RamificationFiltration f;
    f.galois_group = m.group;
    f.generic_module = m;
    f.chain = {full_subgroup(m.group), full_subgroup(m.group)};
    return f;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3, 2) * Rational(2, 3) == Rational(1));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(4, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), validation_error);
}

TEST_CASE("swan invariant") {
    CHECK(swan(tame_point(sign_f3())) == Rational(0));
    CHECK(swan(tame_point(trivial_module(cyclic_group(4), 5, 3))) == Rational(0));
    CHECK(swan(wild_sign_point()) == Rational(1));  // (2/2) * dim(A / A^{C2})

    RamificationFiltration bad = tame_point(sign_f3());
    bad.chain = {trivial_subgroup(bad.galois_group), full_subgroup(bad.galois_group)};
    CHECK_THROWS_AS(swan(bad), validation_error);  // not decreasing / G_0 not full
}

TEST_CASE("conductor exponent") {
    FlModule m = sign_f3();
    CHECK(conductor_exponent({tame_point(m), 1}) == Rational(0));  // unramified
    CHECK(conductor_exponent({tame_point(m), 0}) == Rational(1));
    CHECK(conductor_exponent({wild_sign_point(), 0}) == Rational(2));  // 1 + 1 - 0
}

TEST_CASE("projective Euler characteristic") {
    CHECK(euler_char_projective(0, 1, {}).chi == 2);
    CHECK(euler_char_projective(1, 1, {}).chi == 0);
    EulerReport rep = euler_char_projective(0, 1, {{tame_point(sign_f3()), 0}});
    CHECK(rep.chi == 1);
    REQUIRE(rep.epsilons.size() == 1);
    CHECK(rep.epsilons[0] == Rational(1));
}

TEST_CASE("affine Euler characteristic") {
    CHECK(euler_char_affine({0, 1, 0}, 1, {}).chi == 1);  // the affine line
    CHECK(euler_char_affine({0, 2, 0}, 1, {}).chi == 0);
    CHECK(euler_char_affine({1, 1, 0}, 2, {Rational(1)}).chi == -3);
}

TEST_CASE("h1 via GOS matches the dimension formula") {
    GroupPtr triv = cyclic_group(1);
    CHECK(h1_affine_from_gos({0, 2, 0}, trivial_module(triv, 3, 1)) == 1);
    CHECK(h1_affine_from_gos({0, 3, 0}, sign_f3()) == 1);
    CHECK(h1_affine_from_gos({2, 1, 0}, trivial_module(triv, 5, 2)) == 8);

    CHECK(h1_affine_from_gos({0, 3, 0}, sign_f3()) == lemma4_h1x_dim({0, 3, 0}, sign_f3()));

    CHECK_THROWS_AS(h1_affine_from_gos({0, 2, 3}, sign_f3()), scope_error);  // l = p
    CHECK_THROWS_AS(h1_affine_from_gos({0, 2, 2}, sign_f3()), scope_error);  // 2 | |H|
}

TEST_CASE("swan is additive on direct sums") {
    // sign (+) trivial over F_3 for C2, with a wild filtration
    GroupPtr c2 = cyclic_group(2);
    FlMatrix block = FlMatrix::from_rows(3, {{2, 0}, {0, 1}}, 2);
    FlModule sum = module_from_generator_action(c2, 3, {block}, 2);
    RamificationFiltration f;
    f.galois_group = c2;
    f.generic_module = sum;
    f.chain = {full_subgroup(c2), full_subgroup(c2)};

    RamificationFiltration wild_triv;
    wild_triv.galois_group = c2;
    wild_triv.generic_module = trivial_module(c2, 3, 1);
    wild_triv.chain = f.chain;

    CHECK(swan(f) == swan(wild_sign_point()) + swan(wild_triv));
}
