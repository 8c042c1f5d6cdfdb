#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picurve/group.hpp"
#include "picurve/module.hpp"

using namespace picurve;

namespace {

// regular representation of C2 over F_2: the generator swaps coordinates
FlModule c2_regular_f2() {
    GroupPtr c2 = cyclic_group(2);
    return module_from_generator_action(c2, 2, {FlMatrix::from_rows(2, {{0, 1}, {1, 0}}, 2)}, 2);
}

FlModule c2_sign_f3() {
    GroupPtr c2 = cyclic_group(2);
    return module_from_generator_action(c2, 3, {FlMatrix::from_rows(3, {{2}}, 1)}, 1);
}

FlModule c3_dim2_f2() {
    GroupPtr c3 = cyclic_group(3);
    return module_from_generator_action(c3, 2, {FlMatrix::from_rows(2, {{0, 1}, {1, 1}}, 2)}, 2);
}

}  // namespace

TEST_CASE("module construction validates the representation") {
    GroupPtr c3 = cyclic_group(3);
    CHECK(trivial_module(c3, 5, 2).dim == 2);
    CHECK(c2_sign_f3().apply(1, {1}) == FlVector{2});
    CHECK(c3_dim2_f2().dim == 2);

    // an order-2 matrix cannot represent a generator of C3
    CHECK_THROWS_AS(
        module_from_generator_action(c3, 2, {FlMatrix::from_rows(2, {{0, 1}, {1, 0}}, 2)}, 2),
        validation_error);
    // non-invertible matrix rejected
    CHECK_THROWS_AS(
        module_from_generator_action(cyclic_group(2), 2, {FlMatrix(2, 1, 1)}, 1),
        validation_error);
}

TEST_CASE("action is a homomorphism on all pairs") {
    FlModule m = c3_dim2_f2();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(mat_mul(m.action[a], m.action[b]).entries ==
                  m.action[m.group->mul[a][b]].entries);
}

TEST_CASE("fixed subspaces") {
    CHECK(fixed_subspace(trivial_module(cyclic_group(4), 3, 3)).dim() == 3);
    CHECK(fixed_subspace(c2_sign_f3()).dim() == 0);

    Subspace fixed = fixed_subspace(c2_regular_f2());
    CHECK(fixed.dim() == 1);
    CHECK(fixed.contains({1, 1}));
}

TEST_CASE("spin") {
    FlModule m = c2_regular_f2();
    CHECK(spin(m, {0, 0}).dim() == 0);
    CHECK(spin(m, {1, 0}).dim() == 2);

    FlModule t = trivial_module(cyclic_group(2), 3, 2);
    Subspace line = spin(t, {1, 2});
    CHECK(line.dim() == 1);
    CHECK(line.contains({1, 2}));
}

TEST_CASE("irreducibility by exhaustive spinning") {
    CHECK(is_irreducible(c2_sign_f3()));
    CHECK(!is_irreducible(c2_regular_f2()));  // fixed line is a proper submodule
    CHECK(is_irreducible(c3_dim2_f2()));
    CHECK_THROWS_AS(is_irreducible(trivial_module(cyclic_group(2), 2, 0)), validation_error);
}

TEST_CASE("composition series") {
    auto single = composition_series(c3_dim2_f2());
    REQUIRE(single.factors.size() == 1);
    CHECK(single.factors[0].dim == 2);

    auto two = composition_series(trivial_module(cyclic_group(3), 2, 2));
    REQUIRE(two.factors.size() == 2);
    CHECK(two.factors[0].dim == 1);
    CHECK(two.factors[1].dim == 1);

    auto reg = composition_series(c2_regular_f2());
    REQUIRE(reg.factors.size() == 2);
    CHECK(reg.chain[1].basis.front() == FlVector{1, 1});  // first step is the fixed line
    int total = 0;
    for (const auto& f : reg.factors) total += f.dim;
    CHECK(total == 2);
}

TEST_CASE("elementary abelian bridge") {
    GroupPtr g = direct_product(cyclic_group(2), cyclic_group(2));
    ElementaryAbelianBasis basis = analyze_elementary_abelian(full_subgroup(g));
    CHECK(basis.l == 2);
    CHECK(basis.dim == 2);
    for (int x = 0; x < 4; ++x) CHECK(basis.element_of(basis.coords.at(x)) == x);
}

TEST_CASE("multiplication-by-l filtration") {
    CHECK(multiplication_by_l_submodule(full_subgroup(direct_product(cyclic_group(3), cyclic_group(3))))
              .order() == 1);
    CHECK(multiplication_by_l_submodule(full_subgroup(cyclic_group(9))).order() == 3);
    CHECK(multiplication_by_l_submodule(full_subgroup(cyclic_group(4))).order() == 2);
    CHECK(multiplication_by_l_submodule(
              full_subgroup(direct_product(cyclic_group(4), cyclic_group(2))))
              .order() == 2);
    // mixed order rejected
    CHECK_THROWS_AS(multiplication_by_l_submodule(full_subgroup(cyclic_group(6))), validation_error);
}
