#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picurve/devissage.hpp"
#include "picurve/group.hpp"

using namespace picurve;

TEST_CASE("trivial kernel gives an empty tower") {
    GroupPtr g = dihedral_group(3);
    DevissageTower t = devissage_solvable(g, trivial_subgroup(g));
    CHECK(t.steps.empty());
    CHECK(t.final_quotient->order == 6);
    CHECK(verify_tower(t).all_pass);
}

TEST_CASE("order-6 non-abelian group peels as [3, 2]") {
    GroupPtr g = dihedral_group(3);
    DevissageTower t = devissage_solvable(g, full_subgroup(g));
    REQUIRE(t.steps.size() == 2);
    CHECK(t.steps[0].kernel_layer.order() == 3);  // derived subgroup first
    CHECK(t.steps[0].layer_prime() == 3);
    CHECK(t.steps[1].kernel_layer.order() == 2);
    CHECK(t.steps[1].layer_prime() == 2);
    CHECK(t.final_quotient->order == 1);
    CHECK(verify_tower(t).all_pass);
}

TEST_CASE("elementary abelian kernel with trivial action splits into lines") {
    GroupPtr g = direct_product(cyclic_group(2), cyclic_group(2));
    auto steps = devissage_abelian(g, full_subgroup(g));
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].layer_dim() == 1);
    CHECK(steps[1].layer_dim() == 1);
    CHECK(steps[0].reduction_tag == ReductionTag::irreducible_refinement);
}

TEST_CASE("cyclic order 6 splits by Sylow, smallest prime first") {
    GroupPtr g = cyclic_group(6);
    auto steps = devissage_abelian(g, full_subgroup(g));
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].kernel_layer.order() == 2);
    CHECK(steps[0].reduction_tag == ReductionTag::sylow_split);
    CHECK(steps[1].kernel_layer.order() == 3);
}

TEST_CASE("cyclic order 4 uses the power filtration") {
    GroupPtr g = cyclic_group(4);
    auto steps = devissage_abelian(g, full_subgroup(g));
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].kernel_layer.order() == 2);
    CHECK(steps[0].reduction_tag == ReductionTag::power_filtration);
    CHECK(steps[1].kernel_layer.order() == 2);
}

TEST_CASE("scope checks") {
    GroupPtr g = cyclic_group(6);
    CHECK_THROWS_AS(devissage_solvable(g, full_subgroup(g), 3), validation_error);  // 3 | 6
    GroupPtr a5 = group_from_permutations(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
    CHECK_THROWS_AS(devissage_solvable(a5, full_subgroup(a5)), validation_error);
    GroupPtr s3 = dihedral_group(3);
    Subgroup reflection{s3, {0, s3->generators[1]}};
    CHECK_THROWS_AS(devissage_abelian(s3, reflection), validation_error);  // not normal
}

TEST_CASE("towers are deterministic") {
    GroupPtr a = dihedral_group(6);
    GroupPtr b = dihedral_group(6);
    DevissageTower ta = devissage_solvable(a, full_subgroup(a));
    DevissageTower tb = devissage_solvable(b, full_subgroup(b));
    REQUIRE(ta.steps.size() == tb.steps.size());
    for (size_t i = 0; i < ta.steps.size(); ++i) {
        CHECK(ta.steps[i].kernel_layer.members == tb.steps[i].kernel_layer.members);
        CHECK(ta.steps[i].reduction_tag == tb.steps[i].reduction_tag);
    }
}

TEST_CASE("layer orders multiply to the kernel order, layers irreducible") {
    for (GroupPtr g : {dihedral_group(6), dicyclic_group(3), cyclic_group(12),
                       direct_product(dihedral_group(3), cyclic_group(4))}) {
        DevissageTower t = devissage_solvable(g, full_subgroup(g));
        long long prod = 1;
        for (const auto& s : t.steps) {
            prod *= s.kernel_layer.order();
            CHECK(is_irreducible(s.layer_module));
            CHECK(s.kernel_layer.order() == detail::pow_ll(s.layer_prime(), s.layer_dim()));
        }
        CHECK(prod == g->order);
        CHECK(verify_tower(t).all_pass);
    }
}

TEST_CASE("hand-corrupted tower fails verification") {
    GroupPtr g = dihedral_group(3);
    DevissageTower t = devissage_solvable(g, full_subgroup(g));
    REQUIRE(!t.steps.empty());
    // replace the first layer with a non-normal order-2 subgroup of S3
    t.steps[0].kernel_layer.members = {0, g->generators[1]};
    TowerReport rep = verify_tower(t);
    CHECK(!rep.all_pass);
    bool normality_flagged = false;
    for (const auto& e : rep.entries)
        if (e.step_index == 0 && e.check == "layer-normal" && !e.pass) normality_flagged = true;
    CHECK(normality_flagged);
}
