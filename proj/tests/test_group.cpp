#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picurve/group.hpp"
#include "picurve/isomorphism.hpp"

using namespace picurve;

namespace {
GroupPtr s3() { return dihedral_group(3); }
GroupPtr v4() { return direct_product(cyclic_group(2), cyclic_group(2)); }
GroupPtr a5() { return group_from_permutations(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}); }
}  // namespace

TEST_CASE("closure from permutations") {
    CHECK(group_from_permutations(1, {{0}})->order == 1);
    CHECK(group_from_permutations(3, {{1, 2, 0}})->order == 3);
    GroupPtr g = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(g->order == 6);
    CHECK(!g->is_abelian());

    CHECK_THROWS_AS(group_from_permutations(2, {{0, 0}}), validation_error);
    CHECK_THROWS_AS(group_from_permutations(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0}}, 10),
                    size_limit_error);
}

TEST_CASE("closure matches naive word enumeration") {
    // oracle: all products of words up to the group order
    GroupPtr g = group_from_permutations(4, {{1, 2, 3, 0}, {1, 0, 3, 2}});
    std::set<int> words{0};
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x : std::set<int>(words))
            for (int s : g->generators)
                if (words.insert(g->op(x, s)).second) grew = true;
    }
    CHECK(static_cast<int>(words.size()) == g->order);
}

TEST_CASE("validated tables reject corruption") {
    GroupPtr g = s3();
    auto bad = g->mul;
    bad[1][2] = g->mul[1][2] == 0 ? 1 : 0;
    FiniteGroup broken;
    broken.order = g->order;
    broken.mul = bad;
    broken.inv = g->inv;
    CHECK_THROWS_AS(validate_group(broken), validation_error);
}

TEST_CASE("derived series") {
    auto abelian = derived_series(cyclic_group(8));
    REQUIRE(abelian.size() == 2);
    CHECK(abelian[1].order() == 1);

    auto series = derived_series(s3());
    REQUIRE(series.size() == 3);
    CHECK(series[0].order() == 6);
    CHECK(series[1].order() == 3);
    CHECK(series[2].order() == 1);
    // each term normal in G, not just in its predecessor
    for (const auto& term : series) CHECK(is_normal(Subgroup{series[0].parent, term.members}));

    auto perfect = derived_series(a5());
    CHECK(perfect.back().order() == 60);
    CHECK(!is_solvable(a5()));
    CHECK(is_solvable(s3()));
    CHECK(is_solvable(cyclic_group(7)));
}

TEST_CASE("derived series matches brute-force commutator closure") {
    GroupPtr g = dihedral_group(6);
    std::set<int> comms;
    for (int a = 0; a < g->order; ++a)
        for (int b = 0; b < g->order; ++b)
            comms.insert(g->op(g->op(a, b), g->op(g->inv[a], g->inv[b])));
    Subgroup oracle = close(g, {comms.begin(), comms.end()});
    CHECK(derived_series(g)[1].members == oracle.members);
}

TEST_CASE("min_generators") {
    CHECK(min_generators(cyclic_group(1)) == 0);
    CHECK(min_generators(cyclic_group(6)) == 1);
    CHECK(min_generators(v4()) == 2);
    CHECK(min_generators(dicyclic_group(2)) == 2);  // quaternion group
    CHECK(min_generators(s3()) == 2);
    CHECK(min_generators(a5()) == 2);

    try {
        min_generators(direct_product(v4(), cyclic_group(2)), 3);
        FAIL("budget not enforced");
    } catch (const budget_error& ex) {
        CHECK(ex.partial_lower_bound >= 1);
    }
}

TEST_CASE("sylow decomposition of abelian subgroups") {
    auto parts = sylow_decomposition(full_subgroup(cyclic_group(6)));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == 2);
    CHECK(parts[0].second.order() == 2);
    CHECK(parts[1].first == 3);
    CHECK(parts[1].second.order() == 3);

    auto p4 = sylow_decomposition(full_subgroup(cyclic_group(4)));
    REQUIRE(p4.size() == 1);
    CHECK(p4[0].first == 2);
    CHECK(p4[0].second.order() == 4);

    auto p12 = sylow_decomposition(full_subgroup(direct_product(cyclic_group(4), cyclic_group(3))));
    REQUIRE(p12.size() == 2);
    CHECK(p12[0].second.order() == 4);
    CHECK(p12[1].second.order() == 3);

    CHECK_THROWS_AS(sylow_decomposition(full_subgroup(s3())), validation_error);
}

TEST_CASE("quotients") {
    GroupPtr g = s3();
    auto [triv, proj_full] = quotient(g, full_subgroup(g));
    CHECK(triv->order == 1);

    auto [copy, proj_id] = quotient(g, trivial_subgroup(g));
    CHECK(copy->order == 6);
    CHECK(is_isomorphic(copy, g));

    Subgroup c3 = derived_series(g)[1];
    auto [q, proj] = quotient(g, c3);
    CHECK(q->order == 2);
    CHECK(proj.is_surjective());
    CHECK(proj.kernel().members == c3.members);

    Subgroup not_normal{g, {0, g->generators[1]}};  // a reflection
    CHECK(close(g, not_normal.members).order() == 2);
    CHECK_THROWS_AS(quotient(g, not_normal), validation_error);
}

TEST_CASE("canonical ordering is reproducible") {
    GroupPtr a = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    GroupPtr b = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(a->mul == b->mul);
    CHECK(a->generators == b->generators);
}

TEST_CASE("isomorphism testing") {
    CHECK(is_isomorphic(dihedral_group(2), v4()));
    CHECK(!is_isomorphic(cyclic_group(4), v4()));
    CHECK(is_isomorphic(dicyclic_group(2), dicyclic_group(2)));
    CHECK(!is_isomorphic(dicyclic_group(2), dihedral_group(4)));
    CHECK(enumerate_automorphisms(cyclic_group(5)).size() == 4);
    CHECK(enumerate_automorphisms(v4()).size() == 6);
    CHECK(enumerate_automorphisms(s3()).size() == 6);
}

TEST_CASE("semidirect product recovers dihedral groups") {
    GroupPtr c5 = cyclic_group(5);
    std::vector<int> invert(5);
    for (int i = 0; i < 5; ++i) invert[i] = (5 - i) % 5;
    GroupPtr d5 = semidirect_product(c5, cyclic_group(2), {invert});
    CHECK(d5->order == 10);
    CHECK(is_isomorphic(d5, dihedral_group(5)));

    std::vector<int> not_auto{0, 2, 1, 3, 4};
    CHECK_THROWS_AS(semidirect_product(c5, cyclic_group(2), {not_auto}), validation_error);
}
