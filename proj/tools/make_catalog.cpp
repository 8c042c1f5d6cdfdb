// Generates data/catalog.json: every group of order <= 24 up to isomorphism
// (built from cyclic / dihedral / dicyclic groups, direct and semidirect
// products, and central C2-extensions, then deduplicated), the order-60
// alternating group, and the curated module examples. The per-order class
// counts are asserted before anything is written.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "picurve/catalog.hpp"
#include "picurve/cohomology.hpp"
#include "picurve/group.hpp"
#include "picurve/isomorphism.hpp"
#include "picurve/json_io.hpp"

using namespace picurve;

namespace {

struct Candidate {
    std::string name;
    GroupPtr group;
};

struct Pool {
    std::vector<Candidate> items;

    bool add(const std::string& name, GroupPtr g) {
        for (const auto& c : items)
            if (c.group->order == g->order && is_isomorphic(c.group, g)) return false;
        items.push_back({name, std::move(g)});
        return true;
    }
};

// All semidirect products N x| H for every action of H on N.
void add_semidirects(Pool& pool, GroupPtr n_grp, GroupPtr h_grp, const std::string& base) {
    auto autos = enumerate_automorphisms(n_grp);
    size_t k = h_grp->generators.size();
    long long tuples = 1;
    for (size_t i = 0; i < k; ++i) {
        tuples *= static_cast<long long>(autos.size());
        if (tuples > 5000) return;  // no group this small needs that many attempts
    }
    std::vector<size_t> pick(k, 0);
    for (long long t = 0; t < tuples; ++t) {
        long long rest = t;
        for (size_t i = 0; i < k; ++i) {
            pick[i] = static_cast<size_t>(rest % static_cast<long long>(autos.size()));
            rest /= static_cast<long long>(autos.size());
        }
        std::vector<std::vector<int>> gen_autos;
        for (size_t i = 0; i < k; ++i) gen_autos.push_back(autos[pick[i]]);
        try {
            pool.add(base, semidirect_product(n_grp, h_grp, gen_autos));
        } catch (const validation_error&) {
            // generator images that do not extend to an action of H
        }
    }
}

// All central extensions of h by C2: one representative per H^2(h, F2) class
// with the trivial action.
void add_central_c2_extensions(Pool& pool, GroupPtr h, const std::string& base) {
    FlModule triv = trivial_module(h, 2, 1);
    CohomologyResult res = h2(h, triv);
    Subspace span = res.space.coboundaries;
    std::vector<FlVector> reps;  // basis of H^2 as cocycle representatives
    for (const auto& z : res.space.cocycles.basis)
        if (span.insert(z)) reps.push_back(z);
    long long classes = 1 << reps.size();
    for (long long mask = 0; mask < classes; ++mask) {
        FlVector packed(static_cast<size_t>(res.space.space_dim), 0);
        for (size_t i = 0; i < reps.size(); ++i)
            if (mask & (1LL << i)) packed = vec_add(packed, reps[i], 2);
        Cocycle2 f = detail::unpack_cocycle(*h, 1, packed);
        pool.add(base, build_extension(h, triv, f).total);
    }
}

// Left-regular permutation of x -> g x for each stored generator.
Json group_entry(const Candidate& c) {
    const FiniteGroup& g = *c.group;
    Json gens = Json::array();
    std::vector<int> use = g.generators;
    if (use.empty()) use.push_back(0);  // trivial group: identity permutation
    for (int s : use) {
        std::vector<int> perm(g.order);
        for (int x = 0; x < g.order; ++x) perm[static_cast<size_t>(x)] = g.mul[s][x];
        gens.push_back(perm);
    }
    Json j;
    j["name"] = c.name;
    j["order"] = g.order;
    j["degree"] = g.order;
    j["generators"] = gens;
    return j;
}

Json module_entry(const std::string& name, int degree, std::vector<std::vector<int>> perms, int l,
                  int dim, std::vector<std::vector<std::vector<int>>> mats) {
    Json j;
    j["name"] = name;
    j["l"] = l;
    j["dim"] = dim;
    j["group"] = Json{{"degree", degree}, {"generators", perms}};
    j["generator_matrices"] = mats;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    std::string out_path = argc > 1 ? argv[1] : "data/catalog.json";
    Pool pool;

    for (int m = 1; m <= 24; ++m) pool.add("C" + std::to_string(m), cyclic_group(m));
    for (int m = 2; m <= 12; ++m) pool.add("D" + std::to_string(m), dihedral_group(m));
    for (int m = 2; m <= 6; ++m) pool.add("Dic" + std::to_string(m), dicyclic_group(m));

    // close under products and extensions until nothing new appears
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Candidate> snapshot = pool.items;
        for (const auto& a : snapshot)
            for (const auto& b : snapshot) {
                if (a.group->order < 2 || b.group->order < 2) continue;
                if (a.group->order * b.group->order > 24) continue;
                if (pool.add(a.name + "x" + b.name, direct_product(a.group, b.group))) changed = true;
                size_t before = pool.items.size();
                add_semidirects(pool, a.group, b.group, a.name + ":" + b.name);
                if (pool.items.size() != before) changed = true;
            }
        for (const auto& h : snapshot) {
            if (2 * h.group->order > 24) continue;
            size_t before = pool.items.size();
            add_central_c2_extensions(pool, h.group, "C2." + h.name);
            if (pool.items.size() != before) changed = true;
        }
    }

    pool.items.push_back({"A5", group_from_permutations(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}})});

    std::vector<int> per_order(25, 0);
    for (const auto& c : pool.items)
        if (c.group->order <= 24) per_order[static_cast<size_t>(c.group->order)] += 1;
    for (int n = 1; n <= 24; ++n)
        if (per_order[static_cast<size_t>(n)] != kGroupCounts[static_cast<size_t>(n - 1)]) {
            std::cerr << "order " << n << ": found " << per_order[static_cast<size_t>(n)] << ", expected "
                      << kGroupCounts[static_cast<size_t>(n - 1)] << "\n";
            return 1;
        }

    std::stable_sort(pool.items.begin(), pool.items.end(),
                     [](const Candidate& a, const Candidate& b) { return a.group->order < b.group->order; });

    Json groups = Json::array();
    for (const auto& c : pool.items) groups.push_back(group_entry(c));

    Json modules = Json::array();
    modules.push_back(module_entry("C3-on-F2^2", 3, {{1, 2, 0}}, 2, 2, {{{0, 1}, {1, 1}}}));
    modules.push_back(module_entry("C2-sign-F3", 2, {{1, 0}}, 3, 1, {{{2}}}));
    modules.push_back(module_entry("C2-sign-F5", 2, {{1, 0}}, 5, 1, {{{4}}}));
    modules.push_back(module_entry("S3-sign-F5", 3, {{1, 0, 2}, {1, 2, 0}}, 5, 1, {{{4}}, {{1}}}));
    modules.push_back(
        module_entry("S3-on-F2^2", 3, {{1, 0, 2}, {1, 2, 0}}, 2, 2, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 1}}}));
    modules.push_back(module_entry("C4-on-F3^2", 4, {{1, 2, 3, 0}}, 3, 2, {{{0, 2}, {1, 0}}}));
    modules.push_back(module_entry("C5-on-F2^4", 5, {{1, 2, 3, 4, 0}}, 2, 4,
                                   {{{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}}));
    modules.push_back(module_entry("D4-on-F3^2", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}}, 3, 2,
                                   {{{0, 2}, {1, 0}}, {{1, 0}, {0, 2}}}));
    modules.push_back(module_entry("A4-on-F2^2", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, 2, 2,
                                   {{{1, 1}, {1, 0}}, {{1, 0}, {0, 1}}}));
    modules.push_back(module_entry("V4-char-F3", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, 3, 1, {{{2}}, {{1}}}));

    Json out;
    out["groups"] = groups;
    out["modules"] = modules;

    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "cannot write " << out_path << "\n";
        return 1;
    }
    f << out.dump(1) << "\n";
    f.close();

    // round-trip through the loader as a final self-check
    Catalog cat = load_catalog(out_path);
    std::cout << "wrote " << out_path << ": " << cat.groups.size() << " groups, " << cat.modules.size()
              << " modules\n";
    return 0;
}
