#pragma once

// Reduction of a solvable normal kernel to a chain of G-normal layers that
// are elementary abelian and irreducible for the induced action. Refinement
// order within an abelian kernel: Sylow split, then the A^l power
// filtration, then composition series under conjugation.

#include <string>
#include <utility>
#include <vector>

#include "picurve/cohomology.hpp"
#include "picurve/group.hpp"
#include "picurve/module.hpp"

namespace picurve {

enum class ReductionTag { sylow_split, power_filtration, irreducible_refinement, derived_series };

inline const char* to_string(ReductionTag t) {
    switch (t) {
        case ReductionTag::sylow_split: return "sylow-split";
        case ReductionTag::power_filtration: return "power-filtration";
        case ReductionTag::irreducible_refinement: return "irreducible-refinement";
        case ReductionTag::derived_series: return "derived-series";
    }
    return "?";
}

struct DevissageStep {
    GroupPtr ambient;          // current G_i
    Subgroup kernel_layer;     // A_i, normal in ambient, elementary abelian
    GroupPtr quotient;         // G_{i+1} = G_i / A_i
    GroupHom projection;       // ambient -> quotient
    FlModule layer_module;     // action of G_{i+1} on A_i
    ReductionTag reduction_tag = ReductionTag::derived_series;

    int layer_prime() const { return layer_module.l; }
    int layer_dim() const { return layer_module.dim; }
};

struct DevissageTower {
    GroupPtr target;
    std::vector<DevissageStep> steps;
    GroupPtr final_quotient;
    int kernel_order = 1;  // order of the kernel the tower refines
};

namespace detail {

inline bool subgroup_is_elementary(const Subgroup& s) {
    if (s.order() == 1) return true;
    int l = s.parent->element_order(s.members[1]);
    if (!is_prime(l)) return false;
    for (int x : s.members)
        if (x != 0 && s.parent->element_order(x) != l) return false;
    return true;
}

inline Subgroup image_subgroup(const GroupHom& proj, const Subgroup& s) {
    std::set<int> img;
    for (int x : s.members) img.insert(proj.images[x]);
    Subgroup out;
    out.parent = proj.target;
    out.members.assign(img.begin(), img.end());
    return out;
}

// One full peel of an abelian normal kernel inside `ambient`, appending
// steps and replacing ambient / cumulative projection as layers come off.
inline void peel_abelian(GroupPtr& ambient, std::vector<int>& from_root, Subgroup a, int p,
                         std::vector<DevissageStep>& steps) {
    if (!a.is_abelian()) throw validation_error("devissage kernel is not abelian");
    if (!is_normal(a)) throw validation_error("devissage kernel is not normal");
    if (p != 0 && a.order() % p == 0) throw validation_error("kernel order divisible by p");
    while (a.order() > 1) {
        Subgroup layer = a;
        ReductionTag tag = ReductionTag::derived_series;
        auto sylow = sylow_decomposition(layer);
        if (sylow.size() > 1) {
            layer = sylow.front().second;  // smallest prime first
            tag = ReductionTag::sylow_split;
        }
        while (!subgroup_is_elementary(layer)) {
            layer = multiplication_by_l_submodule(layer);
            tag = ReductionTag::power_filtration;
        }
        ElementaryAbelianBasis basis = analyze_elementary_abelian(layer);
        FlModule ambient_action = conjugation_module_ambient(basis);
        if (!is_irreducible(ambient_action)) {
            Subspace minimal = minimal_submodule(ambient_action);
            std::set<int> members{0};
            long long total = detail::pow_ll(basis.l, minimal.dim());
            for (long long i = 0; i < total; ++i) {
                FlVector coeff = detail::vector_from_index(i, basis.l, minimal.dim());
                FlVector v(basis.dim, 0);
                for (int j = 0; j < minimal.dim(); ++j)
                    v = vec_add(v, vec_scale(coeff[j], minimal.basis[j], basis.l), basis.l);
                members.insert(basis.element_of(v));
            }
            layer.members.assign(members.begin(), members.end());
            basis = analyze_elementary_abelian(layer);
            tag = ReductionTag::irreducible_refinement;
        }
        if (!is_normal(layer)) throw validation_error("refined layer is not normal in the ambient group");

        auto [quo, proj] = quotient(ambient, layer);
        std::vector<int> section_reps(quo->order, -1);
        for (int x = 0; x < ambient->order; ++x)
            if (section_reps[proj.images[x]] < 0) section_reps[proj.images[x]] = x;
        DevissageStep step;
        step.ambient = ambient;
        step.kernel_layer = layer;
        step.quotient = quo;
        step.layer_module = conjugation_module_via_lifts(basis, quo, section_reps);
        step.projection = proj;
        step.reduction_tag = tag;
        if (!is_irreducible(step.layer_module))
            throw validation_error("layer module failed irreducibility");
        steps.push_back(std::move(step));

        a = image_subgroup(proj, a);
        for (int& x : from_root) x = proj.images[x];
        ambient = quo;
    }
}

}  // namespace detail

inline std::vector<DevissageStep> devissage_abelian(GroupPtr g, const Subgroup& a, int p = 0) {
    if (a.parent.get() != g.get()) throw validation_error("kernel belongs to a different group");
    std::vector<DevissageStep> steps;
    std::vector<int> from_root(g->order);
    std::iota(from_root.begin(), from_root.end(), 0);
    GroupPtr ambient = g;
    detail::peel_abelian(ambient, from_root, a, p, steps);
    return steps;
}

inline DevissageTower devissage_solvable(GroupPtr g, const Subgroup& a, int p = 0) {
    if (a.parent.get() != g.get()) throw validation_error("kernel belongs to a different group");
    if (!is_normal(a)) throw validation_error("devissage kernel is not normal");
    if (p != 0 && a.order() % p == 0) throw validation_error("kernel order divisible by p");
    // derived series of A; each term is characteristic in A, hence normal in G
    std::vector<Subgroup> series{a};
    while (true) {
        Subgroup next = commutator_subgroup(series.back());
        if (next.members == series.back().members) break;
        series.push_back(std::move(next));
    }
    if (series.back().order() != 1) throw validation_error("devissage kernel is not solvable");

    DevissageTower tower;
    tower.target = g;
    tower.kernel_order = a.order();
    GroupPtr ambient = g;
    std::vector<int> from_root(g->order);
    std::iota(from_root.begin(), from_root.end(), 0);
    // peel the deepest abelian derived term first
    for (int j = static_cast<int>(series.size()) - 2; j >= 0; --j) {
        std::set<int> img;
        for (int x : series[static_cast<size_t>(j)].members) img.insert(from_root[x]);
        Subgroup current;
        current.parent = ambient;
        current.members.assign(img.begin(), img.end());
        if (!is_normal(current))
            throw validation_error("derived term image is not normal");  // characteristic, so checked, not trusted
        detail::peel_abelian(ambient, from_root, current, p, tower.steps);
    }
    tower.final_quotient = ambient;
    return tower;
}

struct TowerCheck {
    int step_index = -1;
    std::string check;
    bool pass = false;
};

struct TowerReport {
    bool all_pass = true;
    std::vector<TowerCheck> entries;
};

inline TowerReport verify_tower(const DevissageTower& t) {
    TowerReport report;
    auto add = [&](int i, const std::string& what, bool ok) {
        report.entries.push_back({i, what, ok});
        if (!ok) report.all_pass = false;
    };
    long long layer_product = 1;
    for (size_t i = 0; i < t.steps.size(); ++i) {
        const DevissageStep& s = t.steps[i];
        int idx = static_cast<int>(i);
        bool normal = s.kernel_layer.parent.get() == s.ambient.get() && is_normal(s.kernel_layer);
        add(idx, "layer-normal", normal);
        add(idx, "layer-elementary-abelian",
            s.kernel_layer.is_abelian() && detail::subgroup_is_elementary(s.kernel_layer));
        bool irred = false;
        try {
            irred = s.layer_module.dim > 0 && is_irreducible(s.layer_module);
        } catch (const std::exception&) {
            irred = false;
        }
        add(idx, "layer-irreducible", irred);
        add(idx, "orders-multiply",
            static_cast<long long>(s.quotient->order) * s.kernel_layer.order() == s.ambient->order);
        if (i > 0) add(idx, "chain-composes", t.steps[i - 1].quotient->mul == s.ambient->mul);
        layer_product *= s.kernel_layer.order();
    }
    add(-1, "layer-orders-multiply-to-kernel", layer_product == t.kernel_order);
    if (t.final_quotient && t.target)
        add(-1, "final-quotient-order",
            static_cast<long long>(t.final_quotient->order) * t.kernel_order == t.target->order);
    return report;
}

}  // namespace picurve
