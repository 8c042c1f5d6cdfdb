#pragma once

// Grothendieck–Ogg–Shafarevich calculator: Swan invariants from caller-
// supplied higher ramification filtrations, conductor exponents, and Euler
// characteristics of projective and affine curves.

#include <string>
#include <vector>

#include "picurve/group.hpp"
#include "picurve/module.hpp"
#include "picurve/rational.hpp"
#include "picurve/realizability.hpp"

namespace picurve {

struct RamificationFiltration {
    GroupPtr galois_group;          // decomposition group G_0
    std::vector<Subgroup> chain;    // G_0 ⊇ G_1 ⊇ ... (trivial beyond the end)
    FlModule generic_module;        // F at the generic point, module for galois_group

    void validate() const {
        if (chain.empty()) throw validation_error("filtration chain must contain G_0");
        if (chain.front().order() != galois_group->order)
            throw validation_error("G_0 must be the full decomposition group");
        for (const auto& s : chain)
            if (s.parent.get() != galois_group.get())
                throw validation_error("chain subgroup belongs to a different group");
        for (size_t i = 1; i < chain.size(); ++i)
            for (int x : chain[i].members)
                if (!chain[i - 1].contains(x)) throw validation_error("filtration chain not decreasing");
        if (generic_module.group.get() != galois_group.get() &&
            generic_module.group->mul != galois_group->mul)
            throw validation_error("generic module is not a module for the decomposition group");
    }

    bool is_tame() const { return chain.size() < 2 || chain[1].order() == 1; }
};

struct PointData {
    RamificationFiltration filtration;
    int stalk_dim = 0;

    void validate() const {
        filtration.validate();
        if (stalk_dim < 0 || stalk_dim > filtration.generic_module.dim)
            throw validation_error("stalk dimension out of range");
    }
};

// Swan invariant: sum over i >= 1 of (g_i/g_0) * dim(F / F^{G_i}).
inline Rational swan(const RamificationFiltration& f) {
    f.validate();
    Rational total(0);
    long long g0 = f.chain.front().order();
    for (size_t i = 1; i < f.chain.size(); ++i) {
        const Subgroup& gi = f.chain[i];
        if (gi.order() == 1) continue;
        int codim = f.generic_module.dim - fixed_subspace_under(f.generic_module, gi.members).dim();
        total = total + Rational(gi.order(), g0) * Rational(codim);
    }
    return total;
}

// Conductor exponent: swan + dim F_generic - dim F_x.
inline Rational conductor_exponent(const PointData& p) {
    p.validate();
    return swan(p.filtration) + Rational(p.filtration.generic_module.dim - p.stalk_dim);
}

struct EulerReport {
    long long chi = 0;
    std::vector<Rational> swans;
    std::vector<Rational> epsilons;
    std::string formula;  // human-readable trace
};

namespace detail {

inline long long assert_integer(const Rational& r, const char* what) {
    if (!r.is_integer()) throw validation_error(std::string(what) + " is not an integer");
    return r.num;
}

}  // namespace detail

// chi(X̄, F) = (2 - 2g) dim F - sum of conductor exponents.
inline EulerReport euler_char_projective(int genus, int dim_generic, const std::vector<PointData>& points) {
    if (genus < 0 || dim_generic < 0) throw validation_error("negative genus or dimension");
    EulerReport rep;
    Rational total(static_cast<long long>(2 - 2 * genus) * dim_generic);
    rep.formula = "(2-2g)*dim";
    for (const auto& p : points) {
        Rational a = swan(p.filtration);
        Rational eps = conductor_exponent(p);
        rep.swans.push_back(a);
        rep.epsilons.push_back(eps);
        total = total - eps;
        rep.formula += " - " + eps.str();
    }
    rep.chi = detail::assert_integer(total, "projective Euler characteristic");
    return rep;
}

// chi(X, F|X) = (2 - 2g - r) dim F - sum of Swan invariants; the sheaf must
// be unramified on X itself, so ramified points lie among the r removed ones.
inline EulerReport euler_char_affine(const CurveSignature& sig, int dim_generic,
                                     const std::vector<Rational>& swans_at_all_points) {
    sig.validate();
    if (dim_generic < 0) throw validation_error("negative dimension");
    EulerReport rep;
    Rational total(static_cast<long long>(2 - 2 * sig.g - sig.r) * dim_generic);
    rep.formula = "(2-2g-r)*dim";
    for (const auto& a : swans_at_all_points) {
        rep.swans.push_back(a);
        total = total - a;
        rep.formula += " - " + a.str();
    }
    rep.chi = detail::assert_integer(total, "affine Euler characteristic");
    return rep;
}

// h^1(X, underline A) from the affine Euler characteristic, using
// h^0 = dim A^H and h^2 = 0 (affine curves have cohomological dimension 1).
// Prime-to-p acting groups force all Swan terms to vanish.
inline int h1_affine_from_gos(const CurveSignature& sig, const FlModule& m) {
    sig.validate();
    if (m.l == sig.p) throw scope_error("module characteristic equals the curve characteristic");
    if (sig.p != 0 && m.group->order % sig.p == 0)
        throw scope_error("acting group order divisible by p: not tame");
    EulerReport chi = euler_char_affine(sig, m.dim, {});
    long long h0 = fixed_subspace(m).dim();
    long long h1 = h0 - chi.chi;
    if (h1 < 0) throw validation_error("negative h1 from the Euler characteristic");
    return static_cast<int>(h1);
}

}  // namespace picurve
