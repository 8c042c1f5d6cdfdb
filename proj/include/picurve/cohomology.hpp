#pragma once

// Explicit group cohomology in degrees 1 and 2 via normalized cochains
// indexed by all group elements, extension classes and construction,
// section enumeration, pushouts, and the cup-product form of transgression.

#include <set>
#include <utility>
#include <vector>

#include "picurve/fl.hpp"
#include "picurve/group.hpp"
#include "picurve/module.hpp"

namespace picurve {

inline constexpr long long kDefaultSectionBudget = 1'000'000;

// Convention pin: the transgression in the five-term sequence equals
// kTransgressionSign times the class of the pushed-out extension. Any global
// sign flip lives here and nowhere else.
inline constexpr int kTransgressionSign = -1;

// Normalized cochains vanish when any argument is the identity, so a
// degree-d cochain is a vector over the (n-1)^d nonidentity argument tuples.
struct CochainSpace {
    int degree = 1;
    GroupPtr group;
    int l = 2;
    int dim = 0;             // module dimension
    int space_dim = 0;       // (n-1)^degree * dim
    Subspace cocycles;
    Subspace coboundaries;

    int idx1(int g, int c) const { return (g - 1) * dim + c; }
    int idx2(int a, int b, int c) const {
        int n1 = group->order - 1;
        return ((a - 1) * n1 + (b - 1)) * dim + c;
    }
};

struct CohomologyClass {
    int l = 2;
    int space_dim = 0;
    FlVector rep;  // canonical coset representative: cocycle reduced mod coboundaries

    bool is_zero() const { return vec_is_zero(rep); }
    bool operator==(const CohomologyClass& o) const {
        return l == o.l && space_dim == o.space_dim && rep == o.rep;
    }
};

struct CohomologyResult {
    int dimension = 0;
    CochainSpace space;
};

namespace detail {

inline Subspace coboundary_space1(const FiniteGroup& h, const FlModule& m) {
    int n = h.order, d = m.dim;
    Subspace b(m.l, (n - 1) * d);
    for (int c = 0; c < d; ++c) {
        FlVector v((n - 1) * d, 0);
        for (int g = 1; g < n; ++g)
            for (int i = 0; i < d; ++i)
                v[(g - 1) * d + i] = mod_reduce(m.action[g].at(i, c) - (i == c ? 1 : 0), m.l);
        b.insert(v);
    }
    return b;
}

inline Subspace cocycle_space1(const FiniteGroup& h, const FlModule& m) {
    int n = h.order, d = m.dim;
    int vars = (n - 1) * d;
    // d(gh) - d(g) - g.d(h) = 0 for all nonidentity pairs
    std::vector<FlVector> rows;
    for (int g = 1; g < n; ++g)
        for (int x = 1; x < n; ++x) {
            int gx = h.mul[g][x];
            for (int i = 0; i < d; ++i) {
                FlVector row(vars, 0);
                if (gx != 0) row[(gx - 1) * d + i] = mod_reduce(row[(gx - 1) * d + i] + 1, m.l);
                row[(g - 1) * d + i] = mod_reduce(row[(g - 1) * d + i] - 1, m.l);
                for (int j = 0; j < d; ++j)
                    row[(x - 1) * d + j] = mod_reduce(row[(x - 1) * d + j] - m.action[g].at(i, j), m.l);
                rows.push_back(std::move(row));
            }
        }
    if (rows.empty()) {
        Subspace full(m.l, vars);
        for (int i = 0; i < vars; ++i) {
            FlVector e(vars, 0);
            e[i] = 1;
            full.insert(e);
        }
        return full;
    }
    return kernel(FlMatrix::from_rows(m.l, rows, vars));
}

inline std::vector<int> unique_nonidentity_generators(const FiniteGroup& h) {
    std::vector<int> gens;
    for (int g : h.generators)
        if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    return gens;
}

inline Subspace coboundary_space2(const FiniteGroup& h, const FlModule& m) {
    int n = h.order, d = m.dim;
    int n1 = n - 1;
    Subspace b2(m.l, n1 * n1 * d);
    // image of the normalized 1-cochain basis under delta:
    // (delta d)(a,b) = a.d(b) - d(ab) + d(a)
    for (int g = 1; g < n; ++g)
        for (int c = 0; c < d; ++c) {
            FlVector v(static_cast<size_t>(n1) * n1 * d, 0);
            for (int a = 1; a < n; ++a)
                for (int bb = 1; bb < n; ++bb) {
                    int base = ((a - 1) * n1 + (bb - 1)) * d;
                    if (bb == g)
                        for (int i = 0; i < d; ++i)
                            v[base + i] = mod_reduce(v[base + i] + m.action[a].at(i, c), m.l);
                    if (h.mul[a][bb] == g) v[base + c] = mod_reduce(v[base + c] - 1, m.l);
                    if (a == g) v[base + c] = mod_reduce(v[base + c] + 1, m.l);
                }
            b2.insert(v);
        }
    return b2;
}

inline Subspace cocycle_space2(const FiniteGroup& h, const FlModule& m) {
    int n = h.order, d = m.dim;
    int n1 = n - 1;
    int vars = n1 * n1 * d;
    if (vars == 0) return Subspace(m.l, 0);
    auto gens = unique_nonidentity_generators(h);
    // The normalized cocycle identity for (a, b, c) with c an arbitrary
    // element follows from the generator triples by induction on the BFS
    // word of c (same induction that reduces associativity to generators).
    std::vector<FlVector> rows;
    auto var = [&](int a, int b, int c) { return ((a - 1) * n1 + (b - 1)) * d + c; };
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            for (int s : gens) {
                int ab = h.mul[a][b], bs = h.mul[b][s];
                for (int i = 0; i < d; ++i) {
                    FlVector row(vars, 0);
                    // a.f(b,s) - f(ab,s) + f(a,bs) - f(a,b) = 0
                    for (int j = 0; j < d; ++j)
                        row[var(b, s, j)] = mod_reduce(row[var(b, s, j)] + m.action[a].at(i, j), m.l);
                    if (ab != 0) row[var(ab, s, i)] = mod_reduce(row[var(ab, s, i)] - 1, m.l);
                    if (bs != 0) row[var(a, bs, i)] = mod_reduce(row[var(a, bs, i)] + 1, m.l);
                    row[var(a, b, i)] = mod_reduce(row[var(a, b, i)] - 1, m.l);
                    rows.push_back(std::move(row));
                }
            }
    if (rows.empty()) {
        Subspace full(m.l, vars);
        for (int i = 0; i < vars; ++i) {
            FlVector e(vars, 0);
            e[i] = 1;
            full.insert(e);
        }
        return full;
    }
    return kernel(FlMatrix::from_rows(m.l, rows, vars));
}

}  // namespace detail

inline CohomologyResult h1(GroupPtr h, const FlModule& m) {
    if (m.group.get() != h.get() && m.group->mul != h->mul)
        throw validation_error("module does not belong to the given group");
    CohomologyResult r;
    r.space.degree = 1;
    r.space.group = h;
    r.space.l = m.l;
    r.space.dim = m.dim;
    r.space.space_dim = (h->order - 1) * m.dim;
    r.space.cocycles = detail::cocycle_space1(*h, m);
    r.space.coboundaries = detail::coboundary_space1(*h, m);
    r.dimension = r.space.cocycles.dim() - r.space.coboundaries.dim();
    return r;
}

inline CohomologyResult h2(GroupPtr h, const FlModule& m) {
    if (m.group.get() != h.get() && m.group->mul != h->mul)
        throw validation_error("module does not belong to the given group");
    CohomologyResult r;
    r.space.degree = 2;
    r.space.group = h;
    r.space.l = m.l;
    r.space.dim = m.dim;
    int n1 = h->order - 1;
    r.space.space_dim = n1 * n1 * m.dim;
    r.space.cocycles = detail::cocycle_space2(*h, m);
    r.space.coboundaries = detail::coboundary_space2(*h, m);
    for (const auto& row : r.space.coboundaries.basis)
        if (!r.space.cocycles.contains(row))
            throw validation_error("coboundary outside cocycle space");
    r.dimension = r.space.cocycles.dim() - r.space.coboundaries.dim();
    return r;
}

// A short exact sequence 1 -> A -> G -> H -> 1 with A elementary abelian.
struct ExtensionData {
    GroupPtr total;
    Subgroup kernel;
    GroupPtr quotient_group;
    GroupHom projection;
    ElementaryAbelianBasis kernel_basis;
    FlModule induced;                 // conjugation action of the quotient on A
    std::vector<int> section_reps;    // canonical set-theoretic section (min index per fiber)

    int kernel_l() const { return kernel_basis.l; }
    int kernel_dim() const { return kernel_basis.dim; }
};

inline ExtensionData make_extension_data(GroupPtr g, const Subgroup& a) {
    if (a.parent.get() != g.get()) throw validation_error("kernel belongs to a different group");
    if (!is_normal(a)) throw validation_error("kernel is not normal");
    ExtensionData e;
    e.total = g;
    e.kernel = a;
    e.kernel_basis = analyze_elementary_abelian(a);
    auto [quo, proj] = quotient(g, a);
    e.quotient_group = quo;
    e.projection = std::move(proj);
    e.section_reps.assign(quo->order, -1);
    for (int x = 0; x < g->order; ++x)
        if (e.section_reps[e.projection.images[x]] < 0) e.section_reps[e.projection.images[x]] = x;
    e.induced = conjugation_module_via_lifts(e.kernel_basis, quo, e.section_reps);
    return e;
}

// Full n x n cocycle table with values in module coordinates.
using Cocycle2 = std::vector<std::vector<FlVector>>;

namespace detail {

inline Cocycle2 extension_cocycle(const ExtensionData& e) {
    const FiniteGroup& g = *e.total;
    const FiniteGroup& h = *e.quotient_group;
    int n = h.order;
    Cocycle2 f(n, std::vector<FlVector>(n, FlVector(e.kernel_dim(), 0)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int t = g.mul[e.section_reps[a]][e.section_reps[b]];
            int k = g.mul[t][g.inv[e.section_reps[h.mul[a][b]]]];
            auto it = e.kernel_basis.coords.find(k);
            if (it == e.kernel_basis.coords.end())
                throw validation_error("section defect lands outside the kernel");
            f[a][b] = it->second;
        }
    return f;
}

inline void check_cocycle(const FiniteGroup& h, const FlModule& m, const Cocycle2& f) {
    int n = h.order;
    if (static_cast<int>(f.size()) != n) throw validation_error("cocycle table has wrong shape");
    for (const auto& row : f) {
        if (static_cast<int>(row.size()) != n) throw validation_error("cocycle table has wrong shape");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != m.dim) throw validation_error("cocycle value has wrong dimension");
    }
    for (int x = 0; x < n; ++x)
        if (!vec_is_zero(f[0][x]) || !vec_is_zero(f[x][0]))
            throw validation_error("cocycle is not normalized");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // f(a,b) + f(ab,c) = a.f(b,c) + f(a,bc)
                FlVector lhs = vec_add(f[a][b], f[h.mul[a][b]][c], m.l);
                FlVector rhs = vec_add(m.apply(a, f[b][c]), f[a][h.mul[b][c]], m.l);
                if (lhs != rhs) throw validation_error("table is not a 2-cocycle");
            }
}

inline FlVector pack_cocycle(const FiniteGroup& h, int dim, int l, const Cocycle2& f) {
    int n1 = h.order - 1;
    FlVector v(static_cast<size_t>(n1) * n1 * dim, 0);
    for (int a = 1; a < h.order; ++a)
        for (int b = 1; b < h.order; ++b)
            for (int c = 0; c < dim; ++c)
                v[((a - 1) * n1 + (b - 1)) * dim + c] = mod_reduce(f[a][b][c], l);
    return v;
}

inline Cocycle2 unpack_cocycle(const FiniteGroup& h, int dim, const FlVector& v) {
    int n = h.order, n1 = n - 1;
    Cocycle2 f(n, std::vector<FlVector>(n, FlVector(dim, 0)));
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            for (int c = 0; c < dim; ++c) f[a][b][c] = v[((a - 1) * n1 + (b - 1)) * dim + c];
    return f;
}

}  // namespace detail

// Class of a verified 2-cocycle vector: canonical representative modulo the
// coboundary space.
inline CohomologyClass class_of_cocycle2(GroupPtr h, const FlModule& m, const FlVector& packed) {
    Subspace b2 = detail::coboundary_space2(*h, m);
    CohomologyClass c;
    c.l = m.l;
    c.space_dim = b2.ambient_dim;
    c.rep = b2.reduce(packed);
    return c;
}

inline CohomologyClass extension_class(const ExtensionData& e) {
    Cocycle2 f = detail::extension_cocycle(e);
    detail::check_cocycle(*e.quotient_group, e.induced, f);
    FlVector packed = detail::pack_cocycle(*e.quotient_group, e.kernel_dim(), e.kernel_l(), f);
    return class_of_cocycle2(e.quotient_group, e.induced, packed);
}

// Group on pairs (m, h) with (m,h)(m',h') = (m + h.m' + f(h,h'), hh');
// element index = h * l^dim + lex index of m.
inline ExtensionData build_extension(GroupPtr h, const FlModule& m, const Cocycle2& f) {
    detail::check_cocycle(*h, m, f);
    long long big_l = detail::pow_ll(m.l, m.dim);
    long long total_ll = big_l * h->order;
    if (total_ll > kDefaultGroupSizeCap) throw size_limit_error("extension exceeds group size cap");
    int big = static_cast<int>(big_l);
    int n = static_cast<int>(total_ll);
    auto vec_of = [&](int mi) { return detail::vector_from_index(mi, m.l, m.dim); };
    auto idx_of = [&](const FlVector& v) {
        long long idx = 0;
        for (int c : v) idx = idx * m.l + c;
        return static_cast<int>(idx);
    };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        int h1i = x / big, m1 = x % big;
        FlVector v1 = vec_of(m1);
        for (int y = 0; y < n; ++y) {
            int h2i = y / big, m2 = y % big;
            FlVector v = vec_add(vec_add(v1, m.apply(h1i, vec_of(m2)), m.l), f[h1i][h2i], m.l);
            mul[x][y] = h->mul[h1i][h2i] * big + idx_of(v);
        }
    }
    std::vector<int> gens;
    for (int gh : h->generators) gens.push_back(gh * big);
    for (int j = 0; j < m.dim; ++j) {
        FlVector e(m.dim, 0);
        e[j] = 1;
        gens.push_back(idx_of(e));
    }
    GroupPtr total = make_group(std::move(mul), std::move(gens));

    ExtensionData e;
    e.total = total;
    e.kernel.parent = total;
    e.kernel.members.resize(big);
    std::iota(e.kernel.members.begin(), e.kernel.members.end(), 0);
    e.quotient_group = h;
    e.projection.source = total;
    e.projection.target = h;
    e.projection.images.resize(n);
    for (int x = 0; x < n; ++x) e.projection.images[x] = x / big;
    e.section_reps.resize(h->order);
    for (int q = 0; q < h->order; ++q) e.section_reps[q] = q * big;
    // kernel basis aligned with the module coordinates
    e.kernel_basis.parent = total;
    e.kernel_basis.subgroup = e.kernel;
    e.kernel_basis.l = m.l;
    e.kernel_basis.dim = m.dim;
    for (int j = 0; j < m.dim; ++j) {
        FlVector ej(m.dim, 0);
        ej[j] = 1;
        e.kernel_basis.basis_elements.push_back(idx_of(ej));
    }
    e.kernel_basis.element_by_index.resize(big);
    for (int mi = 0; mi < big; ++mi) {
        e.kernel_basis.element_by_index[mi] = mi;
        e.kernel_basis.coords[mi] = vec_of(mi);
    }
    e.induced = conjugation_module_via_lifts(e.kernel_basis, h, e.section_reps);
    return e;
}

inline Cocycle2 zero_cocycle(const FiniteGroup& h, int dim) {
    return Cocycle2(h.order, std::vector<FlVector>(h.order, FlVector(dim, 0)));
}

inline ExtensionData semidirect(GroupPtr h, const FlModule& m) {
    return build_extension(std::move(h), m, zero_cocycle(*m.group, m.dim));
}

// All group-theoretic sections of the projection, by enumerating
// kernel-translates of lifted generator images.
inline std::vector<GroupHom> enumerate_sections(const ExtensionData& e,
                                                long long budget = kDefaultSectionBudget) {
    const FiniteGroup& h = *e.quotient_group;
    const FiniteGroup& g = *e.total;
    auto gens = detail::unique_nonidentity_generators(h);
    if (gens.empty()) {
        GroupHom s;
        s.source = e.quotient_group;
        s.target = e.total;
        s.images.assign(h.order, 0);
        return {s};
    }
    long long count = 1;
    for (size_t j = 0; j < gens.size(); ++j) {
        count *= e.kernel.order();
        if (count > budget) throw budget_error("section enumeration budget exceeded", 0);
    }
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t j = 0; j < gens.size(); ++j)
        for (int x = 0; x < g.order; ++x)
            if (e.projection.images[x] == gens[j]) candidates[j].push_back(x);
    FiniteGroup h_over_gens = h;
    h_over_gens.generators = gens;
    auto words = element_words(h_over_gens);

    std::vector<GroupHom> sections;
    std::set<std::vector<int>> seen;
    std::vector<size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<int> images(h.order, 0);
        bool ok = true;
        for (int x = 0; x < h.order && ok; ++x) {
            int y = 0;
            for (int j : words[x]) y = g.mul[y][candidates[static_cast<size_t>(j)][pick[static_cast<size_t>(j)]]];
            images[x] = y;
            if (e.projection.images[y] != x) ok = false;
        }
        if (ok) {
            for (int a = 0; a < h.order && ok; ++a)
                for (int b = 0; b < h.order && ok; ++b)
                    if (images[h.mul[a][b]] != g.mul[images[a]][images[b]]) ok = false;
        }
        if (ok && seen.insert(images).second) {
            GroupHom s;
            s.source = e.quotient_group;
            s.target = e.total;
            s.images = std::move(images);
            sections.push_back(std::move(s));
        }
        size_t j = 0;
        while (j < pick.size() && ++pick[j] == candidates[j].size()) pick[j++] = 0;
        if (j == pick.size()) break;
    }
    return sections;
}

struct SectionCountReport {
    long long fixed_count = 0;    // |A^H|
    long long section_count = 0;  // |S|
    long long h1_count = 0;       // |H^1(H,A)|
    long long kernel_count = 0;   // |A|
    bool holds = false;
};

// |A^H| * |S| = |H^1(H,A)| * |A|, asserted exactly; split input only.
inline SectionCountReport section_count_identity_check(const ExtensionData& e,
                                                       long long budget = kDefaultSectionBudget) {
    auto sections = enumerate_sections(e, budget);
    if (sections.empty())
        throw validation_error("section-count identity applies to split extensions only");
    SectionCountReport r;
    r.section_count = static_cast<long long>(sections.size());
    r.fixed_count = detail::pow_ll(e.kernel_l(), fixed_subspace(e.induced).dim());
    r.h1_count = detail::pow_ll(e.kernel_l(), h1(e.quotient_group, e.induced).dimension);
    r.kernel_count = e.kernel.order();
    r.holds = r.fixed_count * r.section_count == r.h1_count * r.kernel_count;
    return r;
}

namespace detail {

inline void check_equivariant(const FlMatrix& u, const FlModule& from, const FlModule& to) {
    if (u.l != from.l || u.l != to.l || u.cols != from.dim || u.rows != to.dim)
        throw validation_error("equivariant map has incompatible shape");
    if (from.group->mul != to.group->mul)
        throw validation_error("modules live over different groups");
    for (int x = 0; x < from.group->order; ++x)
        if (!(mat_mul(u, from.action[x]) == mat_mul(to.action[x], u)))
            throw validation_error("map is not H-equivariant");
}

}  // namespace detail

// Push the extension along an equivariant map u: B -> A; the class becomes
// u ∘ f for any cocycle f of E.
inline ExtensionData pushout_extension(const ExtensionData& e, const FlMatrix& u, const FlModule& target) {
    detail::check_equivariant(u, e.induced, target);
    Cocycle2 f = detail::extension_cocycle(e);
    int n = e.quotient_group->order;
    Cocycle2 uf(n, std::vector<FlVector>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) uf[a][b] = mat_apply(u, f[a][b]);
    return build_extension(e.quotient_group, target, uf);
}

// Cup product H^0(H, Hom(B,A)) x H^2(H,B) -> H^2(H,A): apply u to a
// representative cocycle slotwise.
inline CohomologyClass cup_h0_h2(const FlMatrix& u, const CohomologyClass& gamma, const FlModule& from,
                                 const FlModule& target) {
    detail::check_equivariant(u, from, target);
    GroupPtr h = from.group;
    Cocycle2 f = detail::unpack_cocycle(*h, from.dim, gamma.rep);
    int n = h->order;
    Cocycle2 uf(n, std::vector<FlVector>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) uf[a][b] = mat_apply(u, f[a][b]);
    FlVector packed = detail::pack_cocycle(*h, target.dim, target.l, uf);
    return class_of_cocycle2(h, target, packed);
}

inline CohomologyClass scale_class(const CohomologyClass& c, int factor) {
    CohomologyClass out = c;
    out.rep = vec_scale(factor, c.rep, c.l);
    return out;
}

// Transgression image of u under the pinned sign convention.
inline CohomologyClass transgression_class(const ExtensionData& e, const FlMatrix& u, const FlModule& target) {
    return scale_class(extension_class(pushout_extension(e, u, target)), kTransgressionSign);
}

}  // namespace picurve
