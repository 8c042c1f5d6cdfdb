#pragma once

// F_l[H]-modules: a validated linear action of a finite group on F_l^dim,
// plus fixed points, spinning, irreducibility and composition factors.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "picurve/fl.hpp"
#include "picurve/group.hpp"

namespace picurve {

inline constexpr long long kDefaultSpinCap = 1 << 20;  // cap on l^dim enumerations

struct FlModule {
    int l = 2;
    int dim = 0;
    GroupPtr group;
    std::vector<FlMatrix> action;  // one invertible dim x dim matrix per element

    FlVector apply(int g, const FlVector& v) const { return mat_apply(action[g], v); }
};

namespace detail {

inline void verify_module(const FlModule& m) {
    const FiniteGroup& g = *m.group;
    if (static_cast<int>(m.action.size()) != g.order)
        throw validation_error("module needs one matrix per group element");
    FlMatrix id = FlMatrix::identity(m.l, m.dim);
    if (!(m.action[0] == id)) throw validation_error("identity must act trivially");
    for (const auto& mat : m.action) {
        if (mat.l != m.l || mat.rows != m.dim || mat.cols != m.dim)
            throw validation_error("action matrix shape mismatch");
        if (!inverse(mat)) throw validation_error("action matrix is not invertible");
    }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (!(m.action[g.mul[a][b]] == mat_mul(m.action[a], m.action[b])))
                throw validation_error("assignment does not define a representation");
}

inline long long pow_ll(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// i-th vector of F_l^dim in lexicographic order (first coordinate most
// significant).
inline FlVector vector_from_index(long long i, int l, int dim) {
    FlVector v(dim, 0);
    for (int j = dim - 1; j >= 0; --j) {
        v[j] = static_cast<int>(i % l);
        i /= l;
    }
    return v;
}

}  // namespace detail

inline FlModule module_from_generator_action(GroupPtr h, int l, const std::vector<FlMatrix>& gen_matrices,
                                             int dim) {
    if (!is_prime(l)) throw validation_error("l must be prime");
    if (gen_matrices.size() != h->generators.size())
        throw validation_error("need one matrix per group generator");
    FlModule m;
    m.l = l;
    m.dim = dim;
    m.group = h;
    auto words = element_words(*h);
    m.action.resize(h->order, FlMatrix::identity(l, dim));
    for (int x = 0; x < h->order; ++x) {
        FlMatrix acc = FlMatrix::identity(l, dim);
        for (int j : words[x]) acc = mat_mul(acc, gen_matrices[j]);
        m.action[x] = std::move(acc);
    }
    detail::verify_module(m);
    return m;
}

inline FlModule trivial_module(GroupPtr h, int l, int dim) {
    FlModule m;
    m.l = l;
    m.dim = dim;
    m.group = std::move(h);
    m.action.assign(m.group->order, FlMatrix::identity(l, dim));
    return m;
}

// ∩_h ker(ρ(h) − I), computed over generators.
inline Subspace fixed_subspace(const FlModule& m) {
    const auto& gens = m.group->generators;
    FlMatrix stacked(m.l, static_cast<int>(gens.size()) * m.dim, m.dim);
    for (size_t k = 0; k < gens.size(); ++k)
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j)
                stacked.at(static_cast<int>(k) * m.dim + i, j) =
                    mod_reduce(m.action[gens[k]].at(i, j) - (i == j ? 1 : 0), m.l);
    return kernel(stacked);  // no generators -> no constraints -> full space
}

// Fixed points under an arbitrary element subset (used for ramification
// subgroups, which need not come with generators).
inline Subspace fixed_subspace_under(const FlModule& m, const std::vector<int>& members) {
    std::vector<int> nontrivial;
    for (int x : members)
        if (x != 0) nontrivial.push_back(x);
    if (nontrivial.empty()) {
        Subspace full(m.l, m.dim);
        for (int i = 0; i < m.dim; ++i) {
            FlVector e(m.dim, 0);
            e[i] = 1;
            full.insert(e);
        }
        return full;
    }
    FlMatrix stacked(m.l, static_cast<int>(nontrivial.size()) * m.dim, m.dim);
    for (size_t k = 0; k < nontrivial.size(); ++k)
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j)
                stacked.at(static_cast<int>(k) * m.dim + i, j) =
                    mod_reduce(m.action[nontrivial[k]].at(i, j) - (i == j ? 1 : 0), m.l);
    return kernel(stacked);
}

// Smallest H-stable subspace containing v.
inline Subspace spin(const FlModule& m, const FlVector& v) {
    Subspace s(m.l, m.dim);
    std::vector<FlVector> todo;
    if (s.insert(v)) todo.push_back(v);
    while (!todo.empty()) {
        FlVector w = std::move(todo.back());
        todo.pop_back();
        for (int gi : m.group->generators) {
            FlVector u = m.apply(gi, w);
            if (s.insert(u)) todo.push_back(u);
        }
    }
    return s;
}

inline bool is_irreducible(const FlModule& m, long long cap = kDefaultSpinCap) {
    if (m.dim == 0) throw validation_error("irreducibility is undefined for the zero module");
    long long total = detail::pow_ll(m.l, m.dim);
    if (total > cap) throw size_limit_error("vector enumeration cap exceeded");
    // spin(cv) = spin(v): monic vectors suffice
    for (long long i = 1; i < total; ++i) {
        FlVector v = detail::vector_from_index(i, m.l, m.dim);
        int lead = 0;
        while (v[lead] == 0) ++lead;
        if (v[lead] != 1) continue;
        if (spin(m, v).dim() < m.dim) return false;
    }
    return true;
}

// Module structure on a stable subspace, in its rref basis. For u in the
// subspace, coordinates are the entries of u at the pivot columns.
inline FlModule submodule_structure(const FlModule& m, const Subspace& s) {
    FlModule sub;
    sub.l = m.l;
    sub.dim = s.dim();
    sub.group = m.group;
    sub.action.reserve(m.action.size());
    for (const auto& mat : m.action) {
        FlMatrix a(m.l, sub.dim, sub.dim);
        for (int j = 0; j < sub.dim; ++j) {
            FlVector img = mat_apply(mat, s.basis[j]);
            if (!s.contains(img)) throw validation_error("subspace is not stable");
            for (int i = 0; i < sub.dim; ++i) a.at(i, j) = img[s.pivots[i]];
        }
        sub.action.push_back(std::move(a));
    }
    return sub;
}

// Quotient module M/S. Quotient coordinates are the non-pivot entries of the
// reduction mod S; lift_cols records the ambient column each coordinate lifts to.
struct QuotientModule {
    FlModule mod;
    std::vector<int> lift_cols;

    FlVector project(const Subspace& s, const FlVector& v) const {
        FlVector w = s.reduce(v);
        FlVector out(lift_cols.size());
        for (size_t i = 0; i < lift_cols.size(); ++i) out[i] = w[lift_cols[i]];
        return out;
    }
};

inline QuotientModule quotient_module(const FlModule& m, const Subspace& s) {
    std::vector<bool> is_pivot(m.dim, false);
    for (int p : s.pivots) is_pivot[p] = true;
    QuotientModule q;
    for (int j = 0; j < m.dim; ++j)
        if (!is_pivot[j]) q.lift_cols.push_back(j);
    int qd = static_cast<int>(q.lift_cols.size());
    q.mod.l = m.l;
    q.mod.dim = qd;
    q.mod.group = m.group;
    for (const auto& mat : m.action) {
        FlMatrix a(m.l, qd, qd);
        for (int j = 0; j < qd; ++j) {
            FlVector e(m.dim, 0);
            e[q.lift_cols[j]] = 1;
            FlVector img = s.reduce(mat_apply(mat, e));
            for (int i = 0; i < qd; ++i) a.at(i, j) = img[q.lift_cols[i]];
        }
        q.mod.action.push_back(std::move(a));
    }
    return q;
}

// Minimal nonzero submodule: spin of the canonically (lexicographically)
// smallest vector achieving minimal spin dimension.
inline Subspace minimal_submodule(const FlModule& m, long long cap = kDefaultSpinCap) {
    if (m.dim == 0) throw validation_error("zero module has no minimal submodule");
    long long total = detail::pow_ll(m.l, m.dim);
    if (total > cap) throw size_limit_error("vector enumeration cap exceeded");
    Subspace best;
    int best_dim = m.dim + 1;
    for (long long i = 1; i < total; ++i) {
        Subspace s = spin(m, detail::vector_from_index(i, m.l, m.dim));
        if (s.dim() < best_dim) {
            best_dim = s.dim();
            best = std::move(s);
            if (best_dim == 1) break;
        }
    }
    return best;
}

struct CompositionSeries {
    std::vector<Subspace> chain;   // 0 = V_0 ⊂ ... ⊂ V_k = full, ambient coordinates
    std::vector<FlModule> factors; // factors[i] ≅ V_{i+1}/V_i, irreducible
};

inline CompositionSeries composition_series(const FlModule& m, long long cap = kDefaultSpinCap) {
    CompositionSeries out;
    out.chain.emplace_back(m.l, m.dim);
    // lift: columns map current quotient coordinates into the ambient space
    FlModule cur = m;
    std::vector<FlVector> lift;  // ambient vectors, one per current coordinate
    for (int i = 0; i < m.dim; ++i) {
        FlVector e(m.dim, 0);
        e[i] = 1;
        lift.push_back(std::move(e));
    }
    while (cur.dim > 0) {
        Subspace w = minimal_submodule(cur, cap);
        out.factors.push_back(submodule_structure(cur, w));
        Subspace next = out.chain.back();
        for (const auto& row : w.basis) {
            FlVector ambient(m.dim, 0);
            for (int j = 0; j < cur.dim; ++j)
                if (row[j] != 0) ambient = vec_add(ambient, vec_scale(row[j], lift[j], m.l), m.l);
            next.insert(ambient);
        }
        out.chain.push_back(std::move(next));
        QuotientModule q = quotient_module(cur, w);
        std::vector<FlVector> new_lift;
        for (int col : q.lift_cols) new_lift.push_back(lift[col]);
        lift = std::move(new_lift);
        cur = std::move(q.mod);
    }
    return out;
}

// ---- bridge between elementary abelian subgroups and F_l-modules ----

struct ElementaryAbelianBasis {
    GroupPtr parent;
    Subgroup subgroup;
    int l = 2;
    int dim = 0;
    std::vector<int> basis_elements;            // independent generators, ascending
    std::map<int, FlVector> coords;             // element index -> coordinates
    std::vector<int> element_by_index;          // lex coordinate index -> element

    int element_of(const FlVector& v) const {
        long long idx = 0;
        for (int c : v) idx = idx * l + c;
        return element_by_index[static_cast<size_t>(idx)];
    }
};

inline ElementaryAbelianBasis analyze_elementary_abelian(const Subgroup& a) {
    if (!a.is_abelian()) throw validation_error("subgroup is not abelian");
    const FiniteGroup& g = *a.parent;
    int m = a.order();
    ElementaryAbelianBasis out;
    out.parent = a.parent;
    out.subgroup = a;
    if (m == 1) {
        out.l = 2;  // immaterial for the trivial group
        out.dim = 0;
        out.element_by_index = {0};
        out.coords[0] = {};
        return out;
    }
    int l = g.element_order(a.members[1]);
    if (!is_prime(l)) throw validation_error("subgroup is not elementary abelian");
    for (int x : a.members)
        if (x != 0 && g.element_order(x) != l)
            throw validation_error("subgroup is not elementary abelian");
    out.l = l;
    // greedy independent generators
    Subgroup span = trivial_subgroup(a.parent);
    for (int x : a.members) {
        if (span.contains(x)) continue;
        out.basis_elements.push_back(x);
        std::vector<int> seeds = span.members;
        seeds.push_back(x);
        span = close(a.parent, seeds);
    }
    out.dim = static_cast<int>(out.basis_elements.size());
    long long total = detail::pow_ll(l, out.dim);
    if (total != m) throw validation_error("basis does not span the subgroup");
    out.element_by_index.resize(static_cast<size_t>(total));
    for (long long i = 0; i < total; ++i) {
        FlVector v = detail::vector_from_index(i, l, out.dim);
        int e = 0;
        for (int j = 0; j < out.dim; ++j)
            for (int c = 0; c < v[j]; ++c) e = g.mul[e][out.basis_elements[j]];
        out.element_by_index[static_cast<size_t>(i)] = e;
        out.coords[e] = std::move(v);
    }
    if (out.coords.size() != static_cast<size_t>(m))
        throw validation_error("coordinate map is not a bijection");
    return out;
}

// Conjugation action of selected parent-group elements on an elementary
// abelian subgroup, as matrices in the chosen basis.
inline FlMatrix conjugation_matrix(const ElementaryAbelianBasis& basis, int actor) {
    const FiniteGroup& g = *basis.parent;
    FlMatrix mat(basis.l, basis.dim, basis.dim);
    for (int j = 0; j < basis.dim; ++j) {
        int image = g.conj(actor, basis.basis_elements[j]);
        auto it = basis.coords.find(image);
        if (it == basis.coords.end()) throw validation_error("subgroup is not normalized by actor");
        for (int i = 0; i < basis.dim; ++i) mat.at(i, j) = it->second[i];
    }
    return mat;
}

// Module for the ambient group acting by conjugation.
inline FlModule conjugation_module_ambient(const ElementaryAbelianBasis& basis) {
    FlModule m;
    m.l = basis.l;
    m.dim = basis.dim;
    m.group = basis.parent;
    for (int x = 0; x < basis.parent->order; ++x) m.action.push_back(conjugation_matrix(basis, x));
    detail::verify_module(m);
    return m;
}

// Module for a quotient group acting through lifts (one lift per quotient
// element; well defined because the subgroup is abelian).
inline FlModule conjugation_module_via_lifts(const ElementaryAbelianBasis& basis, GroupPtr quotient_group,
                                             const std::vector<int>& lifts) {
    FlModule m;
    m.l = basis.l;
    m.dim = basis.dim;
    m.group = std::move(quotient_group);
    for (int q = 0; q < m.group->order; ++q) m.action.push_back(conjugation_matrix(basis, lifts[q]));
    detail::verify_module(m);
    return m;
}

// Subgroup of l-th powers A^l of an abelian l-group.
inline Subgroup multiplication_by_l_submodule(const Subgroup& a) {
    if (!a.is_abelian()) throw validation_error("A^l requires an abelian subgroup");
    const FiniteGroup& g = *a.parent;
    int m = a.order();
    if (m == 1) return a;
    int l = 0;
    for (int q = 2; q <= m; ++q)
        if (m % q == 0) {
            l = q;
            break;
        }
    int rest = m;
    while (rest % l == 0) rest /= l;
    if (rest != 1) throw validation_error("A^l requires an l-group (mixed-order input)");
    std::set<int> powers;
    for (int x : a.members) {
        int y = 0;
        for (int c = 0; c < l; ++c) y = g.mul[y][x];
        powers.insert(y);
    }
    Subgroup out;
    out.parent = a.parent;
    out.members.assign(powers.begin(), powers.end());
    for (int x : out.members)
        for (int y : out.members)
            if (!out.contains(g.mul[x][y])) throw validation_error("power set is not closed");
    return out;
}

}  // namespace picurve
