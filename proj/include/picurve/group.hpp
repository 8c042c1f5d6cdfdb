#pragma once

// Finite groups as validated multiplication tables over canonically ordered
// elements. Element 0 is always the identity. Groups built from permutation
// generators are ordered breadth-first by word length, ties broken by
// lexicographic word comparison, so identical input reproduces identical
// tables.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "picurve/errors.hpp"

namespace picurve {

inline constexpr int kDefaultGroupSizeCap = 10000;
inline constexpr long long kDefaultTupleBudget = 2'000'000;

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct FiniteGroup {
    int order = 1;
    std::vector<std::vector<int>> mul;  // mul[a][b]
    std::vector<int> inv;
    std::vector<int> generators;  // element indices used at construction

    int op(int a, int b) const { return mul[a][b]; }
    int conj(int g, int x) const { return mul[mul[g][x]][inv[g]]; }

    int element_order(int g) const {
        int n = 1, x = g;
        while (x != 0) {
            x = mul[x][g];
            ++n;
        }
        return n;
    }

    bool is_abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (mul[a][b] != mul[b][a]) return false;
        return true;
    }
};

namespace detail {

inline std::vector<int> compute_inverses(const std::vector<std::vector<int>>& mul) {
    int n = static_cast<int>(mul.size());
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == 0 && mul[b][a] == 0) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0) throw validation_error("element without two-sided inverse");
    }
    return inv;
}

inline void check_table_shape(const std::vector<std::vector<int>>& mul) {
    int n = static_cast<int>(mul.size());
    if (n == 0) throw validation_error("empty multiplication table");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n) throw validation_error("ragged multiplication table");
        for (int v : row)
            if (v < 0 || v >= n) throw validation_error("table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (mul[0][a] != a || mul[a][0] != a) throw validation_error("index 0 is not the identity");
}

}  // namespace detail

inline GroupPtr make_group(std::vector<std::vector<int>> mul, std::vector<int> generators) {
    detail::check_table_shape(mul);
    auto g = std::make_shared<FiniteGroup>();
    g->order = static_cast<int>(mul.size());
    g->inv = detail::compute_inverses(mul);
    g->mul = std::move(mul);
    g->generators = std::move(generators);
    return g;
}

// Exhaustive associativity / identity / inverse / closure check.
inline void validate_group(const FiniteGroup& g) {
    detail::check_table_shape(g.mul);
    int n = g.order;
    for (int a = 0; a < n; ++a)
        if (g.mul[a][g.inv[a]] != 0 || g.mul[g.inv[a]][a] != 0)
            throw validation_error("inverse table inconsistent");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
                    throw validation_error("multiplication not associative");
    // elements must be the closure of the recorded generators
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int gi : g.generators) {
            int y = g.mul[x][gi];
            if (!seen[y]) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw validation_error("generators do not generate the group");
}

// Closure of permutation generators under composition, canonically ordered.
inline GroupPtr group_from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                                        int size_cap = kDefaultGroupSizeCap) {
    if (degree <= 0) throw validation_error("degree must be positive");
    for (const auto& p : gens) {
        if (static_cast<int>(p.size()) != degree) throw validation_error("permutation length != degree");
        std::vector<bool> hit(degree, false);
        for (int v : p) {
            if (v < 0 || v >= degree || hit[v]) throw validation_error("generator is not a bijection");
            hit[v] = true;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> index_of;
    std::vector<std::vector<int>> elems;
    index_of[id] = 0;
    elems.push_back(id);
    std::vector<int> gen_index(gens.size(), -1);
    // BFS: popping in discovery order and trying generators in index order
    // enumerates words sorted by (length, lex).
    for (size_t head = 0; head < elems.size(); ++head) {
        std::vector<int> cur = elems[head];
        for (size_t j = 0; j < gens.size(); ++j) {
            std::vector<int> next(degree);
            for (int i = 0; i < degree; ++i) next[i] = cur[gens[j][i]];  // cur ∘ gen
            auto it = index_of.find(next);
            if (it == index_of.end()) {
                if (static_cast<int>(elems.size()) >= size_cap)
                    throw size_limit_error("group closure exceeds size cap");
                int idx = static_cast<int>(elems.size());
                index_of[next] = idx;
                elems.push_back(std::move(next));
            }
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(degree);
            for (int i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
            mul[a][b] = index_of.at(prod);
        }
    for (size_t j = 0; j < gens.size(); ++j) gen_index[j] = index_of.at(gens[j]);
    return make_group(std::move(mul), std::move(gen_index));
}

// BFS word (generator index sequence) for every element, canonical order.
inline std::vector<std::vector<int>> element_words(const FiniteGroup& g) {
    std::vector<std::vector<int>> words(g.order);
    std::vector<bool> seen(g.order, false);
    seen[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (size_t j = 0; j < g.generators.size(); ++j) {
            int y = g.mul[x][g.generators[j]];
            if (!seen[y]) {
                seen[y] = true;
                words[y] = words[x];
                words[y].push_back(static_cast<int>(j));
                queue.push_back(y);
            }
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw validation_error("generators do not generate the group");
    return words;
}

struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;  // sorted, contains 0

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }
    bool is_abelian() const {
        for (int a : members)
            for (int b : members)
                if (parent->mul[a][b] != parent->mul[b][a]) return false;
        return true;
    }
};

inline Subgroup close(GroupPtr g, const std::vector<int>& seeds) {
    std::vector<bool> in(g->order, false);
    in[0] = true;
    std::vector<int> frontier{0};
    for (int s : seeds)
        if (s < 0 || s >= g->order)
            throw validation_error("seed index out of range");
        else if (!in[s]) {
            in[s] = true;
            frontier.push_back(s);
        }
    for (size_t head = 0; head < frontier.size(); ++head)
        for (size_t k = 0; k < frontier.size(); ++k) {
            int y = g->mul[frontier[head]][frontier[k]];
            if (!in[y]) {
                in[y] = true;
                frontier.push_back(y);
            }
            y = g->mul[frontier[k]][frontier[head]];
            if (!in[y]) {
                in[y] = true;
                frontier.push_back(y);
            }
        }
    Subgroup s;
    s.parent = std::move(g);
    for (int i = 0; i < s.parent->order; ++i)
        if (in[i]) s.members.push_back(i);
    return s;
}

inline Subgroup trivial_subgroup(GroupPtr g) { return Subgroup{std::move(g), {0}}; }

inline Subgroup full_subgroup(GroupPtr g) {
    Subgroup s;
    s.members.resize(g->order);
    std::iota(s.members.begin(), s.members.end(), 0);
    s.parent = std::move(g);
    return s;
}

inline bool is_normal(const Subgroup& s) {
    const FiniteGroup& g = *s.parent;
    for (int x = 0; x < g.order; ++x)
        for (int m : s.members)
            if (!s.contains(g.conj(x, m))) return false;
    return true;
}

inline Subgroup commutator_subgroup(const Subgroup& s) {
    const FiniteGroup& g = *s.parent;
    std::set<int> comms;
    for (int a : s.members)
        for (int b : s.members)
            comms.insert(g.mul[g.mul[g.mul[a][b]][g.inv[a]]][g.inv[b]]);
    return close(s.parent, std::vector<int>(comms.begin(), comms.end()));
}

// G = D_0 ⊇ D_1 ⊇ ..., D_{i+1} = [D_i, D_i]; ends at the first stable term.
inline std::vector<Subgroup> derived_series(GroupPtr g) {
    std::vector<Subgroup> series{full_subgroup(g)};
    while (true) {
        Subgroup next = commutator_subgroup(series.back());
        if (next.members == series.back().members) break;
        series.push_back(std::move(next));
    }
    return series;
}

inline bool is_solvable(GroupPtr g) { return derived_series(std::move(g)).back().order() == 1; }

struct GenSearchResult {
    int count = 0;
    std::vector<int> witness;
};

// Smallest k such that some k-tuple generates; canonical lexicographic tuple
// enumeration with a visited-subgroup memo for pruning.
inline GenSearchResult min_generating_tuple(GroupPtr g, long long budget = kDefaultTupleBudget) {
    int n = g->order;
    if (n == 1) return {0, {}};
    long long used = 0;
    // failure memo: (closure members, tuple slots left) -> cannot reach G
    std::map<std::pair<int, std::vector<int>>, bool> failed;
    std::vector<int> tuple;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);

    std::function<bool(const std::vector<int>&, int)> dfs =
        [&](const std::vector<int>& closure_members, int slots_left) -> bool {
        if (static_cast<int>(closure_members.size()) == n) return true;
        if (slots_left == 0) return false;
        auto key = std::make_pair(slots_left, closure_members);
        auto it = failed.find(key);
        if (it != failed.end()) return false;
        for (int x = 1; x < n; ++x) {
            if (std::binary_search(closure_members.begin(), closure_members.end(), x)) continue;
            if (++used > budget)
                throw budget_error("min_generators tuple budget exceeded",
                                   static_cast<long long>(tuple.size()) + 1);
            std::vector<int> seeds = closure_members;
            seeds.push_back(x);
            Subgroup bigger = close(g, seeds);
            tuple.push_back(x);
            if (dfs(bigger.members, slots_left - 1)) return true;
            tuple.pop_back();
        }
        failed[key] = true;
        return false;
    };

    for (int k = 1; k <= n; ++k) {
        tuple.clear();
        if (dfs({0}, k)) return {k, tuple};
    }
    throw validation_error("unreachable: full element set must generate");
}

inline int min_generators(GroupPtr g, long long budget = kDefaultTupleBudget) {
    return min_generating_tuple(std::move(g), budget).count;
}

// Sylow decomposition of an abelian subgroup: per prime, the elements of
// prime-power order.
inline std::vector<std::pair<int, Subgroup>> sylow_decomposition(const Subgroup& a) {
    if (!a.is_abelian()) throw validation_error("sylow_decomposition requires an abelian subgroup");
    int m = a.order();
    std::vector<int> primes;
    int tmp = m;
    for (int q = 2; q * q <= tmp; ++q)
        if (tmp % q == 0) {
            primes.push_back(q);
            while (tmp % q == 0) tmp /= q;
        }
    if (tmp > 1) primes.push_back(tmp);
    std::vector<std::pair<int, Subgroup>> out;
    long long product = 1;
    for (int q : primes) {
        Subgroup part;
        part.parent = a.parent;
        for (int x : a.members) {
            int o = a.parent->element_order(x);
            while (o % q == 0) o /= q;
            if (o == 1) part.members.push_back(x);
        }
        product *= part.order();
        out.emplace_back(q, std::move(part));
    }
    if (product != m) throw validation_error("sylow parts do not multiply to |A|");
    return out;
}

struct GroupHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> images;

    int apply(int x) const { return images[x]; }

    void validate() const {
        if (static_cast<int>(images.size()) != source->order)
            throw validation_error("hom image array has wrong length");
        if (images[0] != 0) throw validation_error("hom does not fix the identity");
        for (int a = 0; a < source->order; ++a)
            for (int b = 0; b < source->order; ++b)
                if (images[source->mul[a][b]] != target->mul[images[a]][images[b]])
                    throw validation_error("map is not a homomorphism");
    }

    Subgroup kernel() const {
        Subgroup k;
        k.parent = source;
        for (int x = 0; x < source->order; ++x)
            if (images[x] == 0) k.members.push_back(x);
        return k;
    }

    bool is_surjective() const {
        std::vector<bool> hit(target->order, false);
        for (int v : images) hit[v] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }
};

// Quotient with canonical coset ordering: cosets sorted by their minimal
// element index (identity coset first).
inline std::pair<GroupPtr, GroupHom> quotient(GroupPtr g, const Subgroup& n) {
    if (n.parent.get() != g.get()) throw validation_error("subgroup belongs to a different group");
    if (!is_normal(n)) throw validation_error("quotient by a non-normal subgroup");
    int order = g->order;
    std::vector<int> rep(order, -1);
    for (int x = 0; x < order; ++x) {
        if (rep[x] >= 0) continue;
        int mn = x;
        std::vector<int> coset;
        for (int m : n.members) {
            int y = g->mul[x][m];
            coset.push_back(y);
            mn = std::min(mn, y);
        }
        for (int y : coset) rep[y] = mn;
    }
    std::vector<int> reps;
    for (int x = 0; x < order; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::map<int, int> coset_index;
    for (size_t i = 0; i < reps.size(); ++i) coset_index[reps[i]] = static_cast<int>(i);
    int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> mul(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) mul[a][b] = coset_index.at(rep[g->mul[reps[a]][reps[b]]]);
    std::vector<int> gens;
    for (int gi : g->generators) {
        int img = coset_index.at(rep[gi]);
        if (img != 0 && std::find(gens.begin(), gens.end(), img) == gens.end()) gens.push_back(img);
    }
    GroupPtr quo = make_group(std::move(mul), std::move(gens));
    GroupHom proj;
    proj.source = std::move(g);
    proj.target = quo;
    proj.images.resize(order);
    for (int x = 0; x < order; ++x) proj.images[x] = coset_index.at(rep[x]);
    return {quo, std::move(proj)};
}

// ---- constructions ----

inline GroupPtr cyclic_group(int m) {
    if (m <= 0) throw validation_error("cyclic group order must be positive");
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) mul[a][b] = (a + b) % m;
    std::vector<int> gens;
    if (m > 1) gens.push_back(1);
    return make_group(std::move(mul), std::move(gens));
}

// Dihedral group of order 2m: indices i = r^i, m+i = r^i s.
inline GroupPtr dihedral_group(int m) {
    if (m <= 0) throw validation_error("dihedral parameter must be positive");
    int n = 2 * m;
    auto idx = [m](bool flip, int i) { return (flip ? m : 0) + ((i % m + m) % m); };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool fa = a >= m, fb = b >= m;
            int ia = a % m, ib = b % m;
            // r^ia s^fa * r^ib s^fb = r^(ia + (fa ? -ib : ib)) s^(fa ^ fb)
            mul[a][b] = idx(fa != fb, ia + (fa ? -ib : ib));
        }
    std::vector<int> gens{idx(true, 0)};
    if (m > 1) gens.insert(gens.begin(), 1);
    return make_group(std::move(mul), std::move(gens));
}

// Dicyclic group of order 4m: a^(2m)=1, b^2=a^m, b a b^-1 = a^-1.
// Indices i = a^i (i < 2m), 2m+i = a^i b.
inline GroupPtr dicyclic_group(int m) {
    if (m <= 0) throw validation_error("dicyclic parameter must be positive");
    int two_m = 2 * m, n = 4 * m;
    auto idx = [two_m](bool hasb, int i) { return (hasb ? two_m : 0) + ((i % two_m + two_m) % two_m); };
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool ba = a >= two_m, bb = b >= two_m;
            int ia = a % two_m, ib = b % two_m;
            if (!ba && !bb) mul[a][b] = idx(false, ia + ib);
            else if (!ba && bb) mul[a][b] = idx(true, ia + ib);
            else if (ba && !bb) mul[a][b] = idx(true, ia - ib);
            else mul[a][b] = idx(false, ia - ib + m);
        }
    std::vector<int> gens{1, two_m};
    return make_group(std::move(mul), std::move(gens));
}

// Index layout a*|B| + b; identity at 0.
inline GroupPtr direct_product(GroupPtr a, GroupPtr b) {
    int na = a->order, nb = b->order, n = na * nb;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            mul[x][y] = a->mul[x / nb][y / nb] * nb + b->mul[x % nb][y % nb];
    std::vector<int> gens;
    for (int ga : a->generators) gens.push_back(ga * nb);
    for (int gb : b->generators) gens.push_back(gb);
    return make_group(std::move(mul), std::move(gens));
}

// Semidirect product N ⋊ H from one automorphism of N per H generator.
// The action is extended along words and verified to be a homomorphism
// H -> Aut(N). Index layout h*|N| + n.
inline GroupPtr semidirect_product(GroupPtr n_grp, GroupPtr h_grp,
                                   const std::vector<std::vector<int>>& gen_autos) {
    if (gen_autos.size() != h_grp->generators.size())
        throw validation_error("need one automorphism per H generator");
    int nn = n_grp->order, nh = h_grp->order;
    auto check_auto = [&](const std::vector<int>& f) {
        if (static_cast<int>(f.size()) != nn) throw validation_error("automorphism array wrong length");
        std::vector<bool> hit(nn, false);
        for (int v : f) {
            if (v < 0 || v >= nn || hit[v]) throw validation_error("action map is not a bijection");
            hit[v] = true;
        }
        if (f[0] != 0) throw validation_error("action does not fix the identity");
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b)
                if (f[n_grp->mul[a][b]] != n_grp->mul[f[a]][f[b]])
                    throw validation_error("action map is not an automorphism");
    };
    for (const auto& f : gen_autos) check_auto(f);
    auto words = element_words(*h_grp);
    std::vector<std::vector<int>> act(nh);
    for (int h = 0; h < nh; ++h) {
        std::vector<int> f(nn);
        std::iota(f.begin(), f.end(), 0);
        for (int j : words[h]) {
            // left action: act(h g_j) = act(h) ∘ act(g_j)
            std::vector<int> g(nn);
            for (int x = 0; x < nn; ++x) g[x] = f[gen_autos[j][x]];
            f = std::move(g);
        }
        act[h] = std::move(f);
    }
    for (int h1 = 0; h1 < nh; ++h1)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int x = 0; x < nn; ++x)
                if (act[h_grp->mul[h1][h2]][x] != act[h1][act[h2][x]])
                    throw validation_error("generator automorphisms do not define an action");
    int n = nh * nn;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int h1 = x / nn, m1 = x % nn, h2 = y / nn, m2 = y % nn;
            mul[x][y] = h_grp->mul[h1][h2] * nn + n_grp->mul[m1][act[h1][m2]];
        }
    std::vector<int> gens;
    for (int gh : h_grp->generators) gens.push_back(gh * nn);
    for (int gn : n_grp->generators) gens.push_back(gn);
    return make_group(std::move(mul), std::move(gens));
}

}  // namespace picurve
