#pragma once

// Brute-force isomorphism testing over generator-image assignments.
// Test/catalog utility, restricted to order <= 64.

#include <algorithm>
#include <vector>

#include "picurve/group.hpp"

namespace picurve {

inline constexpr int kIsoOrderCap = 64;

namespace detail {

// BFS words of every element over an arbitrary generating tuple.
inline std::vector<std::vector<int>> words_over(const FiniteGroup& g, const std::vector<int>& gens) {
    FiniteGroup tmp = g;
    tmp.generators = gens;
    return element_words(tmp);
}

// All maps extending gens -> images to homomorphic bijections; stops after
// max_count finds.
inline std::vector<std::vector<int>> iso_search(const FiniteGroup& a, const FiniteGroup& b,
                                                const std::vector<int>& gens,
                                                const std::vector<std::vector<int>>& words,
                                                size_t max_count) {
    std::vector<std::vector<int>> found;
    int k = static_cast<int>(gens.size());
    std::vector<int> gen_orders(k);
    for (int j = 0; j < k; ++j) gen_orders[j] = a.element_order(gens[j]);
    std::vector<int> images(k, 0);
    std::function<void(int)> rec = [&](int depth) {
        if (found.size() >= max_count) return;
        if (depth == k) {
            std::vector<int> phi(a.order);
            for (int x = 0; x < a.order; ++x) {
                int y = 0;
                for (int j : words[x]) y = b.mul[y][images[j]];
                phi[x] = y;
            }
            std::vector<bool> hit(b.order, false);
            for (int y : phi) {
                if (hit[y]) return;
                hit[y] = true;
            }
            for (int x = 0; x < a.order; ++x)
                for (int z = 0; z < a.order; ++z)
                    if (phi[a.mul[x][z]] != b.mul[phi[x]][phi[z]]) return;
            found.push_back(std::move(phi));
            return;
        }
        for (int y = 0; y < b.order; ++y) {
            if (b.element_order(y) != gen_orders[depth]) continue;
            images[depth] = y;
            rec(depth + 1);
            if (found.size() >= max_count) return;
        }
    };
    rec(0);
    return found;
}

}  // namespace detail

inline bool is_isomorphic(GroupPtr a, GroupPtr b) {
    if (a->order != b->order) return false;
    if (a->order > kIsoOrderCap) throw size_limit_error("isomorphism test restricted to order <= 64");
    std::vector<int> oa(a->order), ob(b->order);
    for (int x = 0; x < a->order; ++x) oa[x] = a->element_order(x);
    for (int x = 0; x < b->order; ++x) ob[x] = b->element_order(x);
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return false;
    auto gens = min_generating_tuple(a).witness;
    if (gens.empty()) return true;  // both trivial
    auto words = detail::words_over(*a, gens);
    return !detail::iso_search(*a, *b, gens, words, 1).empty();
}

// All automorphisms of g as image arrays.
inline std::vector<std::vector<int>> enumerate_automorphisms(GroupPtr g) {
    if (g->order > kIsoOrderCap) throw size_limit_error("automorphism enumeration restricted to order <= 64");
    auto gens = min_generating_tuple(g).witness;
    if (gens.empty()) return {{0}};
    auto words = detail::words_over(*g, gens);
    return detail::iso_search(*g, *g, gens, words, static_cast<size_t>(-1));
}

}  // namespace picurve
