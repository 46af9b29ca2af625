#pragma once

// Slow, independent reference implementations used to cross-check the solvers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "boolcomb/graph.hpp"
#include "boolcomb/rng.hpp"

namespace oracle {

using boolcomb::Graph;
using boolcomb::GraphBuilder;
using boolcomb::Vertex;

inline Graph random_graph(std::size_t n, double p, boolcomb::Rng& rng) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p)) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph from_edge_pairs(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

inline bool is_clique(const Graph& g, std::uint32_t mask) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if ((mask >> u & 1U) && (mask >> v & 1U) && !g.adjacent(u, v)) return false;
    return true;
}

inline bool is_independent(const Graph& g, std::uint32_t mask) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if ((mask >> u & 1U) && (mask >> v & 1U) && g.adjacent(u, v)) return false;
    return true;
}

// Subset enumeration, n <= 20.
inline std::size_t clique_number(const Graph& g) {
    std::size_t best = 0;
    for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
        if (is_clique(g, m)) best = std::max<std::size_t>(best, std::popcount(m));
    return best;
}

inline std::size_t independence_number(const Graph& g) {
    std::size_t best = 0;
    for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
        if (is_independent(g, m)) best = std::max<std::size_t>(best, std::popcount(m));
    return best;
}

inline bool colorable(const Graph& g, std::vector<int>& color, Vertex v, int k) {
    if (v == g.order()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (Vertex u = 0; u < v && ok; ++u)
            if (g.adjacent(u, v) && color[u] == c) ok = false;
        if (!ok) continue;
        color[v] = c;
        if (colorable(g, color, v + 1, k)) return true;
    }
    return false;
}

// Plain backtracking over k = 0, 1, 2, ...
inline std::size_t chromatic_number(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (int k = 0;; ++k)
        if (colorable(g, color, 0, k)) return static_cast<std::size_t>(k);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<Vertex> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (Vertex u = 0; u < a.order() && ok; ++u)
            for (Vertex v = u + 1; v < a.order() && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(p[u], p[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline Graph induced(const Graph& g, std::uint32_t mask) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < g.order(); ++v)
        if (mask >> v & 1U) vs.push_back(v);
    GraphBuilder b(vs.size());
    for (Vertex i = 0; i < vs.size(); ++i)
        for (Vertex j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) b.add_edge(i, j);
    return std::move(b).build();
}

// chi = omega on every induced subgraph.
inline bool is_perfect(const Graph& g) {
    for (std::uint32_t m = 1; m < (1U << g.order()); ++m) {
        Graph h = induced(g, m);
        if (oracle::clique_number(h) != oracle::chromatic_number(h)) return false;
    }
    return true;
}

// Half-graph search over ordered sequences of disjoint pairs.
inline void chain_dfs(const Graph& g, std::vector<Vertex>& as, std::vector<Vertex>& bs, std::vector<bool>& used,
                      bool strong, std::size_t& best) {
    best = std::max(best, as.size());
    const std::size_t j = as.size();
    for (Vertex a = 0; a < g.order(); ++a) {
        if (used[a]) continue;
        for (Vertex b = 0; b < g.order(); ++b) {
            if (used[b] || b == a) continue;
            bool ok = true;
            // every earlier pair i < j: a_i ~ b_j and a_j !~ b_i
            for (std::size_t i = 0; i < j && ok; ++i) ok = g.adjacent(as[i], b) && !g.adjacent(a, bs[i]);
            if (ok && !strong) ok = g.adjacent(a, b);
            if (!ok) continue;
            used[a] = used[b] = true;
            as.push_back(a);
            bs.push_back(b);
            chain_dfs(g, as, bs, used, strong, best);
            as.pop_back();
            bs.pop_back();
            used[a] = used[b] = false;
        }
    }
}

inline std::size_t chain_number(const Graph& g, bool strong) {
    std::vector<Vertex> as, bs;
    std::vector<bool> used(g.order(), false);
    std::size_t best = 0;
    chain_dfs(g, as, bs, used, strong, best);
    return best;
}

inline bool twins(const Graph& g, Vertex a, Vertex b) {
    for (Vertex w = 0; w < g.order(); ++w)
        if (w != a && w != b && g.adjacent(a, w) != g.adjacent(b, w)) return false;
    return true;
}

inline std::size_t bell(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1, 0));
    t[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        t[i][0] = t[i - 1][i - 1];
        for (std::size_t j = 1; j <= i; ++j) t[i][j] = t[i][j - 1] + t[i - 1][j - 1];
    }
    return t[n][0];
}

}  // namespace oracle
