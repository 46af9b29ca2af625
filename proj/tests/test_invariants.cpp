#include <doctest.h>

#include <array>
#include <cmath>
#include <set>

#include "boolcomb/classes.hpp"
#include "boolcomb/error.hpp"
#include "boolcomb/extremal.hpp"
#include "boolcomb/invariants.hpp"
#include "oracles.hpp"

using namespace boolcomb;

namespace {

Graph half_graph(std::size_t k) {
    GraphBuilder b(2 * k);
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i; j < k; ++j) b.add_edge(i, static_cast<Vertex>(k + j));
    return std::move(b).build();
}

Graph tree7() { return oracle::from_edge_pairs(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}); }

std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Largest trace count over all m-subsets, by direct set construction.
std::size_t nu_oracle(const Graph& g, std::size_t m) {
    std::size_t best = 0;
    for (std::uint32_t a = 0; a < (1U << g.order()); ++a) {
        if (static_cast<std::size_t>(std::popcount(a)) != m) continue;
        std::set<std::uint32_t> traces;
        for (Vertex v = 0; v < g.order(); ++v) traces.insert(static_cast<std::uint32_t>(g.mask(v)) & a);
        best = std::max(best, traces.size());
    }
    return best;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("clique and independence examples") {
    CHECK(clique_number(Graph::complete(5)) == 5);
    CHECK(independence_number(Graph::complete(5)) == 1);
    CHECK(clique_number(named::cycle(5)) == 2);
    CHECK(independence_number(named::cycle(5)) == 2);
    CHECK(independence_number(hnk(3, 3)) <= 9);
    CHECK(clique_number(Graph(0)) == 0);
    CHECK_THROWS_AS(clique_number(Graph(65)), Error);
}

TEST_CASE("clique and colouring agree with brute force") {
    Rng rng(17);
    for (int i = 0; i < 150; ++i) {
        std::size_t n = 1 + rng.below(11);
        Graph g = oracle::random_graph(n, 0.1 + 0.8 * (rng.below(100) / 100.0), rng);
        CHECK(clique_number(g) == oracle::clique_number(g));
        CHECK(independence_number(g) == oracle::independence_number(g));
        CHECK(chromatic_number(g) == oracle::chromatic_number(g));
        auto c = chromatic_search(g);
        CHECK(c.exact);
        for (auto [u, v] : g.edges()) CHECK(c.colors[u] != c.colors[v]);
        auto q = maximum_clique(g);
        CHECK(q.size() == clique_number(g));
    }
}

TEST_CASE("chromatic examples and bounds") {
    CHECK(chromatic_number(Graph(6)) == 1);
    CHECK(chromatic_number(named::cycle(5)) == 3);
    CHECK(chromatic_number(named::complete_bipartite(3, 3)) == 2);
    CHECK(chromatic_number(named::petersen()) == 3);
    Rng rng(2);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = 1 + rng.below(30);
        Graph g = oracle::random_graph(n, 0.3, rng);
        std::size_t w = clique_number(g), chi = chromatic_number(g), a = independence_number(g);
        CHECK(w <= chi);
        CHECK(chi <= max_degree(g) + 1);
        CHECK(degeneracy(g) <= max_degree(g));
        CHECK(a * chi >= n);
    }
}

TEST_CASE("degree parameters") {
    CHECK(degeneracy(Graph::complete(4)) == 3);
    CHECK(degeneracy(tree7()) == 1);
    CHECK(degeneracy(named::cycle(6)) == 2);
    CHECK(max_degree(named::star(5)) == 5);
}

TEST_CASE("biclique examples") {
    CHECK(biclique_number(named::complete_bipartite(3, 3)) == 3);
    CHECK(biclique_number(Graph(6)) == 0);
    CHECK(biclique_number(named::cycle(5)) == 1);
    CHECK(biclique_number(Graph::complete(6)) == 3);
    CHECK_THROWS_AS(biclique_number(Graph(17)), Error);
}

TEST_CASE("chain numbers") {
    CHECK(chain_number(half_graph(3)) == 3);
    CHECK(chain_number(Graph(5)) == 0);
    CHECK(strong_chain_number(Graph(5)) == 1);
    CHECK(chain_number(Graph::complete(4)) == 1);
    Graph k33m = named::complete_bipartite(3, 3);
    GraphBuilder b(k33m);
    for (Vertex i = 0; i < 3; ++i) b.remove_edge(i, 3 + i);
    Graph g = std::move(b).build();
    CHECK(strong_chain_number(g) / 2 <= chain_number(g));
    CHECK(chain_number(g) <= strong_chain_number(g));
    Rng rng(9);
    for (int i = 0; i < 80; ++i) {
        Graph h = oracle::random_graph(1 + rng.below(7), 0.5, rng);
        CHECK(chain_number(h) == oracle::chain_number(h, false));
        CHECK(strong_chain_number(h) == oracle::chain_number(h, true));
    }
    CHECK_THROWS_AS(chain_number(Graph(13)), Error);
}

TEST_CASE("twin classes") {
    CHECK(twin_number(Graph::complete(6)) == 1);
    CHECK(twin_number(named::cycle(5)) == 5);
    CHECK(twin_number(named::complete_bipartite(2, 3)) == 2);
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + rng.below(9);
        Graph g = oracle::random_graph(n, rng.coin() ? 0.5 : 0.85, rng);
        Partition p = twin_classes(g);
        for (const auto& block : p.blocks())
            for (Vertex a : block)
                for (Vertex c : block) CHECK(oracle::twins(g, a, c));
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = x + 1; y < p.size(); ++y) CHECK_FALSE(oracle::twins(g, p.block(x)[0], p.block(y)[0]));
    }
}

TEST_CASE("VC dimension and neighbourhood complexity") {
    CHECK(vc_dimension(Graph(5)) == 0);
    CHECK(vc_dimension(named::star(3)) == 1);
    Rng rng(14);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = 2 + rng.below(9);
        Graph g = oracle::random_graph(n, 0.5, rng);
        CHECK(neighborhood_complexity(g, 1) <= 2);
        std::size_t d = vc_dimension(g);
        for (std::size_t m = 1; m <= std::min<std::size_t>(n, 4); ++m) {
            std::size_t nu = neighborhood_complexity(g, m);
            CHECK(nu == nu_oracle(g, m));
            std::size_t sauer = 0;
            for (std::size_t j = 0; j <= d && j <= m; ++j) sauer += binom(m, j);
            CHECK(nu <= sauer);
        }
    }
    CHECK_THROWS_AS(vc_dimension(Graph(15)), Error);
}

TEST_CASE("perfectness") {
    auto hole = find_odd_hole_or_antihole(named::cycle(5));
    REQUIRE(hole);
    CHECK(hole->size() == 5);
    CHECK_FALSE(is_perfect(named::cycle(5)));
    CHECK(is_perfect(named::complete_bipartite(4, 5)));
    CHECK(is_perfect(named::cycle(6)));
    CHECK_FALSE(is_perfect(complement(named::cycle(7))));
    CHECK_FALSE(is_perfect_by_subsets(complement(named::cycle(7))));
    CHECK_FALSE(is_perfect(named::petersen()));
    CHECK(is_perfect(Graph::complete(14)));
    CHECK_THROWS_AS(is_perfect(Graph(15)), Error);
    Rng rng(30);
    for (int i = 0; i < 120; ++i) {
        Graph g = oracle::random_graph(1 + rng.below(8), 0.5, rng);
        bool p = is_perfect(g);
        CHECK(p == oracle::is_perfect(g));
        CHECK(p == is_perfect_by_subsets(g));
    }
    // bipartite graphs up to the SPGT-only range
    for (int i = 0; i < 20; ++i) {
        std::size_t a = 1 + rng.below(7), b = 1 + rng.below(7);
        GraphBuilder gb(a + b);
        for (Vertex u = 0; u < a; ++u)
            for (Vertex v = 0; v < b; ++v)
                if (rng.coin()) gb.add_edge(u, static_cast<Vertex>(a + v));
        CHECK(is_perfect(std::move(gb).build()));
    }
}

TEST_CASE("common homogeneous sets") {
    Graph c5 = named::cycle(5);
    Graph single[] = {c5};
    CHECK(common_homogeneous_set(single).size() == 2);
    Graph pair[] = {Graph::complete(6), Graph(6)};
    CHECK(common_homogeneous_set(pair).size() == 6);
    Graph twins[] = {c5, relabel(c5, std::array<Vertex, 5>{2, 4, 1, 3, 0})};
    auto s = common_homogeneous_set(twins);
    CHECK(s.size() >= 1);
    for (const auto& h : twins) CHECK(is_homogeneous(h, s));
    Rng rng(40);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = 3 + rng.below(12);
        Graph g = oracle::random_graph(n, 0.5, rng);
        Graph one[] = {g};
        CHECK(common_homogeneous_set(one).size() == std::max(clique_number(g), independence_number(g)));
    }
    Graph bad[] = {Graph(3), Graph(4)};
    CHECK_THROWS_AS(common_homogeneous_set(bad), Error);
}

TEST_CASE("parameter report") {
    auto r = parameters(Graph::complete(5));
    CHECK(r.omega == 5u);
    CHECK(r.chi == 5u);
    CHECK(r.alpha == 1u);
    CHECK(r.perfect == true);
    Rng rng(50);
    for (int i = 0; i < 30; ++i) {
        Graph g = oracle::random_graph(1 + rng.below(10), 0.5, rng);
        auto p = parameters(g);
        REQUIRE(p.chi);
        CHECK(*p.omega <= *p.chi);
        CHECK(*p.chi <= *p.max_degree + 1);
        CHECK(*p.strong_chain / 2 <= *p.chain);
        CHECK(*p.chain <= *p.strong_chain);
        if (*p.perfect) CHECK(*p.chi == *p.omega);
    }
    auto big = parameters(Graph(40));
    CHECK_FALSE(big.chain.has_value());
    CHECK_FALSE(big.perfect.has_value());
    CHECK(big.omega == 1u);
}

}
