#include <doctest.h>

#include <array>
#include <numeric>

#include "boolcomb/boolfn.hpp"
#include "boolcomb/classes.hpp"
#include "boolcomb/error.hpp"
#include "boolcomb/extremal.hpp"
#include "boolcomb/graph.hpp"
#include "oracles.hpp"

using namespace boolcomb;

namespace {

Graph single_edge(std::size_t n, Vertex u, Vertex v) { return oracle::from_edge_pairs(n, {{u, v}}); }

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("builder keeps adjacency symmetric and loop free") {
    GraphBuilder b(5);
    b.add_edge(0, 3).add_edge(4, 1).toggle(2, 3).toggle(3, 2);
    Graph g = std::move(b).build();
    CHECK(g.edge_count() == 2);
    for (Vertex u = 0; u < 5; ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        for (Vertex v = 0; v < 5; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK_FALSE(GraphBuilder(3).add_edge(1, 1).adjacent(1, 1));
    CHECK_THROWS_AS(GraphBuilder(3).add_edge(0, 3), Error);
}

TEST_CASE("partition normalises block order") {
    auto p = Partition::from_blocks(5, {{4, 2}, {3}, {1, 0}});
    REQUIRE(p.size() == 3);
    CHECK(p.block(0) == std::vector<Vertex>{0, 1});
    CHECK(p.block(1) == std::vector<Vertex>{2, 4});
    CHECK(p.block(2) == std::vector<Vertex>{3});
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), Error);
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), Error);
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1, 2}, {}}), Error);
}

TEST_CASE("combine examples") {
    Graph c5 = named::cycle(5);
    Graph k5 = Graph::complete(5);
    Graph x = combine(CombineOp::Xor, std::array{c5, k5});
    CHECK(x == complement(c5));
    CHECK(oracle::is_isomorphic(x, c5));

    std::array same{c5, c5};
    CHECK(combine(CombineOp::Union, same) == c5);

    Graph m1 = oracle::from_edge_pairs(4, {{0, 1}, {2, 3}});
    Graph m2 = oracle::from_edge_pairs(4, {{1, 2}, {3, 0}});
    CHECK(combine(CombineOp::Xor, std::array{m1, m2}) == named::cycle(4));

    CHECK_THROWS_AS(combine(CombineOp::Union, std::span<const Graph>{}), Error);
    CHECK_THROWS_AS(combine(CombineOp::Union, std::array{Graph(3), Graph(4)}), Error);
}

TEST_CASE("apply_boolean examples") {
    Graph one[] = {named::path(3)};
    CHECK(apply_boolean(BooleanFunction::constant(1, true), one) == Graph::complete(3));

    // f(x, y) = x and not y, table bit 1 only
    Graph hs[] = {Graph::complete(3), single_edge(3, 0, 1)};
    CHECK(apply_boolean(BooleanFunction(2, 0x2), hs) == oracle::from_edge_pairs(3, {{0, 2}, {1, 2}}));

    auto coords = hnk_as_xor(2, 3);
    CHECK(apply_boolean(BooleanFunction::parity(3), coords) == hnk(2, 3));

    CHECK_THROWS_AS(apply_boolean(BooleanFunction::parity(2), one), Error);
}

TEST_CASE("complement examples") {
    CHECK(complement(Graph::complete(6)) == Graph(6));
    Graph p = named::petersen();
    CHECK(complement(complement(p)) == p);
    CHECK(oracle::is_isomorphic(complement(named::cycle(5)), named::cycle(5)));
}

TEST_CASE("subgraph complement examples") {
    Graph c6 = named::cycle(6);
    std::array<Vertex, 1> one{3};
    CHECK(subgraph_complement(c6, one) == c6);
    CHECK(subgraph_complement(c6, std::span<const Vertex>{}) == c6);
    std::vector<Vertex> all(6);
    std::iota(all.begin(), all.end(), 0);
    CHECK(subgraph_complement(Graph(6), all) == Graph::complete(6));
    std::array<Vertex, 2> bad{0, 9};
    CHECK_THROWS_AS(subgraph_complement(c6, bad), Error);

    // direct local complementation: toggle every pair inside N(v)
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        Graph g = oracle::random_graph(8, 0.4, rng);
        Vertex v = static_cast<Vertex>(rng.below(8));
        GraphBuilder b(g);
        auto nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t c = a + 1; c < nb.size(); ++c) b.toggle(nb[a], nb[c]);
        Graph direct = std::move(b).build();
        CHECK(local_complement(g, v) == direct);
        CHECK(subgraph_complement(g, nb) == direct);
    }
}

TEST_CASE("partition complement examples") {
    Rng rng(5);
    Graph g = oracle::random_graph(7, 0.5, rng);
    CHECK(partition_complement(g, Partition::singletons(7)) == g);
    CHECK(partition_complement(Graph(7), Partition::single_block(7)) == Graph::complete(7));
    auto p = Partition::from_blocks(7, {{0, 2, 5}, {1, 3}, {4}, {6}});
    CHECK(partition_complement(partition_complement(g, p), p) == g);
    CHECK(partition_complement(g, p) == combine(CombineOp::Xor, std::array{g, equivalence_graph(p)}));
    // one non-singleton block reduces to subgraph complementation
    auto q = Partition::from_blocks(7, {{1, 4, 6}, {0}, {2}, {3}, {5}});
    std::array<Vertex, 3> s{1, 4, 6};
    CHECK(partition_complement(g, q) == subgraph_complement(g, s));
    CHECK_THROWS_AS(partition_complement(g, Partition::singletons(6)), Error);
}

TEST_CASE("induced subgraph examples") {
    Graph g = named::petersen();
    std::vector<Vertex> all(10);
    std::iota(all.begin(), all.end(), 0);
    CHECK(induced_subgraph(g, all) == g);
    std::array<Vertex, 2> two{0, 1};
    CHECK(induced_subgraph(Graph::complete(5), two) == Graph::complete(2));
    Graph c5 = named::cycle(5);
    for (Vertex skip = 0; skip < 5; ++skip) {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < 5; ++v)
            if (v != skip) s.push_back(v);
        CHECK(oracle::is_isomorphic(induced_subgraph(c5, s), named::path(4)));
    }
    std::array<Vertex, 2> dup{1, 1};
    CHECK_THROWS_AS(induced_subgraph(c5, dup), Error);
    std::array<Vertex, 1> out{5};
    CHECK_THROWS_AS(induced_subgraph(c5, out), Error);
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
    CHECK(is_isomorphic(named::cycle(5), complement(named::cycle(5))));
    CHECK_FALSE(is_isomorphic(Graph::complete(3), named::path(3)));
    Rng rng(3);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = 1 + rng.below(7);
        Graph g = oracle::random_graph(n, 0.5, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm.begin(), perm.end());
        Graph h = relabel(g, perm);
        CHECK(is_isomorphic(g, h));
        auto iso = find_isomorphism(g, h);
        REQUIRE(iso);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) CHECK(g.adjacent(u, v) == h.adjacent((*iso)[u], (*iso)[v]));
        Graph other = oracle::random_graph(n, 0.5, rng);
        CHECK(is_isomorphic(g, other) == oracle::is_isomorphic(g, other));
    }
    CHECK(is_isomorphic(named::petersen(), relabel(named::petersen(), std::array<Vertex, 10>{9, 3, 1, 0, 2, 8, 7, 4, 6, 5})));
    CHECK_THROWS_AS(is_isomorphic(Graph(13), Graph(13)), Error);
}

TEST_CASE("algebraic properties") {
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + rng.below(70);
        Graph g = oracle::random_graph(n, 0.3, rng), h = oracle::random_graph(n, 0.6, rng);
        CHECK(combine(CombineOp::Xor, std::array{g, h}) == combine(CombineOp::Xor, std::array{h, g}));
        CHECK(combine(CombineOp::Xor, std::array{g, g}) == Graph(n));
        CHECK(complement(g) == combine(CombineOp::Xor, std::array{g, Graph::complete(n)}));
        std::array gs{g, h, oracle::random_graph(n, 0.5, rng)};
        for (unsigned var = 1; var <= 3; ++var)
            CHECK(apply_boolean(BooleanFunction::projection(3, var), gs) == gs[var - 1]);
        auto f = BooleanFunction(3, rng.below(256));
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (rng.coin()) s.push_back(v);
        rng.shuffle(s.begin(), s.end());
        std::vector<Graph> restricted;
        for (const auto& x : gs) restricted.push_back(induced_subgraph(x, s));
        CHECK(induced_subgraph(apply_boolean(f, gs), s) == apply_boolean(f, restricted));
        CHECK(g.edges().size() == g.edge_count());
    }
}

TEST_CASE("component partition of an equivalence graph recovers its blocks") {
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        Partition p = random_partition(1 + rng.below(20), rng);
        CHECK(component_partition(equivalence_graph(p)) == p);
    }
}

}
