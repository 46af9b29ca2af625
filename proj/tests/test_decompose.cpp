#include <doctest.h>

#include <array>
#include <set>

#include "boolcomb/classes.hpp"
#include "boolcomb/decompose.hpp"
#include "boolcomb/error.hpp"
#include "boolcomb/extremal.hpp"
#include "boolcomb/invariants.hpp"
#include "oracles.hpp"

using namespace boolcomb;

namespace {

void check_edge_coloring(const Graph& g, const std::vector<EdgeClass>& classes) {
    std::set<std::pair<Vertex, Vertex>> covered;
    for (const auto& cls : classes) {
        std::vector<int> hit(g.order(), 0);
        for (auto [u, v] : cls) {
            CHECK(g.adjacent(u, v));
            CHECK(++hit[u] == 1);
            CHECK(++hit[v] == 1);
            covered.insert({std::min(u, v), std::max(u, v)});
        }
    }
    CHECK(covered.size() == g.edge_count());
}

std::size_t binom2(std::size_t t) { return t * (t - 1) / 2; }

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("edge colourings") {
    Rng rng(80);
    for (int i = 0; i < 200; ++i) {
        Graph g = oracle::random_graph(1 + rng.below(25), 0.1 + 0.8 * (rng.below(10) / 10.0), rng);
        auto mg = misra_gries_edge_coloring(g);
        check_edge_coloring(g, mg);
        CHECK(mg.size() <= max_degree(g) + 1);
        auto gr = greedy_edge_coloring(g);
        check_edge_coloring(g, gr);
        CHECK(gr.size() <= std::max<std::size_t>(2 * max_degree(g), 1) - 1 + (g.edge_count() == 0));
    }
}

TEST_CASE("vizing examples") {
    VizingOptions direct{VizingBranch::Direct, false};
    CHECK(vizing_matchings(named::cycle(4), direct).parts.size() == 2);
    CHECK(vizing_matchings(Graph::complete(4), direct).parts.size() == 3);
    auto p = vizing_matchings(named::petersen());
    CHECK(p.certified);
    CHECK(p.parts.size() <= 4);
    CHECK(p.recombine() == named::petersen());
    // Auto switches to the sparser complement for dense graphs
    auto k6 = vizing_matchings(Graph::complete(6));
    CHECK(k6.certified);
    CHECK(k6.parts.empty());
    CHECK(k6.recombine() == Graph::complete(6));
    auto greedy = vizing_matchings(named::petersen(), {VizingBranch::Direct, true});
    CHECK(greedy.certified);
}

TEST_CASE("twin decomposition examples") {
    auto k23 = twin_decomposition(named::complete_bipartite(2, 3));
    CHECK(k23.certified);
    CHECK(k23.parts.size() <= 3);
    auto kn = twin_decomposition(Graph::complete(5));
    CHECK(kn.parts.size() == 1);
    CHECK(kn.recombine() == Graph::complete(5));
    auto on = twin_decomposition(Graph(5));
    CHECK(on.parts.empty());
    CHECK(on.f == BooleanFunction::constant(0, false));
    CHECK(on.recombine() == Graph(5));
    CHECK_THROWS_AS(twin_decomposition(named::cycle(5), 8), Error);
}

TEST_CASE("class L examples") {
    auto kn = class_L_decomposition(Graph::complete(6));
    CHECK(kn.certified);
    CHECK(kn.parts.empty());
    std::array parts{Graph::complete(5), Graph(1)};
    Graph k5o1 = named::disjoint_union(parts);
    auto l = class_L_decomposition(k5o1);
    CHECK(l.parts.size() <= 1);
    CHECK(l.recombine() == k5o1);
    auto star = class_L_decomposition(named::star(4));
    CHECK(star.parts.size() <= 1);
    CHECK(star.recombine() == named::star(4));
    CHECK_THROWS_AS(class_L_decomposition(named::cycle(12), 8), Error);
}

TEST_CASE("xor normal form examples") {
    Rng rng(81);
    Graph h1 = random_member(tags::equivalence, 8, rng), h2 = random_member(tags::equivalence, 8, rng);
    std::array hs{h1, h2};
    auto a = xor_normal_form(BooleanFunction::conjunction(2), hs, tags::equivalence);
    CHECK_FALSE(a.alpha);
    REQUIRE(a.parts.size() == 1);
    CHECK(a.parts[0] == combine(CombineOp::Intersect, hs));
    auto o = xor_normal_form(BooleanFunction::disjunction(2), hs, tags::equivalence);
    CHECK_FALSE(o.alpha);
    REQUIRE(o.parts.size() == 3);
    CHECK(o.parts[0] == h1);
    CHECK(o.parts[1] == h2);
    CHECK(o.parts[2] == combine(CombineOp::Intersect, hs));
    // NOT x1 over a class without K_n
    Graph m = random_member(tags::matching, 8, rng);
    std::array ms{m};
    auto n1 = xor_normal_form(!BooleanFunction::projection(1, 1), ms, tags::matching);
    CHECK(n1.alpha);
    REQUIRE(n1.parts.size() == 1);
    CHECK(n1.parts[0] == m);
    // for equivalence graphs K_n is kept as a part
    std::array es{h1};
    auto ne = xor_normal_form(!BooleanFunction::projection(1, 1), es, tags::equivalence);
    CHECK_FALSE(ne.alpha);
    CHECK(ne.parts.size() == 2);
    CHECK_THROWS_AS(xor_normal_form(BooleanFunction::conjunction(2), hs, tags::split), Error);
    CHECK_THROWS_AS(xor_normal_form(BooleanFunction::conjunction(3), hs, tags::equivalence), Error);
}

TEST_CASE("xor normal form on every intersection-closed tag") {
    Rng rng(82);
    for (auto tag : {tags::equivalence, tags::matching, tags::class_c, tags::class_c_or_matching,
                     tags::at_most_edges(3), tags::bounded_degree(3)}) {
        for (int i = 0; i < 60; ++i) {
            std::size_t n = 2 + rng.below(6);
            unsigned k = 1 + static_cast<unsigned>(rng.below(3));
            auto members = enumerate(tag, n);
            std::vector<Graph> hs;
            for (unsigned j = 0; j < k; ++j) hs.push_back(members[rng.below(members.size())]);
            BooleanFunction f(k, rng.below(std::uint64_t{1} << (1U << k)));
            auto d = xor_normal_form_decomposition(f, hs, tag);
            CHECK(d.certified);
            CHECK(d.parts.size() <= (std::size_t{1} << k));
            for (const auto& [g, t] : d.parts) CHECK(is_member(t, g));
            CHECK(d.recombine() == apply_boolean(f, hs));
        }
    }
}

TEST_CASE("partition complementation sequences") {
    std::array kn{Graph::complete(5)};
    auto seq = partition_complementation_sequence(kn);
    REQUIRE(seq.size() == 1);
    CHECK(seq[0] == Partition::single_block(5));
    CHECK(fold_partition_complements(5, seq) == Graph::complete(5));
    Rng rng(83);
    Graph g = random_member(tags::equivalence, 7, rng);
    std::array gg{g, g};
    CHECK(fold_partition_complements(7, partition_complementation_sequence(gg)) == Graph(7));
    auto coords = hnk_as_xor(2, 3);
    CHECK(fold_partition_complements(8, partition_complementation_sequence(coords)) == hnk(2, 3));
    for (int i = 0; i < 500; ++i) {
        std::size_t n = 1 + rng.below(10), r = 1 + rng.below(4);
        std::vector<Graph> parts;
        for (std::size_t j = 0; j < r; ++j) parts.push_back(random_member(tags::equivalence, n, rng));
        auto s = partition_complementation_sequence(parts);
        CHECK(s.size() == r);
        CHECK(fold_partition_complements(n, s) == combine(CombineOp::Xor, parts));
    }
    std::array bad{named::path(3)};
    CHECK_THROWS_AS(partition_complementation_sequence(bad), Error);
}

TEST_CASE("bounds on random inputs") {
    Rng rng(84);
    for (int i = 0; i < 150; ++i) {
        std::size_t n = 2 + rng.below(11);
        Graph g = oracle::random_graph(n, 0.5, rng);
        std::size_t delta = std::min(max_degree(g), max_degree(complement(g)));
        if (delta + 1 <= 8) {
            auto v = vizing_matchings(g);
            CHECK(v.certified);
            CHECK(v.parts.size() <= delta + 1);
        }
        std::size_t t = twin_number(g);
        if (binom2(t) + t <= 8) {
            auto d = twin_decomposition(g);
            CHECK(d.parts.size() <= binom2(t) + t);
            CHECK(d.recombine() == g);
        }
    }
}

}
