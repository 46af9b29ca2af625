#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "boolcomb/classes.hpp"
#include "boolcomb/error.hpp"
#include "boolcomb/extremal.hpp"
#include "boolcomb/invariants.hpp"
#include "boolcomb/io.hpp"
#include "oracles.hpp"

using namespace boolcomb;

TEST_SUITE("extremal_chi") {

TEST_CASE("hnk construction") {
    for (std::size_t n = 1; n <= 5; ++n) CHECK(hnk(n, 1) == Graph(n));
    CHECK(oracle::is_isomorphic(hnk(2, 2), named::cycle(4)));
    for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}, {4, 2}, {3, 4}, {2, 6}}) {
        auto parts = hnk_as_xor(n, k);
        CHECK(parts.size() == k);
        for (const auto& p : parts) CHECK(is_member(tags::equivalence, p));
        CHECK(combine(CombineOp::Xor, parts) == hnk(n, k));
    }
    CHECK(hnk(2, 3).edge_count() == combine(CombineOp::Xor, hnk_as_xor(2, 3)).edge_count());
    CHECK_THROWS_AS(hnk(2, 13), Error);
    CHECK_NOTHROW(hnk(2, 12));
}

TEST_CASE("hnk reports") {
    auto r33 = hnk_report(3, 3);
    CHECK(r33.alpha_bound == doctest::Approx(9.0));
    auto r22 = hnk_report(2, 2);
    CHECK(r22.omega_bound == doctest::Approx(4.0));
    CHECK(r22.omega == 2);
    auto r32 = hnk_report(3, 2);
    CHECK(r32.alpha_bound == doctest::Approx(2 * std::numbers::e * 3));
    CHECK(r32.alpha <= 16);
    for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}, {2, 4}, {2, 5}}) {
        auto r = hnk_report(n, k);
        CHECK(static_cast<double>(r.omega) <= r.omega_bound);
        CHECK(static_cast<double>(r.alpha) <= r.alpha_bound);
        Graph g = hnk(n, k);
        if (g.order() <= 16) CHECK(r.omega == oracle::clique_number(g));
        if (r.chi) {
            CHECK(*r.chi >= r.chi_lower);
            CHECK(*r.chi * r.alpha >= g.order());
        }
    }
    CHECK_THROWS_AS(hnk_report(3, 4), Error);
}

TEST_CASE("chi-binding runner") {
    auto u = verify_chi_binding("union:3:equiv", "linear", 500, 10, 1);
    CHECK(u.passed);
    auto s = verify_chi_binding("intersect:2:split", "power", 500, 10, 2);
    CHECK(s.passed);
    auto m = verify_chi_binding("intersect:2:multipartite", "multipartite", 300, 10, 3);
    CHECK(m.passed);
    auto p = verify_chi_binding("union:2:d1", "product", 200, 10, 4);
    CHECK(p.passed);
    // a deliberately false binding must fail with a re-checkable witness
    auto bad = verify_chi_binding("union:3:equiv", "linear:0", 10, 10, 5);
    CHECK_FALSE(bad.passed);
    REQUIRE(bad.counterexample);
    CHECK(reverify_counterexample(*bad.counterexample));
    auto witness = nlohmann::json::parse(*bad.counterexample);
    witness["binding"] = "linear:1000";
    CHECK_FALSE(reverify_counterexample(witness.dump()));
    CHECK_THROWS_AS(verify_chi_binding("union:x:equiv", "linear", 1, 5, 0), Error);
    CHECK_THROWS_AS(verify_chi_binding("union:2:cograph", "linear", 1, 5, 0), Error);
    CHECK_THROWS_AS(verify_chi_binding("union:2:equiv", "cubic", 1, 5, 0), Error);
    CHECK(verify_chi_binding("union:2:equiv", "linear", 20, 10, 9).scope ==
          verify_chi_binding("union:2:equiv", "linear", 20, 10, 9).scope);
}

TEST_CASE("split intersections") {
    Rng rng(120);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 4 + rng.below(9);
        auto r = check_split_intersection(random_split(n, rng), random_split(n, rng));
        CHECK(r.chi_bound);
        CHECK(r.meyniel);
    }
}

TEST_CASE("catalogue") {
    const auto& ids = theorem_catalogue();
    CHECK(ids.size() == 10);
    for (const auto& id : ids) {
        auto c = verify_theorem(id, 7);
        CHECK_MESSAGE(c.passed, id);
        CHECK(c.id == id);
        CHECK_FALSE(c.scope.empty());
        CHECK_FALSE(c.counterexample);
    }
    CHECK_THROWS_AS(verify_theorem("no-such-check"), Error);
    auto all = verify_all(7);
    REQUIRE(all.size() == ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) CHECK(all[i].id == ids[i]);
    CHECK(verify_theorem("chain-sandwich", 3).passed);
}

TEST_CASE("counterexample re-verification rejects non-witnesses") {
    nlohmann::json e0 = {{"kind", "e0"}, {"n", 4}, {"f", "2:0x6"}};
    CHECK_FALSE(reverify_counterexample(e0.dump()));
    nlohmann::json rep = {{"kind", "representation"},
                          {"target", to_graph6(named::cycle(4))},
                          {"tag", "equiv"},
                          {"parts", {to_graph6(named::matching_graph(2)), "Cc"}},
                          {"f", "2:0x6"}};
    // parts must be class members that recombine to the target
    CHECK(reverify_counterexample(rep.dump()) ==
          (is_member(tags::equivalence, from_graph6("Cc")) &&
           combine(CombineOp::Xor, std::array{named::matching_graph(2), from_graph6("Cc")}) == named::cycle(4)));
}

TEST_CASE("exploratory C5 search runs") {
    auto c = explore_c5_three_xor();
    CHECK(c.passed);
    CHECK_FALSE(c.scope.empty());
}

}
