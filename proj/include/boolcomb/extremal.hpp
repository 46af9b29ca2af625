#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolcomb/classes.hpp"
#include "boolcomb/graph.hpp"

namespace boolcomb {

inline constexpr std::size_t kHnkLimit = 4096;

// Vertices are tuples of [n]^k in row-major order (first coordinate most
// significant); adjacent iff they agree on an odd number of coordinates.
Graph hnk(std::size_t n, std::size_t k);
// G_i joins tuples agreeing on coordinate i; their XOR is hnk(n, k).
std::vector<Graph> hnk_as_xor(std::size_t n, std::size_t k);

struct HnkReport {
    std::size_t n = 0, k = 0;
    std::size_t omega = 0, alpha = 0;
    std::optional<std::size_t> chi;  // empty when the colouring search hit its node limit
    bool chi_exact = false;
    double omega_bound = 0, alpha_bound = 0;
    std::size_t chi_lower = 0;  // ceil(n^k / alpha)
};

HnkReport hnk_report(std::size_t n, std::size_t k, std::uint64_t chi_node_limit = 20'000'000);

struct TheoremCheck {
    std::string id;
    std::string scope;
    bool passed = false;
    std::optional<std::string> counterexample;  // JSON, re-checkable with reverify_counterexample
};

// tag_expr is "<union|intersect>:<t>:<class tag>"; binding is one of
// "linear" (t x), "linear:<c>" (c x), "power" (x^(2^t)), "product" (x^t),
// "multipartite" (t^(2^t) x).
TheoremCheck verify_chi_binding(std::string_view tag_expr, std::string_view binding, std::size_t samples,
                                std::size_t n, std::uint64_t seed);

// Recomputes a failing check's witness; true when the violation is genuine.
bool reverify_counterexample(const std::string& counterexample_json);

struct SplitIntersectionResult {
    bool chi_bound = true;   // chi <= omega^4
    bool meyniel = true;     // colour classes with a 0 coordinate are bipartite, the rest perfect
};
SplitIntersectionResult check_split_intersection(const SplitGraph& a, const SplitGraph& b);

const std::vector<std::string>& theorem_catalogue();
TheoremCheck verify_theorem(std::string_view id, std::uint64_t seed = 7);
// Runs the catalogue in parallel; results keep catalogue order.
std::vector<TheoremCheck> verify_all(std::uint64_t seed = 7);

// Exploratory: is C_5 a 3-XOR of equivalence graphs? Never fails; the
// outcome is recorded in scope.
TheoremCheck explore_c5_three_xor();

}  // namespace boolcomb
