#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "boolcomb/graph.hpp"
#include "boolcomb/rng.hpp"

namespace boolcomb {

enum class ClassKind {
    Equivalence,
    CompleteMultipartite,
    Split,
    Cograph,
    Matching,        // D_1: maximum degree at most 1
    BoundedDegree,   // D_k
    AtMostEdges,     // E_k
    ClassL,          // K_n, or a clique plus one isolated vertex
    ClassC,          // one clique plus isolated vertices
    ClassCOrMatching,
    Complete,
    Empty,
};

struct ClassTag {
    ClassKind kind = ClassKind::Equivalence;
    std::size_t param = 0;  // k for BoundedDegree / AtMostEdges

    friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

namespace tags {
inline constexpr ClassTag equivalence{ClassKind::Equivalence, 0};
inline constexpr ClassTag multipartite{ClassKind::CompleteMultipartite, 0};
inline constexpr ClassTag split{ClassKind::Split, 0};
inline constexpr ClassTag cograph{ClassKind::Cograph, 0};
inline constexpr ClassTag matching{ClassKind::Matching, 0};
inline constexpr ClassTag class_l{ClassKind::ClassL, 0};
inline constexpr ClassTag class_c{ClassKind::ClassC, 0};
inline constexpr ClassTag class_c_or_matching{ClassKind::ClassCOrMatching, 0};
inline constexpr ClassTag complete{ClassKind::Complete, 0};
inline constexpr ClassTag empty{ClassKind::Empty, 0};
inline constexpr ClassTag bounded_degree(std::size_t k) { return {ClassKind::BoundedDegree, k}; }
inline constexpr ClassTag at_most_edges(std::size_t k) { return {ClassKind::AtMostEdges, k}; }
}  // namespace tags

// "equiv", "multipartite", "split", "cograph", "d1", "dk:<k>", "ek:<k>", "L",
// "C", "C|d1", "complete", "empty".
ClassTag parse_class_tag(std::string_view text);
std::string to_string(const ClassTag& tag);

bool is_member(const ClassTag& tag, const Graph& g);
bool is_intersection_closed(const ClassTag& tag);

inline constexpr std::size_t kEnumerateLimit = 9;
inline constexpr std::size_t kFilterEnumerateLimit = 7;

// Calls visit once per labeled member on {0..n-1}; stops early if visit returns false.
void for_each_member(const ClassTag& tag, std::size_t n, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> enumerate(const ClassTag& tag, std::size_t n);

// Restricted-growth strings of length n: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
void for_each_set_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit);

Graph random_member(const ClassTag& tag, std::size_t n, Rng& rng);
Graph random_member(const ClassTag& tag, std::size_t n, std::uint64_t seed);

// Random set partition by sequential (Chinese restaurant) insertion, theta = 1.
Partition random_partition(std::size_t n, Rng& rng);

struct SplitGraph {
    Graph graph;
    std::vector<char> in_clique;  // witness partition: clique vs independent side
};
SplitGraph random_split(std::size_t n, Rng& rng);

// Inversion graph: i ~ j iff (i - j)(pi(i) - pi(j)) < 0.
Graph permutation_graph(std::span<const Vertex> pi);

}  // namespace boolcomb
