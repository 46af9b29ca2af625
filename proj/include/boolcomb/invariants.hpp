#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boolcomb/graph.hpp"

namespace boolcomb {

inline constexpr std::size_t kCliqueLimit = 64;
inline constexpr std::size_t kChromaticLimit = 64;
inline constexpr std::size_t kBicliqueLimit = 16;
inline constexpr std::size_t kChainLimit = 12;
inline constexpr std::size_t kVcLimit = 14;
inline constexpr std::size_t kPerfectLimit = 14;
inline constexpr std::size_t kPerfectOracleLimit = 9;

std::vector<Vertex> maximum_clique(const Graph& g);
std::vector<Vertex> maximum_independent_set(const Graph& g);
std::size_t clique_number(const Graph& g);
std::size_t independence_number(const Graph& g);

struct ColoringResult {
    std::size_t value = 0;   // best colouring found
    bool exact = true;       // false when the node limit cut the search short
    std::vector<std::size_t> colors;
};

// DSATUR branch and bound. node_limit = 0 means unlimited.
ColoringResult chromatic_search(const Graph& g, std::uint64_t node_limit = 0);
std::size_t chromatic_number(const Graph& g);

std::size_t max_degree(const Graph& g);
std::size_t degeneracy(const Graph& g);

std::size_t biclique_number(const Graph& g);
std::size_t chain_number(const Graph& g);
std::size_t strong_chain_number(const Graph& g);

Partition twin_classes(const Graph& g);
std::size_t twin_number(const Graph& g);

std::size_t vc_dimension(const Graph& g);
std::size_t neighborhood_complexity(const Graph& g, std::size_t m);

// Odd hole or odd antihole (as a cyclic vertex sequence), if any.
std::optional<std::vector<Vertex>> find_odd_hole_or_antihole(const Graph& g);
bool is_perfect(const Graph& g);
// chi(H) = omega(H) on every induced subgraph, by subset dynamic programming.
bool is_perfect_by_subsets(const Graph& g);

bool is_homogeneous(const Graph& g, std::span<const Vertex> s);
// Nested extraction: a maximum homogeneous set of each graph in turn, taken
// inside the set left by the previous graphs.
std::vector<Vertex> common_homogeneous_set(std::span<const Graph> graphs);
// Set sizes after each extraction step (index 0 is n).
std::vector<std::size_t> homogeneous_extraction_trace(std::span<const Graph> graphs);

struct ParamReport {
    std::optional<std::size_t> omega, alpha, chi, max_degree, degeneracy, biclique, chain, strong_chain,
        twin_number;
    std::optional<bool> perfect;
};

// Fields outside the solver limits are left empty.
ParamReport parameters(const Graph& g);

}  // namespace boolcomb
