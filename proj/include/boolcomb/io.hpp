#pragma once

#include <string>
#include <string_view>

#include "boolcomb/graph.hpp"

namespace boolcomb {

inline constexpr std::size_t kGraph6Limit = 62;

// graph6 short form only (n <= 62).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// "n m" header, then one "u v" line per edge with u < v, sorted.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

enum class GraphFormat { Auto, Graph6, EdgeList };

// Auto picks edge-list when the text contains whitespace between tokens.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);
std::string emit_graph(const Graph& g, GraphFormat format = GraphFormat::Graph6);

}  // namespace boolcomb
