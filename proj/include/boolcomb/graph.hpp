#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "boolcomb/error.hpp"

namespace boolcomb {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kMaxVertices = std::size_t{1} << 16;
inline constexpr std::size_t kWordBits = 64;

class GraphBuilder;

// Simple labeled graph on {0..n-1}. Rows are bit-packed so the boolean
// combination operators run a word at a time. Values are immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);  // edgeless O_n

    static Graph complete(std::size_t n);
    static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
    }
    std::span<const Word> row(Vertex v) const noexcept {
        return {bits_.data() + v * words_, words_};
    }
    // Single-word neighbourhood; only valid when order() <= 64.
    Word mask(Vertex v) const noexcept { return words_ == 0 ? 0 : bits_[v * words_]; }

    std::size_t degree(Vertex v) const noexcept;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t edges_ = 0;
    std::vector<Word> bits_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    explicit GraphBuilder(const Graph& start);

    std::size_t order() const noexcept { return g_.n_; }
    GraphBuilder& set(Vertex u, Vertex v, bool on);
    GraphBuilder& add_edge(Vertex u, Vertex v) { return set(u, v, true); }
    GraphBuilder& remove_edge(Vertex u, Vertex v) { return set(u, v, false); }
    GraphBuilder& toggle(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const noexcept { return g_.adjacent(u, v); }

    // Raw row access for word-parallel construction; build() restores the
    // empty diagonal and recounts edges.
    std::span<Word> row(Vertex v) noexcept { return {g_.bits_.data() + v * g_.words_, g_.words_}; }

    Graph build() &&;

private:
    void check(Vertex u, Vertex v) const;
    Graph g_;
};

// Partition of {0..n-1} into disjoint nonempty blocks. Blocks are sorted
// internally and ordered by their minimum element.
class Partition {
public:
    Partition() = default;
    static Partition from_blocks(std::size_t n, std::vector<std::vector<Vertex>> blocks);
    // labels[v] = block id of v; ids need not be contiguous.
    static Partition from_labels(std::span<const std::size_t> labels);
    static Partition singletons(std::size_t n);
    static Partition single_block(std::size_t n);

    std::size_t ground_size() const noexcept { return n_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
    const std::vector<Vertex>& block(std::size_t i) const { return blocks_.at(i); }
    std::size_t block_of(Vertex v) const { return block_id_.at(v); }

    friend bool operator==(const Partition& a, const Partition& b) noexcept {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<Vertex>> blocks_;
    std::vector<std::size_t> block_id_;
};

class BooleanFunction;

enum class CombineOp { Union, Intersect, Xor };

Graph combine(CombineOp op, std::span<const Graph> graphs);
// result(u,v) = f(H_1(u,v), ..., H_k(u,v)); graphs.size() must equal f.arity().
Graph apply_boolean(const BooleanFunction& f, std::span<const Graph> graphs);
// Variant usable with arity-0 functions, where the vertex count cannot be
// read off the inputs.
Graph apply_boolean(const BooleanFunction& f, std::span<const Graph> graphs, std::size_t n);

Graph complement(const Graph& g);
Graph subgraph_complement(const Graph& g, std::span<const Vertex> subset);
Graph local_complement(const Graph& g, Vertex v);
Graph partition_complement(const Graph& g, const Partition& p);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

// Connected components as a partition.
Partition component_partition(const Graph& g);

// Graph whose only non-trivial clique is `subset`.
Graph clique_on(std::size_t n, std::span<const Vertex> subset);
// Equivalence graph whose maximal cliques are the blocks of p.
Graph equivalence_graph(const Partition& p);
Graph relabel(const Graph& g, std::span<const Vertex> perm);  // v -> perm[v]

inline constexpr std::size_t kIsomorphismLimit = 12;

bool is_isomorphic(const Graph& g, const Graph& h, std::size_t limit = kIsomorphismLimit);
// A vertex map g -> h preserving adjacency, if one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h,
                                                    std::size_t limit = kIsomorphismLimit);

// Common small graphs used throughout the tests and the harness.
namespace named {
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph star(std::size_t leaves);
Graph petersen();
Graph disjoint_union(std::span<const Graph> parts);
Graph matching_graph(std::size_t pairs);  // pairs * K_2
}  // namespace named

}  // namespace boolcomb
