#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "boolcomb/boolfn.hpp"
#include "boolcomb/classes.hpp"
#include "boolcomb/graph.hpp"

namespace boolcomb {

// target = apply_boolean(f, parts), flipped entrywise when alpha is set.
struct Decomposition {
    Graph target;
    BooleanFunction f;
    bool alpha = false;
    std::vector<std::pair<Graph, ClassTag>> parts;
    bool certified = false;

    std::vector<Graph> graphs() const;
    Graph recombine() const;
};

using EdgeClass = std::vector<std::pair<Vertex, Vertex>>;

// Proper edge colouring with at most max_degree + 1 colours.
std::vector<EdgeClass> misra_gries_edge_coloring(const Graph& g);
// First-fit colouring; at most 2 * max_degree - 1 colours.
std::vector<EdgeClass> greedy_edge_coloring(const Graph& g);

enum class VizingBranch { Auto, Direct, Complement };

struct VizingOptions {
    VizingBranch branch = VizingBranch::Auto;
    bool greedy = false;  // debug fallback instead of Misra-Gries
};

// Union of matchings, or the complement of one when the complement has
// smaller maximum degree (Auto; ties stay direct).
Decomposition vizing_matchings(const Graph& g, VizingOptions opts = {});

// OR over complete pairs of twin classes, XOR'd with classes whose inside
// must be flipped. Requires C(t,2) + t <= budget.
Decomposition twin_decomposition(const Graph& g, std::size_t budget = kMaxArity);

// Function of the graphs C_a (clique on V - a plus isolated a) for a outside
// the largest twin class. Requires |V - Q| <= budget.
Decomposition class_L_decomposition(const Graph& g, std::size_t budget = kMaxArity);

struct XorNormalForm {
    bool alpha = false;
    std::vector<Graph> parts;
};

// apply_boolean(f, graphs) as alpha XOR the parity of intersections of the
// inputs over the ANF monomials of f.
XorNormalForm xor_normal_form(const BooleanFunction& f, std::span<const Graph> graphs, const ClassTag& tag);
Decomposition xor_normal_form_decomposition(const BooleanFunction& f, std::span<const Graph> graphs,
                                            const ClassTag& tag);

std::vector<Partition> partition_complementation_sequence(std::span<const Graph> parts);
Graph fold_partition_complements(std::size_t n, std::span<const Partition> seq);

// Hard check used by every decomposition before it is returned.
void certify(Decomposition& d);

}  // namespace boolcomb
