#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "boolcomb/boolfn.hpp"
#include "boolcomb/classes.hpp"
#include "boolcomb/graph.hpp"

namespace boolcomb {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;
inline constexpr std::size_t kBooldimVertexLimit = 11;  // pair bits fit one word

struct DimWitness {
    std::size_t k = 0;
    BooleanFunction f;
    std::vector<Graph> parts;
};

// witness set when found; otherwise exhausted_k is the largest arity ruled out.
struct DimResult {
    std::optional<DimWitness> witness;
    std::size_t exhausted_k = 0;
};

enum class DimMode { Any, Union, Intersect, Xor };

// Searches multisets of k class members on V(g). Throws BudgetExceeded when
// (candidate count)^k exceeds the budget.
std::optional<DimWitness> exists_representation(const Graph& g, const ClassTag& tag, std::size_t k,
                                                DimMode mode = DimMode::Any,
                                                std::uint64_t budget = kDefaultSearchBudget);

DimResult boolean_dimension(const Graph& g, const ClassTag& tag, std::size_t k_max,
                            std::uint64_t budget = kDefaultSearchBudget);
DimResult restricted_dimension(const Graph& g, const ClassTag& tag, DimMode mode, std::size_t k_max,
                               std::uint64_t budget = kDefaultSearchBudget);

}  // namespace boolcomb
