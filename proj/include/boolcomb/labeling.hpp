#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolcomb/boolfn.hpp"
#include "boolcomb/graph.hpp"

namespace boolcomb {

struct Label {
    std::vector<bool> bits;

    // Hex, most significant bit first, zero padded on the right.
    std::string to_hex() const;
    static Label from_hex(std::string_view hex, std::size_t nbits);

    friend bool operator==(const Label&, const Label&) = default;
};

enum class BaseScheme { Equivalence };

// ceil(log2 n), and 1 when n <= 1.
std::size_t label_width(std::size_t n);

// Label of v = index of its component, fixed width label_width(n).
std::vector<Label> encode_equivalence(const Graph& g);
bool decode_equivalence(const Label& a, const Label& b);

struct ComposedScheme {
    BooleanFunction f;
    std::vector<BaseScheme> bases;
    std::size_t n = 0;

    std::size_t base_width() const { return label_width(n); }
    // 8-bit arity header, then val(f), then one base field per variable.
    std::size_t label_bits() const;
};

struct ComposedLabels {
    ComposedScheme scheme;
    std::vector<Label> labels;
};

ComposedLabels compose(const BooleanFunction& f, std::span<const BaseScheme> schemes,
                       std::span<const Graph> graphs);
bool decode(const ComposedScheme& scheme, const Label& a, const Label& b);

}  // namespace boolcomb
