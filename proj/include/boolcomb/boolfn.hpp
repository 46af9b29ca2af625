#pragma once

#include <array>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolcomb/error.hpp"

namespace boolcomb {

inline constexpr unsigned kMaxArity = 8;

// Truth table of f : {0,1}^k -> {0,1}. Input vectors are read as binary
// integers with x_1 as the least significant bit.
class BooleanFunction {
public:
    BooleanFunction() = default;  // arity 0, constant 0
    BooleanFunction(unsigned arity, std::uint64_t table);  // arity <= 6

    static BooleanFunction from_bits(unsigned arity, std::span<const bool> table);
    static BooleanFunction constant(unsigned arity, bool value);
    static BooleanFunction projection(unsigned arity, unsigned var);  // var is 1-based
    static BooleanFunction conjunction(unsigned arity);
    static BooleanFunction disjunction(unsigned arity);
    static BooleanFunction parity(unsigned arity);
    // Text form "<arity>:0x<hex>", e.g. "2:0x6" for XOR.
    static BooleanFunction parse(std::string_view text);

    unsigned arity() const noexcept { return arity_; }
    std::size_t table_size() const noexcept { return std::size_t{1} << arity_; }

    bool operator()(std::uint32_t input) const noexcept {
        return (table_[input >> 6] >> (input & 63U)) & 1U;
    }
    bool eval(std::span<const bool> inputs) const;

    // Table as an integer; only meaningful for arity <= 6.
    std::uint64_t table_word() const noexcept { return table_[0]; }
    std::string to_string() const;

    bool is_monotone() const noexcept;
    bool is_constant() const noexcept;

    BooleanFunction operator!() const;
    friend BooleanFunction operator&(const BooleanFunction& a, const BooleanFunction& b);
    friend BooleanFunction operator|(const BooleanFunction& a, const BooleanFunction& b);
    friend BooleanFunction operator^(const BooleanFunction& a, const BooleanFunction& b);

    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

private:
    void set(std::uint32_t input, bool value) noexcept;
    void mask_tail() noexcept;

    unsigned arity_ = 0;
    std::array<std::uint64_t, 4> table_{};
};

// Algebraic normal form: XOR of AND-monomials. A monomial is a bitmask over
// variables (bit i-1 <-> x_i); mask 0 is the constant-1 monomial.
struct AnfForm {
    unsigned arity = 0;
    std::vector<std::uint32_t> monomials;  // sorted, distinct

    friend bool operator==(const AnfForm&, const AnfForm&) = default;
};

AnfForm anf(const BooleanFunction& f);
BooleanFunction from_anf(const AnfForm& a);

// Minimal true points of a monotone function (its prime implicants), sorted.
std::vector<std::uint32_t> monotone_dnf(const BooleanFunction& f);

// Converts a variable mask to the 1-based variable indices it contains.
std::vector<unsigned> mask_variables(std::uint32_t mask);

inline constexpr unsigned kEnumerateArityLimit = 4;

// All 2^(2^k) functions of arity k in increasing truth-table order.
class FunctionRange {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = BooleanFunction;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = BooleanFunction;

        iterator() = default;
        iterator(unsigned arity, std::uint64_t table) : arity_(arity), table_(table) {}
        BooleanFunction operator*() const { return BooleanFunction(arity_, table_); }
        iterator& operator++() {
            ++table_;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++table_;
            return old;
        }
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        unsigned arity_ = 0;
        std::uint64_t table_ = 0;
    };

    explicit FunctionRange(unsigned arity);
    iterator begin() const { return {arity_, 0}; }
    iterator end() const { return {arity_, count_}; }
    std::uint64_t size() const noexcept { return count_; }

private:
    unsigned arity_;
    std::uint64_t count_;
};

FunctionRange enumerate_functions(unsigned arity);

}  // namespace boolcomb
