#include "boolcomb/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <memory>
#include <string>

namespace boolcomb {

namespace {

void check_arity(unsigned arity) {
    if (arity > kMaxArity)
        throw Error(Errc::SizeLimitExceeded, "arity " + std::to_string(arity) + " exceeds 8");
}

}  // namespace

BooleanFunction::BooleanFunction(unsigned arity, std::uint64_t table) : arity_(arity) {
    if (arity > 6) throw Error(Errc::SizeLimitExceeded, "single-word tables hold arity <= 6");
    table_[0] = table;
    if (arity < 6 && (table >> table_size()) != 0)
        throw Error(Errc::MalformedInput, "table has more than 2^k bits");
}

BooleanFunction BooleanFunction::from_bits(unsigned arity, std::span<const bool> table) {
    check_arity(arity);
    BooleanFunction f;
    f.arity_ = arity;
    if (table.size() != f.table_size())
        throw Error(Errc::MalformedInput, "truth table must have exactly 2^k entries");
    for (std::uint32_t i = 0; i < table.size(); ++i) f.set(i, table[i]);
    return f;
}

BooleanFunction BooleanFunction::constant(unsigned arity, bool value) {
    check_arity(arity);
    BooleanFunction f;
    f.arity_ = arity;
    if (value) {
        f.table_.fill(~std::uint64_t{0});
        f.mask_tail();
    }
    return f;
}

BooleanFunction BooleanFunction::projection(unsigned arity, unsigned var) {
    check_arity(arity);
    if (var < 1 || var > arity)
        throw Error(Errc::OutOfRangeVariable, "variable x" + std::to_string(var) + " out of range");
    BooleanFunction f = constant(arity, false);
    for (std::uint32_t i = 0; i < f.table_size(); ++i) f.set(i, (i >> (var - 1)) & 1U);
    return f;
}

BooleanFunction BooleanFunction::conjunction(unsigned arity) {
    BooleanFunction f = constant(arity, false);
    f.set(static_cast<std::uint32_t>(f.table_size() - 1), true);
    return f;
}

BooleanFunction BooleanFunction::disjunction(unsigned arity) {
    BooleanFunction f = constant(arity, true);
    f.set(0, false);
    return f;
}

BooleanFunction BooleanFunction::parity(unsigned arity) {
    BooleanFunction f = constant(arity, false);
    for (std::uint32_t i = 0; i < f.table_size(); ++i) f.set(i, std::popcount(i) & 1);
    return f;
}

BooleanFunction BooleanFunction::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) throw ParseError(0, "expected <arity>:0x<hex>");
    unsigned arity = 0;
    for (std::size_t i = 0; i < colon; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError(i, "arity must be decimal");
        arity = arity * 10 + static_cast<unsigned>(text[i] - '0');
        if (arity > kMaxArity) throw ParseError(i, "arity exceeds 8");
    }
    std::size_t pos = colon + 1;
    if (text.substr(pos, 2) != "0x" && text.substr(pos, 2) != "0X") throw ParseError(pos, "expected 0x prefix");
    pos += 2;
    if (pos == text.size()) throw ParseError(pos, "empty hex table");

    BooleanFunction f = constant(arity, false);
    // Read hex digits most significant first into a 256-bit accumulator.
    std::array<std::uint64_t, 4> acc{};
    for (std::size_t i = pos; i < text.size(); ++i) {
        char c = text[i];
        unsigned d;
        if (c >= '0' && c <= '9') d = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') d = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') d = static_cast<unsigned>(c - 'A' + 10);
        else throw ParseError(i, "invalid hex digit");
        if (acc[3] >> 60) throw ParseError(i, "table longer than 2^k bits");
        for (int w = 3; w > 0; --w) acc[w] = (acc[w] << 4) | (acc[w - 1] >> 60);
        acc[0] = (acc[0] << 4) | d;
        // Check overflow past 2^k bits as we go so the offset points at the culprit.
        std::size_t bits = f.table_size();
        bool over = false;
        for (std::size_t w = 0; w < 4; ++w) {
            std::size_t lo = w * 64;
            if (bits >= lo + 64) continue;
            std::uint64_t allowed = bits <= lo ? 0 : (std::uint64_t{1} << (bits - lo)) - 1;
            if (acc[w] & ~allowed) over = true;
        }
        if (over) throw ParseError(i, "table longer than 2^k bits");
    }
    f.table_ = acc;
    return f;
}

bool BooleanFunction::eval(std::span<const bool> inputs) const {
    if (inputs.size() != arity_) throw Error(Errc::ArityMismatch, "wrong number of inputs");
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i)
        if (inputs[i]) idx |= std::uint32_t{1} << i;
    return (*this)(idx);
}

std::string BooleanFunction::to_string() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string hex;
    std::size_t nibbles = (table_size() + 3) / 4;
    for (std::size_t i = nibbles; i-- > 0;) {
        std::size_t bit = i * 4;
        unsigned d = static_cast<unsigned>((table_[bit / 64] >> (bit % 64)) & 0xF);
        hex.push_back(digits[d]);
    }
    auto nz = hex.find_first_not_of('0');
    hex = nz == std::string::npos ? "0" : hex.substr(nz);
    return std::to_string(arity_) + ":0x" + hex;
}

bool BooleanFunction::is_monotone() const noexcept {
    for (std::uint32_t i = 0; i < table_size(); ++i) {
        if (!(*this)(i)) continue;
        for (unsigned b = 0; b < arity_; ++b)
            if (!(*this)(i | (1U << b))) return false;
    }
    return true;
}

bool BooleanFunction::is_constant() const noexcept {
    return *this == constant(arity_, false) || *this == constant(arity_, true);
}

BooleanFunction BooleanFunction::operator!() const {
    BooleanFunction f = *this;
    for (auto& w : f.table_) w = ~w;
    f.mask_tail();
    return f;
}

BooleanFunction operator&(const BooleanFunction& a, const BooleanFunction& b) {
    if (a.arity_ != b.arity_) throw Error(Errc::ArityMismatch, "arity mismatch");
    BooleanFunction f = a;
    for (std::size_t i = 0; i < 4; ++i) f.table_[i] &= b.table_[i];
    return f;
}

BooleanFunction operator|(const BooleanFunction& a, const BooleanFunction& b) {
    if (a.arity_ != b.arity_) throw Error(Errc::ArityMismatch, "arity mismatch");
    BooleanFunction f = a;
    for (std::size_t i = 0; i < 4; ++i) f.table_[i] |= b.table_[i];
    return f;
}

BooleanFunction operator^(const BooleanFunction& a, const BooleanFunction& b) {
    if (a.arity_ != b.arity_) throw Error(Errc::ArityMismatch, "arity mismatch");
    BooleanFunction f = a;
    for (std::size_t i = 0; i < 4; ++i) f.table_[i] ^= b.table_[i];
    return f;
}

void BooleanFunction::set(std::uint32_t input, bool value) noexcept {
    std::uint64_t bit = std::uint64_t{1} << (input & 63U);
    if (value) table_[input >> 6] |= bit;
    else table_[input >> 6] &= ~bit;
}

void BooleanFunction::mask_tail() noexcept {
    std::size_t bits = table_size();
    for (std::size_t w = 0; w < 4; ++w) {
        std::size_t lo = w * 64;
        if (bits >= lo + 64) continue;
        table_[w] &= bits <= lo ? 0 : (std::uint64_t{1} << (bits - lo)) - 1;
    }
}

AnfForm anf(const BooleanFunction& f) {
    const std::size_t size = f.table_size();
    std::vector<unsigned char> c(size);
    for (std::uint32_t i = 0; i < size; ++i) c[i] = f(i);
    // Binary Moebius transform over GF(2).
    for (std::size_t step = 1; step < size; step <<= 1)
        for (std::size_t i = 0; i < size; ++i)
            if (i & step) c[i] ^= c[i ^ step];
    AnfForm out{f.arity(), {}};
    for (std::uint32_t i = 0; i < size; ++i)
        if (c[i]) out.monomials.push_back(i);
    return out;
}

BooleanFunction from_anf(const AnfForm& a) {
    check_arity(a.arity);
    const std::size_t size = std::size_t{1} << a.arity;
    std::vector<unsigned char> c(size, 0);
    for (std::uint32_t m : a.monomials) {
        if (m >= size) throw Error(Errc::OutOfRangeVariable, "monomial uses a variable beyond the arity");
        c[m] ^= 1;
    }
    // The transform is an involution.
    for (std::size_t step = 1; step < size; step <<= 1)
        for (std::size_t i = 0; i < size; ++i)
            if (i & step) c[i] ^= c[i ^ step];
    std::unique_ptr<bool[]> bits(new bool[size]);
    for (std::size_t i = 0; i < size; ++i) bits[i] = c[i];
    return BooleanFunction::from_bits(a.arity, std::span<const bool>(bits.get(), size));
}

std::vector<std::uint32_t> monotone_dnf(const BooleanFunction& f) {
    if (!f.is_monotone()) throw Error(Errc::NotMonotone, f.to_string() + " is not monotone");
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < f.table_size(); ++i) {
        if (!f(i)) continue;
        bool minimal = true;
        for (unsigned b = 0; b < f.arity() && minimal; ++b)
            if ((i >> b) & 1U) minimal = !f(i & ~(1U << b));
        if (minimal) out.push_back(i);
    }
    return out;
}

std::vector<unsigned> mask_variables(std::uint32_t mask) {
    std::vector<unsigned> out;
    for (unsigned b = 0; b < 32; ++b)
        if ((mask >> b) & 1U) out.push_back(b + 1);
    return out;
}

FunctionRange::FunctionRange(unsigned arity) : arity_(arity) {
    if (arity > kEnumerateArityLimit)
        throw Error(Errc::SizeLimitExceeded, "enumeration limited to arity <= 4");
    count_ = std::uint64_t{1} << (std::uint64_t{1} << arity);
}

FunctionRange enumerate_functions(unsigned arity) { return FunctionRange(arity); }

}  // namespace boolcomb
