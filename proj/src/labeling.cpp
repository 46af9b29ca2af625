#include "boolcomb/labeling.hpp"

#include <bit>
#include <memory>
#include <string>

#include "boolcomb/classes.hpp"

namespace boolcomb {

namespace {

void put_bits(std::vector<bool>& out, std::uint64_t value, std::size_t width) {
    for (std::size_t i = width; i-- > 0;) out.push_back((value >> i) & 1U);
}

std::uint64_t get_bits(const std::vector<bool>& in, std::size_t pos, std::size_t width) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) v = (v << 1) | (in[pos + i] ? 1U : 0U);
    return v;
}

void put_table(std::vector<bool>& out, const BooleanFunction& f) {
    for (std::size_t i = f.table_size(); i-- > 0;) out.push_back(f(static_cast<std::uint32_t>(i)));
}

}  // namespace

std::string Label::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        unsigned d = 0;
        for (std::size_t j = 0; j < 4; ++j) d = (d << 1) | (i + j < bits.size() && bits[i + j] ? 1U : 0U);
        out.push_back(digits[d]);
    }
    return out;
}

Label Label::from_hex(std::string_view hex, std::size_t nbits) {
    if (hex.size() != (nbits + 3) / 4)
        throw Error(Errc::MalformedLabel, "hex label has " + std::to_string(hex.size()) + " digits, expected " +
                                              std::to_string((nbits + 3) / 4));
    Label l;
    for (std::size_t i = 0; i < hex.size(); ++i) {
        char c = hex[i];
        unsigned d;
        if (c >= '0' && c <= '9') d = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') d = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') d = static_cast<unsigned>(c - 'A' + 10);
        else throw Error(Errc::MalformedLabel, "invalid hex digit at " + std::to_string(i));
        for (int s = 3; s >= 0; --s) {
            bool bit = (d >> s) & 1U;
            if (l.bits.size() < nbits) l.bits.push_back(bit);
            else if (bit) throw Error(Errc::MalformedLabel, "non-zero padding");
        }
    }
    return l;
}

std::size_t label_width(std::size_t n) {
    if (n <= 1) return 1;
    return static_cast<std::size_t>(std::bit_width(n - 1));
}

std::vector<Label> encode_equivalence(const Graph& g) {
    if (!is_member(tags::equivalence, g))
        throw Error(Errc::NotEquivalenceGraph, "labelling needs an equivalence graph");
    Partition comps = component_partition(g);
    const std::size_t w = label_width(g.order());
    std::vector<Label> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) put_bits(out[v].bits, comps.block_of(v), w);
    return out;
}

bool decode_equivalence(const Label& a, const Label& b) {
    if (a.bits.size() != b.bits.size()) throw Error(Errc::MalformedLabel, "labels differ in length");
    return a == b;
}

std::size_t ComposedScheme::label_bits() const { return 8 + f.table_size() + bases.size() * base_width(); }

ComposedLabels compose(const BooleanFunction& f, std::span<const BaseScheme> schemes, std::span<const Graph> graphs) {
    if (schemes.size() != graphs.size() || f.arity() != graphs.size())
        throw Error(Errc::ArityMismatch, "function arity, scheme count and graph count must agree");
    if (graphs.empty()) throw Error(Errc::EmptyInput, "need at least one base graph");
    const std::size_t n = graphs.front().order();
    std::vector<std::vector<Label>> base;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].order() != n) throw Error(Errc::MismatchedVertexCount, "graphs have different vertex counts");
        if (!is_member(tags::equivalence, graphs[i]))
            throw Error(Errc::SchemeRejectsGraph, "graph " + std::to_string(i) + " is not an equivalence graph");
        base.push_back(encode_equivalence(graphs[i]));
    }
    ComposedLabels out;
    out.scheme = {f, std::vector<BaseScheme>(schemes.begin(), schemes.end()), n};
    out.labels.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        auto& bits = out.labels[v].bits;
        put_bits(bits, f.arity(), 8);
        put_table(bits, f);
        for (const auto& b : base) bits.insert(bits.end(), b[v].bits.begin(), b[v].bits.end());
    }
    return out;
}

bool decode(const ComposedScheme& scheme, const Label& a, const Label& b) {
    const std::size_t total = scheme.label_bits();
    if (a.bits.size() != total || b.bits.size() != total)
        throw Error(Errc::MalformedLabel, "label length differs from the scheme's " + std::to_string(total) + " bits");
    const std::size_t r = scheme.bases.size();
    if (get_bits(a.bits, 0, 8) != r || get_bits(b.bits, 0, 8) != r)
        throw Error(Errc::MalformedLabel, "arity header does not match the scheme");
    const std::size_t tsize = std::size_t{1} << r;
    for (std::size_t i = 0; i < tsize; ++i)
        if (a.bits[8 + i] != b.bits[8 + i]) throw Error(Errc::MalformedLabel, "labels carry different functions");
    // val(f) is stored most significant entry first.
    const std::size_t w = scheme.base_width();
    std::uint32_t input = 0;
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t pos = 8 + tsize + i * w;
        if (get_bits(a.bits, pos, w) == get_bits(b.bits, pos, w)) input |= 1U << i;
    }
    return a.bits[8 + (tsize - 1 - input)];
}

}  // namespace boolcomb
