#include "boolcomb/io.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace boolcomb {

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6Limit) throw Error(Errc::SizeLimitExceeded, "graph6 short form holds at most 62 vertices");
    std::string out(1, static_cast<char>(n + 63));
    unsigned acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.ends_with('\n')) text.remove_suffix(1);
    if (text.ends_with('\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError(0, "empty graph6 string");
    auto c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) throw ParseError(0, "graph6 long form (n > 62) is not supported");
    if (c0 < 63 || c0 > 125) throw ParseError(0, "invalid graph6 size byte");
    const std::size_t n = c0 - 63u;
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != 1 + bytes)
        throw ParseError(std::min(text.size(), 1 + bytes),
                         "expected " + std::to_string(1 + bytes) + " bytes for n = " + std::to_string(n));
    GraphBuilder b(n);
    std::size_t k = 0;
    for (std::size_t pos = 1; pos < text.size(); ++pos) {
        auto c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw ParseError(pos, "invalid graph6 data byte");
        unsigned v = c - 63u;
        for (int s = 5; s >= 0; --s, ++k) {
            bool bit = (v >> s) & 1U;
            if (k >= bits) {
                if (bit) throw ParseError(pos, "non-zero padding bits");
                continue;
            }
            if (bit) {
                // Recover (i, j) from the column-major index k.
                Vertex j = 1;
                std::size_t base = 0;
                while (base + j <= k) base += j++;
                b.add_edge(static_cast<Vertex>(k - base), j);
            }
        }
    }
    return std::move(b).build();
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {

class Tokens {
public:
    explicit Tokens(std::string_view text) : text_(text) {}

    bool done() {
        skip();
        return pos_ >= text_.size();
    }

    std::size_t number(const char* what) {
        skip();
        if (pos_ >= text_.size()) throw ParseError(pos_, std::string("expected ") + what);
        std::size_t start = pos_, value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (value > (std::size_t{1} << 40)) throw ParseError(pos_, "number too large");
            ++pos_;
        }
        if (pos_ == start) throw ParseError(pos_, std::string("expected ") + what);
        if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, "unexpected character");
        last_ = start;
        return value;
    }

    std::size_t last_offset() const { return last_; }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0, last_ = 0;
};

}  // namespace

Graph from_edge_list(std::string_view text) {
    Tokens t(text);
    std::size_t n = t.number("vertex count");
    if (n > kMaxVertices) throw ParseError(t.last_offset(), "vertex count exceeds 65536");
    std::size_t m = t.number("edge count");
    GraphBuilder b(n);
    for (std::size_t e = 0; e < m; ++e) {
        std::size_t u = t.number("edge endpoint");
        if (u >= n) throw ParseError(t.last_offset(), "vertex out of range");
        std::size_t v = t.number("edge endpoint");
        if (v >= n) throw ParseError(t.last_offset(), "vertex out of range");
        if (u == v) throw ParseError(t.last_offset(), "self-loop");
        if (b.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw ParseError(t.last_offset(), "duplicate edge");
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!t.done()) throw ParseError(t.last_offset(), "trailing data after declared edges");
    return std::move(b).build();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::Auto) {
        std::string_view trimmed = text;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
        bool spaced = std::any_of(trimmed.begin(), trimmed.end(),
                                  [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        format = spaced ? GraphFormat::EdgeList : GraphFormat::Graph6;
        if (format == GraphFormat::Graph6) text = trimmed;
    }
    return format == GraphFormat::EdgeList ? from_edge_list(text) : from_graph6(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::EdgeList ? to_edge_list(g) : to_graph6(g);
}

}  // namespace boolcomb
