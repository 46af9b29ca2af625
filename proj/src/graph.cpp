#include "boolcomb/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "boolcomb/boolfn.hpp"

namespace boolcomb {

namespace {

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

void check_order(std::size_t n) {
    if (n > kMaxVertices)
        throw Error(Errc::SizeLimitExceeded, "graph order " + std::to_string(n) + " exceeds 65536");
}

void check_vertex(std::size_t n, Vertex v) {
    if (v >= n)
        throw Error(Errc::OutOfRangeVertex,
                    "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n));
}

void require_same_order(std::span<const Graph> graphs) {
    for (const auto& h : graphs)
        if (h.order() != graphs.front().order())
            throw Error(Errc::MismatchedVertexCount, "graphs have different vertex counts");
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)) {
    check_order(n);
    bits_.assign(n_ * words_, 0);
}

Graph Graph::complete(std::size_t n) { return complement(Graph(n)); }

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) {
        if (u == v) throw Error(Errc::MalformedInput, "self-loop at vertex " + std::to_string(u));
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

std::size_t Graph::degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Word w = r[i];
        while (w) {
            out.push_back(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& start) : g_(start) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
    check_vertex(g_.n_, u);
    check_vertex(g_.n_, v);
}

GraphBuilder& GraphBuilder::set(Vertex u, Vertex v, bool on) {
    check(u, v);
    if (u == v) return *this;
    Word bu = Word{1} << (v % kWordBits), bv = Word{1} << (u % kWordBits);
    Word& wu = g_.bits_[u * g_.words_ + v / kWordBits];
    Word& wv = g_.bits_[v * g_.words_ + u / kWordBits];
    if (on) {
        wu |= bu;
        wv |= bv;
    } else {
        wu &= ~bu;
        wv &= ~bv;
    }
    return *this;
}

GraphBuilder& GraphBuilder::toggle(Vertex u, Vertex v) { return set(u, v, !adjacent(u, v)); }

Graph GraphBuilder::build() && {
    std::size_t n = g_.n_, w = g_.words_;
    std::size_t total = 0;
    Word tail = n % kWordBits == 0 ? ~Word{0} : (Word{1} << (n % kWordBits)) - 1;
    for (std::size_t v = 0; v < n; ++v) {
        Word* r = g_.bits_.data() + v * w;
        r[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
        if (w) r[w - 1] &= tail;
        for (std::size_t i = 0; i < w; ++i) total += static_cast<std::size_t>(std::popcount(r[i]));
    }
    g_.edges_ = total / 2;
    return std::move(g_);
}

Partition Partition::from_blocks(std::size_t n, std::vector<std::vector<Vertex>> blocks) {
    Partition p;
    p.n_ = n;
    p.block_id_.assign(n, SIZE_MAX);
    for (auto& b : blocks) {
        if (b.empty()) throw Error(Errc::InvalidPartition, "empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (Vertex v : blocks[i]) {
            if (v >= n) throw Error(Errc::InvalidPartition, "element " + std::to_string(v) + " out of range");
            if (p.block_id_[v] != SIZE_MAX)
                throw Error(Errc::InvalidPartition, "element " + std::to_string(v) + " in two blocks");
            p.block_id_[v] = i;
        }
    for (std::size_t v = 0; v < n; ++v)
        if (p.block_id_[v] == SIZE_MAX)
            throw Error(Errc::InvalidPartition, "element " + std::to_string(v) + " not covered");
    p.blocks_ = std::move(blocks);
    return p;
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::pair<std::size_t, std::size_t>> seen;  // label -> block index
    for (std::size_t v = 0; v < labels.size(); ++v) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](auto& s) { return s.first == labels[v]; });
        if (it == seen.end()) {
            seen.emplace_back(labels[v], blocks.size());
            blocks.push_back({static_cast<Vertex>(v)});
        } else {
            blocks[it->second].push_back(static_cast<Vertex>(v));
        }
    }
    return from_blocks(labels.size(), std::move(blocks));
}

Partition Partition::singletons(std::size_t n) {
    std::vector<std::vector<Vertex>> blocks(n);
    for (std::size_t v = 0; v < n; ++v) blocks[v] = {static_cast<Vertex>(v)};
    return from_blocks(n, std::move(blocks));
}

Partition Partition::single_block(std::size_t n) {
    if (n == 0) return from_blocks(0, {});
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return from_blocks(n, {std::move(all)});
}

Graph combine(CombineOp op, std::span<const Graph> graphs) {
    if (graphs.empty()) throw Error(Errc::EmptyInput, "combine needs at least one graph");
    require_same_order(graphs);
    GraphBuilder b(graphs.front());
    for (std::size_t v = 0; v < graphs.front().order(); ++v) {
        auto out = b.row(static_cast<Vertex>(v));
        for (std::size_t i = 1; i < graphs.size(); ++i) {
            auto in = graphs[i].row(static_cast<Vertex>(v));
            for (std::size_t w = 0; w < out.size(); ++w) {
                switch (op) {
                    case CombineOp::Union: out[w] |= in[w]; break;
                    case CombineOp::Intersect: out[w] &= in[w]; break;
                    case CombineOp::Xor: out[w] ^= in[w]; break;
                }
            }
        }
    }
    return std::move(b).build();
}

Graph apply_boolean(const BooleanFunction& f, std::span<const Graph> graphs) {
    if (graphs.empty() && f.arity() == 0)
        throw Error(Errc::EmptyInput, "arity-0 function needs an explicit vertex count");
    std::size_t n = graphs.empty() ? 0 : graphs.front().order();
    return apply_boolean(f, graphs, n);
}

Graph apply_boolean(const BooleanFunction& f, std::span<const Graph> graphs, std::size_t n) {
    if (graphs.size() != f.arity())
        throw Error(Errc::ArityMismatch, "function of arity " + std::to_string(f.arity()) + " applied to " +
                                             std::to_string(graphs.size()) + " graphs");
    for (const auto& h : graphs)
        if (h.order() != n) throw Error(Errc::MismatchedVertexCount, "graphs have different vertex counts");

    const unsigned k = f.arity();
    const std::size_t entries = f.table_size();
    GraphBuilder b(n);
    std::vector<Word> level(entries);
    for (std::size_t v = 0; v < n; ++v) {
        auto out = b.row(static_cast<Vertex>(v));
        for (std::size_t w = 0; w < out.size(); ++w) {
            // Multiplexer tree: fold the table one variable at a time, x_1 first.
            for (std::size_t t = 0; t < entries; ++t) level[t] = f(static_cast<std::uint32_t>(t)) ? ~Word{0} : 0;
            std::size_t len = entries;
            for (unsigned i = 0; i < k; ++i) {
                Word x = graphs[i].row(static_cast<Vertex>(v))[w];
                for (std::size_t j = 0; j < len / 2; ++j)
                    level[j] = (x & level[2 * j + 1]) | (~x & level[2 * j]);
                len /= 2;
            }
            out[w] = level[0];
        }
    }
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    GraphBuilder b(g);
    for (std::size_t v = 0; v < g.order(); ++v)
        for (Word& w : b.row(static_cast<Vertex>(v))) w = ~w;
    return std::move(b).build();
}

Graph subgraph_complement(const Graph& g, std::span<const Vertex> subset) {
    for (Vertex v : subset) check_vertex(g.order(), v);
    GraphBuilder b(g);
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (subset[i] != subset[j]) b.toggle(subset[i], subset[j]);
    return std::move(b).build();
}

Graph local_complement(const Graph& g, Vertex v) {
    check_vertex(g.order(), v);
    auto nb = g.neighbors(v);
    return subgraph_complement(g, nb);
}

Graph partition_complement(const Graph& g, const Partition& p) {
    if (p.ground_size() != g.order())
        throw Error(Errc::MismatchedVertexCount, "partition and graph sizes differ");
    GraphBuilder b(g);
    for (const auto& block : p.blocks())
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) b.toggle(block[i], block[j]);
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
    std::vector<char> used(g.order(), 0);
    for (Vertex v : subset) {
        check_vertex(g.order(), v);
        if (used[v]) throw Error(Errc::DuplicateVertex, "vertex " + std::to_string(v) + " repeated");
        used[v] = 1;
    }
    GraphBuilder b(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (g.adjacent(subset[i], subset[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return std::move(b).build();
}

Partition component_partition(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> label(n, SIZE_MAX);
    std::size_t next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != SIZE_MAX) continue;
        std::vector<Vertex> stack{s};
        label[s] = next;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v))
                if (label[u] == SIZE_MAX) {
                    label[u] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    return Partition::from_labels(label);
}

Graph clique_on(std::size_t n, std::span<const Vertex> subset) {
    return subgraph_complement(Graph(n), subset);
}

Graph equivalence_graph(const Partition& p) { return partition_complement(Graph(p.ground_size()), p); }

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw Error(Errc::NotAPermutation, "permutation length differs from order");
    std::vector<char> hit(perm.size(), 0);
    for (Vertex v : perm) {
        if (v >= perm.size() || hit[v]) throw Error(Errc::NotAPermutation, "not a bijection");
        hit[v] = 1;
    }
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

namespace {

// Colour refinement run jointly on g and h so colour ids are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_jointly(const Graph& g, const Graph& h) {
    const std::size_t n = g.order();
    std::vector<std::size_t> cg(n), ch(n);
    for (Vertex v = 0; v < n; ++v) {
        cg[v] = g.degree(v);
        ch[v] = h.degree(v);
    }
    for (std::size_t round = 0; round < n; ++round) {
        using Sig = std::pair<std::size_t, std::vector<std::size_t>>;
        auto sig = [](const Graph& x, const std::vector<std::size_t>& c, Vertex v) {
            Sig s{c[v], {}};
            for (Vertex u : x.neighbors(v)) s.second.push_back(c[u]);
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::vector<Sig> all;
        std::vector<Sig> sg(n), sh(n);
        for (Vertex v = 0; v < n; ++v) {
            sg[v] = sig(g, cg, v);
            sh[v] = sig(h, ch, v);
            all.push_back(sg[v]);
            all.push_back(sh[v]);
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        auto id = [&](const Sig& s) {
            return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
        };
        std::vector<std::size_t> ng(n), nh(n);
        for (Vertex v = 0; v < n; ++v) {
            ng[v] = id(sg[v]);
            nh[v] = id(sh[v]);
        }
        auto classes = [](std::vector<std::size_t> c) {
            std::sort(c.begin(), c.end());
            return std::unique(c.begin(), c.end()) - c.begin();
        };
        bool stable = classes(ng) == classes(cg);
        cg = std::move(ng);
        ch = std::move(nh);
        if (stable) break;
    }
    return {cg, ch};
}

bool extend(const Graph& g, const Graph& h, const std::vector<std::size_t>& cg,
            const std::vector<std::size_t>& ch, std::vector<Vertex>& map, std::vector<char>& used,
            const std::vector<Vertex>& order, std::size_t depth) {
    if (depth == order.size()) return true;
    Vertex v = order[depth];
    for (Vertex w = 0; w < h.order(); ++w) {
        if (used[w] || cg[v] != ch[w]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i)
            ok = g.adjacent(v, order[i]) == h.adjacent(w, map[order[i]]);
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend(g, h, cg, ch, map, used, order, depth + 1)) return true;
        used[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h, std::size_t limit) {
    if (g.order() > limit || h.order() > limit)
        throw Error(Errc::SizeLimitExceeded, "isomorphism test limited to " + std::to_string(limit) + " vertices");
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto [cg, ch] = refine_jointly(g, h);
    auto sg = cg, sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;

    // Match the most constrained colours first.
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        auto ca = std::count(sg.begin(), sg.end(), cg[a]), cb = std::count(sg.begin(), sg.end(), cg[b]);
        return ca < cb;
    });
    std::vector<Vertex> map(g.order());
    std::vector<char> used(g.order(), 0);
    if (!extend(g, h, cg, ch, map, used, order, 0)) return std::nullopt;
    return map;
}

bool is_isomorphic(const Graph& g, const Graph& h, std::size_t limit) {
    return find_isomorphism(g, h, limit).has_value();
}

namespace named {

Graph cycle(std::size_t n) {
    GraphBuilder b(n);
    if (n >= 3)
        for (std::size_t v = 0; v < n; ++v) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
    return std::move(b).build();
}

Graph path(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t v = 0; v + 1 < n; ++v) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
    return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t c) {
    GraphBuilder b(a + c);
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = a; v < a + c; ++v) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return std::move(b).build();
}

Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph petersen() {
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return std::move(b).build();
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.order();
    GraphBuilder b(n);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges())
            b.add_edge(static_cast<Vertex>(u + off), static_cast<Vertex>(v + off));
        off += p.order();
    }
    return std::move(b).build();
}

Graph matching_graph(std::size_t pairs) {
    GraphBuilder b(2 * pairs);
    for (std::size_t i = 0; i < pairs; ++i) b.add_edge(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1));
    return std::move(b).build();
}

}  // namespace named

}  // namespace boolcomb
