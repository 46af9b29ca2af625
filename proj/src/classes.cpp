#include "boolcomb/classes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "boolcomb/invariants.hpp"

namespace boolcomb {

namespace {

std::size_t parse_param(std::string_view text, std::size_t offset) {
    if (text.empty()) throw ParseError(offset, "missing class parameter");
    std::size_t k = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw ParseError(offset + i, "class parameter must be decimal");
        k = k * 10 + static_cast<std::size_t>(text[i] - '0');
        if (k > 1'000'000) throw ParseError(offset + i, "class parameter too large");
    }
    return k;
}

// Closed neighbourhoods of adjacent vertices coincide iff every component is a clique.
bool closed_rows_agree_on_edges(const Graph& g) {
    const std::size_t w = g.words_per_row();
    for (auto [u, v] : g.edges()) {
        auto ru = g.row(u), rv = g.row(v);
        for (std::size_t i = 0; i < w; ++i) {
            Word a = ru[i], b = rv[i];
            if (i == u / kWordBits) a |= Word{1} << (u % kWordBits);
            if (i == v / kWordBits) b |= Word{1} << (v % kWordBits);
            if (i == u / kWordBits) b |= Word{1} << (u % kWordBits);
            if (i == v / kWordBits) a |= Word{1} << (v % kWordBits);
            if (a != b) return false;
        }
    }
    return true;
}

std::vector<std::vector<Vertex>> components(const Graph& g) { return component_partition(g).blocks(); }

bool is_split(const Graph& g) {
    std::vector<std::size_t> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.rbegin(), d.rend());
    std::size_t m = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] + 1 >= i + 1) m = i + 1;  // d_i >= i - 1 with 1-based i
    std::size_t head = std::accumulate(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(m), std::size_t{0});
    std::size_t tail = std::accumulate(d.begin() + static_cast<std::ptrdiff_t>(m), d.end(), std::size_t{0});
    return head == m * (m - (m > 0 ? 1 : 0)) + tail;
}

bool is_cograph_rec(const Graph& g) {
    if (g.order() <= 1) return true;
    auto comps = components(g);
    if (comps.size() == 1) {
        Graph co = complement(g);
        comps = components(co);
        if (comps.size() == 1) return false;
        for (const auto& c : comps)
            if (!is_cograph_rec(induced_subgraph(co, c))) return false;
        return true;
    }
    for (const auto& c : comps)
        if (!is_cograph_rec(induced_subgraph(g, c))) return false;
    return true;
}

bool is_class_c(const Graph& g) {
    std::size_t busy = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) ++busy;
    return g.edge_count() == busy * (busy - (busy > 0 ? 1 : 0)) / 2;
}

bool is_class_l(const Graph& g) {
    const std::size_t n = g.order();
    if (g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2) return true;
    if (!closed_rows_agree_on_edges(g)) return false;
    auto comps = components(g);
    return comps.size() == 2 && (comps[0].size() == 1 || comps[1].size() == 1);
}

void require_enumerable(std::size_t n, std::size_t limit, const ClassTag& tag) {
    if (n > limit)
        throw Error(Errc::SizeLimitExceeded, "enumeration of " + to_string(tag) + " limited to n <= " +
                                                 std::to_string(limit));
}

Graph graph_from_pair_bits(std::size_t n, std::uint64_t bits) {
    GraphBuilder b(n);
    std::size_t i = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++i)
            if (bits >> i & 1U) b.add_edge(u, v);
    return std::move(b).build();
}

bool matchings_rec(std::size_t n, std::vector<char>& used, GraphBuilder& b, Vertex from,
                   const std::function<bool(const Graph&)>& visit) {
    Vertex v = from;
    while (v < n && used[v]) ++v;
    if (v >= n) {
        GraphBuilder copy = b;
        return visit(std::move(copy).build());
    }
    used[v] = 1;
    // v unmatched
    if (!matchings_rec(n, used, b, v + 1, visit)) return false;
    for (Vertex u = v + 1; u < n; ++u) {
        if (used[u]) continue;
        used[u] = 1;
        b.add_edge(v, u);
        bool go = matchings_rec(n, used, b, v + 1, visit);
        b.remove_edge(v, u);
        used[u] = 0;
        if (!go) return false;
    }
    used[v] = 0;
    return true;
}

}  // namespace

ClassTag parse_class_tag(std::string_view text) {
    if (text == "equiv") return tags::equivalence;
    if (text == "multipartite") return tags::multipartite;
    if (text == "split") return tags::split;
    if (text == "cograph") return tags::cograph;
    if (text == "d1") return tags::matching;
    if (text == "L") return tags::class_l;
    if (text == "C") return tags::class_c;
    if (text == "C|d1") return tags::class_c_or_matching;
    if (text == "complete") return tags::complete;
    if (text == "empty") return tags::empty;
    if (text.starts_with("dk:")) return tags::bounded_degree(parse_param(text.substr(3), 3));
    if (text.starts_with("ek:")) return tags::at_most_edges(parse_param(text.substr(3), 3));
    throw ParseError(0, "unknown class tag '" + std::string(text) + "'");
}

std::string to_string(const ClassTag& tag) {
    switch (tag.kind) {
        case ClassKind::Equivalence: return "equiv";
        case ClassKind::CompleteMultipartite: return "multipartite";
        case ClassKind::Split: return "split";
        case ClassKind::Cograph: return "cograph";
        case ClassKind::Matching: return "d1";
        case ClassKind::BoundedDegree: return "dk:" + std::to_string(tag.param);
        case ClassKind::AtMostEdges: return "ek:" + std::to_string(tag.param);
        case ClassKind::ClassL: return "L";
        case ClassKind::ClassC: return "C";
        case ClassKind::ClassCOrMatching: return "C|d1";
        case ClassKind::Complete: return "complete";
        case ClassKind::Empty: return "empty";
    }
    return "?";
}

bool is_member(const ClassTag& tag, const Graph& g) {
    const std::size_t n = g.order();
    switch (tag.kind) {
        case ClassKind::Equivalence: return closed_rows_agree_on_edges(g);
        case ClassKind::CompleteMultipartite: return closed_rows_agree_on_edges(complement(g));
        case ClassKind::Split: return is_split(g);
        case ClassKind::Cograph: return is_cograph_rec(g);
        case ClassKind::Matching: return max_degree(g) <= 1;
        case ClassKind::BoundedDegree: return max_degree(g) <= tag.param;
        case ClassKind::AtMostEdges: return g.edge_count() <= tag.param;
        case ClassKind::ClassL: return is_class_l(g);
        case ClassKind::ClassC: return is_class_c(g);
        case ClassKind::ClassCOrMatching: return is_class_c(g) || max_degree(g) <= 1;
        case ClassKind::Complete: return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
        case ClassKind::Empty: return g.edge_count() == 0;
    }
    return false;
}

bool is_intersection_closed(const ClassTag& tag) {
    switch (tag.kind) {
        case ClassKind::Equivalence:
        case ClassKind::Matching:
        case ClassKind::BoundedDegree:
        case ClassKind::AtMostEdges:
        case ClassKind::ClassC:
        case ClassKind::ClassCOrMatching:
        case ClassKind::Complete:
        case ClassKind::Empty: return true;
        default: return false;
    }
}

void for_each_set_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> rgs(n, 0), maxes(n, 0);
    if (n == 0) {
        visit(rgs);
        return;
    }
    while (true) {
        visit(rgs);
        // Increment the last position that can still grow.
        std::size_t i = n - 1;
        while (i > 0 && rgs[i] == maxes[i - 1] + 1) --i;
        if (i == 0) return;
        ++rgs[i];
        maxes[i] = std::max(maxes[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            maxes[j] = maxes[i];
        }
    }
}

void for_each_member(const ClassTag& tag, std::size_t n, const std::function<bool(const Graph&)>& visit) {
    switch (tag.kind) {
        case ClassKind::Equivalence:
        case ClassKind::CompleteMultipartite: {
            require_enumerable(n, kEnumerateLimit, tag);
            bool go = true;
            bool co = tag.kind == ClassKind::CompleteMultipartite;
            for_each_set_partition(n, [&](const std::vector<std::size_t>& rgs) {
                if (!go) return;
                Graph g = equivalence_graph(Partition::from_labels(rgs));
                go = visit(co ? complement(g) : g);
            });
            return;
        }
        case ClassKind::Matching: {
            require_enumerable(n, kEnumerateLimit, tag);
            std::vector<char> used(n, 0);
            GraphBuilder b(n);
            matchings_rec(n, used, b, 0, visit);
            return;
        }
        case ClassKind::ClassC: {
            require_enumerable(n, kEnumerateLimit, tag);
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                if (std::popcount(s) == 1) continue;
                std::vector<Vertex> sub;
                for (Vertex v = 0; v < n; ++v)
                    if (s >> v & 1U) sub.push_back(v);
                if (!visit(clique_on(n, sub))) return;
            }
            return;
        }
        case ClassKind::ClassL: {
            require_enumerable(n, kEnumerateLimit, tag);
            std::vector<Graph> seen{Graph::complete(n)};
            if (!visit(seen.back())) return;
            for (Vertex a = 0; a < n; ++a) {
                std::vector<Vertex> rest;
                for (Vertex v = 0; v < n; ++v)
                    if (v != a) rest.push_back(v);
                Graph c = clique_on(n, rest);
                if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
                seen.push_back(c);
                if (!visit(c)) return;
            }
            return;
        }
        case ClassKind::ClassCOrMatching: {
            require_enumerable(n, kEnumerateLimit, tag);
            bool go = true;
            for_each_member(tags::class_c, n, [&](const Graph& g) { return go = visit(g); });
            if (!go) return;
            for_each_member(tags::matching, n, [&](const Graph& g) {
                if (is_class_c(g)) return true;  // already emitted
                return visit(g);
            });
            return;
        }
        case ClassKind::AtMostEdges: {
            const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
            const std::size_t k = std::min(tag.param, pairs);
            double count = 0, term = 1;
            for (std::size_t i = 0; i <= k; ++i) {
                count += term;
                term = term * static_cast<double>(pairs - i) / static_cast<double>(i + 1);
            }
            if (count > 5e7) throw Error(Errc::SizeLimitExceeded, "too many graphs with at most k edges");
            std::vector<std::pair<Vertex, Vertex>> all;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
            std::vector<std::size_t> pick;
            std::function<bool(std::size_t)> rec = [&](std::size_t from) {
                std::vector<std::pair<Vertex, Vertex>> es;
                for (std::size_t i : pick) es.push_back(all[i]);
                if (!visit(Graph::from_edges(n, es))) return false;
                if (pick.size() == k) return true;
                for (std::size_t i = from; i < all.size(); ++i) {
                    pick.push_back(i);
                    bool go = rec(i + 1);
                    pick.pop_back();
                    if (!go) return false;
                }
                return true;
            };
            rec(0);
            return;
        }
        case ClassKind::Complete: visit(Graph::complete(n)); return;
        case ClassKind::Empty: visit(Graph(n)); return;
        case ClassKind::Split:
        case ClassKind::Cograph:
        case ClassKind::BoundedDegree: {
            require_enumerable(n, kFilterEnumerateLimit, tag);
            const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
                Graph g = graph_from_pair_bits(n, bits);
                if (is_member(tag, g) && !visit(g)) return;
            }
            return;
        }
    }
}

std::vector<Graph> enumerate(const ClassTag& tag, std::size_t n) {
    std::vector<Graph> out;
    for_each_member(tag, n, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

Partition random_partition(std::size_t n, Rng& rng) {
    std::vector<std::size_t> label(n);
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < n; ++i) {
        // Join table j with weight |table j|, open a new table with weight 1.
        std::uint64_t r = rng.below(i + 1);
        std::size_t table = sizes.size();
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            if (r < sizes[j]) {
                table = j;
                break;
            }
            r -= sizes[j];
        }
        if (table == sizes.size()) sizes.push_back(0);
        ++sizes[table];
        label[i] = table;
    }
    return Partition::from_labels(label);
}

SplitGraph random_split(std::size_t n, Rng& rng) {
    SplitGraph s{Graph(n), std::vector<char>(n, 0)};
    for (std::size_t v = 0; v < n; ++v) s.in_clique[v] = rng.coin();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (s.in_clique[u] && s.in_clique[v]) b.add_edge(u, v);
            else if ((s.in_clique[u] || s.in_clique[v]) && rng.coin()) b.add_edge(u, v);
        }
    s.graph = std::move(b).build();
    return s;
}

Graph random_member(const ClassTag& tag, std::size_t n, Rng& rng) {
    switch (tag.kind) {
        case ClassKind::Equivalence: return equivalence_graph(random_partition(n, rng));
        case ClassKind::CompleteMultipartite: return complement(equivalence_graph(random_partition(n, rng)));
        case ClassKind::Split: return random_split(n, rng).graph;
        case ClassKind::Matching: {
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), Vertex{0});
            rng.shuffle(perm.begin(), perm.end());
            GraphBuilder b(n);
            for (std::size_t i = 0; i + 1 < n; i += 2)
                if (rng.coin()) b.add_edge(perm[i], perm[i + 1]);
            return std::move(b).build();
        }
        case ClassKind::BoundedDegree: {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
            rng.shuffle(pairs.begin(), pairs.end());
            std::vector<std::size_t> deg(n, 0);
            GraphBuilder b(n);
            for (auto [u, v] : pairs)
                if (deg[u] < tag.param && deg[v] < tag.param && rng.coin()) {
                    b.add_edge(u, v);
                    ++deg[u];
                    ++deg[v];
                }
            return std::move(b).build();
        }
        default:
            throw Error(Errc::UnsupportedTag, "no random generator for class " + to_string(tag));
    }
}

Graph random_member(const ClassTag& tag, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_member(tag, n, rng);
}

Graph permutation_graph(std::span<const Vertex> pi) {
    const std::size_t n = pi.size();
    std::vector<char> hit(n, 0);
    for (Vertex v : pi) {
        if (v >= n || hit[v]) throw Error(Errc::NotAPermutation, "input is not a permutation of 0..n-1");
        hit[v] = 1;
    }
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (pi[i] > pi[j]) b.add_edge(i, j);
    return std::move(b).build();
}

}  // namespace boolcomb
