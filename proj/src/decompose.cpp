#include "boolcomb/decompose.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <optional>
#include <string>

#include "boolcomb/invariants.hpp"

namespace boolcomb {

std::vector<Graph> Decomposition::graphs() const {
    std::vector<Graph> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(p.first);
    return out;
}

Graph Decomposition::recombine() const {
    Graph g = apply_boolean(f, graphs(), target.order());
    return alpha ? complement(g) : g;
}

void certify(Decomposition& d) {
    for (std::size_t i = 0; i < d.parts.size(); ++i)
        if (!is_member(d.parts[i].second, d.parts[i].first))
            throw Error(Errc::CertificationFailed,
                        "part " + std::to_string(i) + " is not in class " + to_string(d.parts[i].second));
    if (!(d.recombine() == d.target))
        throw Error(Errc::CertificationFailed, "parts do not recombine to the target");
    d.certified = true;
}

namespace {

class EdgeColouring {
public:
    explicit EdgeColouring(const Graph& g) : g_(g), n_(g.order()), col_(n_ * n_, kNone) {}

    int get(Vertex u, Vertex v) const { return col_[u * n_ + v]; }
    void put(Vertex u, Vertex v, int c) {
        col_[u * n_ + v] = c;
        col_[v * n_ + u] = c;
    }
    bool free_at(Vertex x, int c) const {
        for (Vertex y : g_.neighbors(x))
            if (get(x, y) == c) return false;
        return true;
    }
    int first_free(Vertex x, int colours) const {
        for (int c = 0; c < colours; ++c)
            if (free_at(x, c)) return c;
        return -1;
    }
    // Neighbour of x along colour c, or none.
    std::optional<Vertex> along(Vertex x, int c) const {
        for (Vertex y : g_.neighbors(x))
            if (get(x, y) == c) return y;
        return std::nullopt;
    }

    std::vector<EdgeClass> classes(int colours) const {
        std::vector<EdgeClass> out(static_cast<std::size_t>(colours));
        for (auto [u, v] : g_.edges()) out[static_cast<std::size_t>(get(u, v))].emplace_back(u, v);
        std::erase_if(out, [](const EdgeClass& c) { return c.empty(); });
        return out;
    }

    static constexpr int kNone = -1;

private:
    const Graph& g_;
    std::size_t n_;
    std::vector<int> col_;
};

bool is_fan_prefix(const EdgeColouring& ec, Vertex u, const std::vector<Vertex>& fan, std::size_t upto) {
    for (std::size_t j = 0; j < upto; ++j)
        if (!ec.free_at(fan[j], ec.get(u, fan[j + 1]))) return false;
    return true;
}

// Repeatedly dissolves the smallest colour class when each of its edges fits
// into another class with both endpoints free.
void compact_classes(std::vector<EdgeClass>& classes, std::size_t n) {
    bool changed = true;
    while (changed && classes.size() > 1) {
        changed = false;
        std::size_t victim = 0;
        for (std::size_t i = 1; i < classes.size(); ++i)
            if (classes[i].size() < classes[victim].size()) victim = i;
        std::vector<std::vector<char>> busy(classes.size(), std::vector<char>(n, 0));
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (auto [u, v] : classes[i]) busy[i][u] = busy[i][v] = 1;
        std::vector<std::size_t> target;
        for (auto [u, v] : classes[victim]) {
            std::size_t found = classes.size();
            for (std::size_t i = 0; i < classes.size() && found == classes.size(); ++i)
                if (i != victim && !busy[i][u] && !busy[i][v]) found = i;
            if (found == classes.size()) break;
            busy[found][u] = busy[found][v] = 1;
            target.push_back(found);
        }
        if (target.size() != classes[victim].size()) break;
        for (std::size_t e = 0; e < target.size(); ++e) classes[target[e]].push_back(classes[victim][e]);
        classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(victim));
        changed = true;
    }
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
}

Decomposition finish(Decomposition d) {
    certify(d);
    return d;
}

std::vector<Vertex> all_but(std::size_t n, Vertex a) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (v != a) out.push_back(v);
    return out;
}

}  // namespace

std::vector<EdgeClass> misra_gries_edge_coloring(const Graph& g) {
    const int colours = static_cast<int>(max_degree(g)) + 1;
    EdgeColouring ec(g);
    for (auto [u0, v0] : g.edges()) {
        Vertex u = u0;
        // Maximal fan of u starting at v0.
        std::vector<Vertex> fan{v0};
        std::vector<char> in_fan(g.order(), 0);
        in_fan[v0] = 1;
        for (bool grew = true; grew;) {
            grew = false;
            for (Vertex y : g.neighbors(u)) {
                int cy = ec.get(u, y);
                if (in_fan[y] || cy == EdgeColouring::kNone || !ec.free_at(fan.back(), cy)) continue;
                fan.push_back(y);
                in_fan[y] = 1;
                grew = true;
                break;
            }
        }
        int c = ec.first_free(u, colours);
        int d = ec.first_free(fan.back(), colours);
        // Invert the cd-path starting at u.
        if (c != d) {
            std::vector<std::pair<Vertex, Vertex>> path;
            Vertex x = u;
            int want = d;
            std::vector<char> visited(g.order(), 0);
            visited[u] = 1;
            while (auto y = ec.along(x, want)) {
                if (visited[*y]) break;
                path.emplace_back(x, *y);
                visited[*y] = 1;
                x = *y;
                want = want == d ? c : d;
            }
            for (auto [a, b] : path) ec.put(a, b, ec.get(a, b) == d ? c : d);
        }
        std::size_t w = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i)
            if (ec.free_at(fan[i], d) && is_fan_prefix(ec, u, fan, i)) {
                w = i;
                break;
            }
        if (w == fan.size()) throw Error(Errc::CertificationFailed, "edge colouring invariant broken");
        for (std::size_t j = 0; j < w; ++j) ec.put(u, fan[j], ec.get(u, fan[j + 1]));
        ec.put(u, fan[w], d);
    }
    return ec.classes(colours);
}

std::vector<EdgeClass> greedy_edge_coloring(const Graph& g) {
    const int colours = std::max(1, 2 * static_cast<int>(max_degree(g)) - 1);
    EdgeColouring ec(g);
    for (auto [u, v] : g.edges()) {
        int c = 0;
        while (!ec.free_at(u, c) || !ec.free_at(v, c)) ++c;
        ec.put(u, v, c);
    }
    return ec.classes(colours);
}

Decomposition vizing_matchings(const Graph& g, VizingOptions opts) {
    Graph co = complement(g);
    bool flip = opts.branch == VizingBranch::Complement ||
                (opts.branch == VizingBranch::Auto && max_degree(g) > max_degree(co));
    const Graph& base = flip ? co : g;
    auto classes = opts.greedy ? greedy_edge_coloring(base) : misra_gries_edge_coloring(base);
    if (!opts.greedy) compact_classes(classes, g.order());
    if (classes.size() > kMaxArity)
        throw Error(Errc::BudgetExceeded,
                    std::to_string(classes.size()) + " matchings exceed the arity limit of 8");
    Decomposition d;
    d.target = g;
    unsigned k = static_cast<unsigned>(classes.size());
    d.f = BooleanFunction::disjunction(k);
    if (k == 0) d.f = BooleanFunction::constant(0, false);
    if (flip) d.f = !d.f;
    for (const auto& cls : classes) d.parts.emplace_back(Graph::from_edges(g.order(), cls), tags::matching);
    return finish(std::move(d));
}

Decomposition twin_decomposition(const Graph& g, std::size_t budget) {
    budget = std::min<std::size_t>(budget, kMaxArity);
    Partition tc = twin_classes(g);
    const std::size_t t = tc.size();
    if (t * (t - (t > 0 ? 1 : 0)) / 2 + t > budget)
        throw Error(Errc::BudgetExceeded, "twin number " + std::to_string(t) + " needs up to " +
                                              std::to_string(t * (t - 1) / 2 + t) + " parts, budget is " +
                                              std::to_string(budget));
    const std::size_t n = g.order();
    std::vector<Graph> unions, flips;
    std::vector<char> touched(t, 0);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) {
            // Twin classes are pairwise complete or anticomplete; one pair decides.
            if (!g.adjacent(tc.block(i).front(), tc.block(j).front())) continue;
            std::vector<Vertex> both = tc.block(i);
            both.insert(both.end(), tc.block(j).begin(), tc.block(j).end());
            unions.push_back(clique_on(n, both));
            touched[i] = touched[j] = 1;
        }
    for (std::size_t i = 0; i < t; ++i) {
        const auto& b = tc.block(i);
        if (b.size() < 2) continue;
        bool clique_in_g = g.adjacent(b[0], b[1]);
        if (clique_in_g != static_cast<bool>(touched[i])) flips.push_back(clique_on(n, b));
    }
    const unsigned ku = static_cast<unsigned>(unions.size()), kx = static_cast<unsigned>(flips.size());
    std::vector<bool> table(std::size_t{1} << (ku + kx));
    for (std::uint32_t x = 0; x < table.size(); ++x) {
        bool any = (x & ((1U << ku) - 1)) != 0;
        bool par = std::popcount(x >> ku) & 1;
        table[x] = any != par;
    }
    std::unique_ptr<bool[]> bits(new bool[table.size()]);
    for (std::size_t i = 0; i < table.size(); ++i) bits[i] = table[i];
    Decomposition d;
    d.target = g;
    d.f = BooleanFunction::from_bits(ku + kx, std::span<const bool>(bits.get(), table.size()));
    for (auto& h : unions) d.parts.emplace_back(std::move(h), tags::class_c);
    for (auto& h : flips) d.parts.emplace_back(std::move(h), tags::class_c);
    return finish(std::move(d));
}

Decomposition class_L_decomposition(const Graph& g, std::size_t budget) {
    budget = std::min<std::size_t>(budget, kMaxArity);
    const std::size_t n = g.order();
    Partition tc = twin_classes(g);
    std::size_t qi = 0;
    for (std::size_t i = 1; i < tc.size(); ++i)
        if (tc.block(i).size() > tc.block(qi).size()) qi = i;
    const std::vector<Vertex> q = n ? tc.block(qi) : std::vector<Vertex>{};
    std::vector<Vertex> p;
    for (Vertex v = 0; v < n; ++v)
        if (tc.block_of(v) != qi || n == 0) p.push_back(v);
    if (p.size() > budget)
        throw Error(Errc::NoBigTwinClass, "largest twin class leaves " + std::to_string(p.size()) +
                                              " vertices outside, budget is " + std::to_string(budget));
    const unsigned k = static_cast<unsigned>(p.size());
    const std::uint32_t all = (std::uint32_t{1} << k) - 1;

    // x_i = C_{p_i}(u, v) is 0 exactly when p_i is an endpoint.
    std::uint32_t p1 = 0, p2 = 0;
    for (unsigned i = 0; i < k; ++i) {
        if (q.empty()) continue;
        if (g.adjacent(p[i], q.front())) p2 |= 1U << i;
        else p1 |= 1U << i;
    }
    const bool q_clique = q.size() >= 2 && g.adjacent(q[0], q[1]);
    auto base = [&](std::uint32_t x) {
        bool and_p1 = (x & p1) == p1, and_p2 = (x & p2) == p2;
        bool v = and_p1 && !and_p2;
        if (q_clique && x == all) v = true;
        return v;
    };
    std::vector<bool> table(std::size_t{1} << k);
    for (std::uint32_t x = 0; x <= all; ++x) table[x] = base(x);
    // Pairs inside P are the only inputs with two zero coordinates; patch them.
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j) {
            std::uint32_t x = all & ~(1U << i) & ~(1U << j);
            table[x] = g.adjacent(p[i], p[j]);
        }
    std::unique_ptr<bool[]> bits(new bool[table.size()]);
    for (std::size_t i = 0; i < table.size(); ++i) bits[i] = table[i];

    Decomposition d;
    d.target = g;
    d.f = BooleanFunction::from_bits(k, std::span<const bool>(bits.get(), table.size()));
    for (Vertex a : p) d.parts.emplace_back(clique_on(n, all_but(n, a)), tags::class_l);
    return finish(std::move(d));
}

XorNormalForm xor_normal_form(const BooleanFunction& f, std::span<const Graph> graphs, const ClassTag& tag) {
    if (!is_intersection_closed(tag))
        throw Error(Errc::NotIntersectionClosed, "class " + to_string(tag) + " is not closed under intersection");
    if (graphs.size() != f.arity())
        throw Error(Errc::ArityMismatch, "function arity does not match the number of graphs");
    if (graphs.empty()) throw Error(Errc::EmptyInput, "need at least one graph");
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].order() != graphs.front().order())
            throw Error(Errc::MismatchedVertexCount, "graphs have different vertex counts");
        if (!is_member(tag, graphs[i]))
            throw Error(Errc::MalformedInput, "graph " + std::to_string(i) + " is not in class " + to_string(tag));
    }
    const std::size_t n = graphs.front().order();
    XorNormalForm out;
    for (std::uint32_t m : anf(f).monomials) {
        if (m == 0) {
            Graph kn = Graph::complete(n);
            if (is_member(tag, kn)) out.parts.push_back(std::move(kn));
            else out.alpha = true;
            continue;
        }
        std::vector<Graph> sel;
        for (unsigned v : mask_variables(m)) sel.push_back(graphs[v - 1]);
        out.parts.push_back(combine(CombineOp::Intersect, sel));
    }
    Graph acc(n);
    for (const auto& h : out.parts) {
        Graph pair[] = {acc, h};
        acc = combine(CombineOp::Xor, pair);
    }
    if (out.alpha) acc = complement(acc);
    if (!(acc == apply_boolean(f, graphs)))
        throw Error(Errc::CertificationFailed, "XOR normal form does not reproduce the combination");
    return out;
}

Decomposition xor_normal_form_decomposition(const BooleanFunction& f, std::span<const Graph> graphs,
                                            const ClassTag& tag) {
    auto x = xor_normal_form(f, graphs, tag);
    if (x.parts.size() > kMaxArity)
        throw Error(Errc::BudgetExceeded, "more than 8 parts");
    Decomposition d;
    d.target = apply_boolean(f, graphs);
    d.alpha = x.alpha;
    d.f = x.parts.empty() ? BooleanFunction::constant(0, false)
                          : BooleanFunction::parity(static_cast<unsigned>(x.parts.size()));
    for (auto& h : x.parts) d.parts.emplace_back(std::move(h), tag);
    return finish(std::move(d));
}

std::vector<Partition> partition_complementation_sequence(std::span<const Graph> parts) {
    std::vector<Partition> seq;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!is_member(tags::equivalence, parts[i]))
            throw Error(Errc::NotEquivalenceGraph, "part " + std::to_string(i) + " is not an equivalence graph");
        if (parts[i].order() != parts.front().order())
            throw Error(Errc::MismatchedVertexCount, "parts have different vertex counts");
        seq.push_back(component_partition(parts[i]));
    }
    return seq;
}

Graph fold_partition_complements(std::size_t n, std::span<const Partition> seq) {
    Graph g(n);
    for (const auto& p : seq) g = partition_complement(g, p);
    return g;
}

}  // namespace boolcomb
