#include "boolcomb/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <numbers>

#include <json.hpp>

#include "boolcomb/booldim.hpp"
#include "boolcomb/boolfn.hpp"
#include "boolcomb/invariants.hpp"
#include "boolcomb/io.hpp"

namespace boolcomb {

using json = nlohmann::json;

namespace {

std::size_t checked_power(std::size_t n, std::size_t k) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= n;
        if (total > kHnkLimit) throw Error(Errc::SizeLimitExceeded, "n^k exceeds 4096");
    }
    return total;
}

std::vector<std::size_t> coordinates(std::size_t index, std::size_t n, std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = k; i-- > 0;) {
        c[i] = index % n;
        index /= n;
    }
    return c;
}

using PairBits = std::uint64_t;

PairBits to_bits(const Graph& g) {
    PairBits bits = 0;
    std::size_t i = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v, ++i)
            if (g.adjacent(u, v)) bits |= PairBits{1} << i;
    return bits;
}

Graph from_bits(std::size_t n, PairBits bits) {
    GraphBuilder b(n);
    std::size_t i = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++i)
            if (bits >> i & 1U) b.add_edge(u, v);
    return std::move(b).build();
}

PairBits pair_mask(std::size_t n) {
    std::size_t p = n * (n - (n > 0 ? 1 : 0)) / 2;
    return p >= 64 ? ~PairBits{0} : (PairBits{1} << p) - 1;
}

// Entrywise f(a, b) on pair bit-vectors, x_1 = a.
PairBits apply2(unsigned table, PairBits a, PairBits b, PairBits mask) {
    PairBits out = 0;
    for (unsigned t = 0; t < 4; ++t)
        if (table >> t & 1U) out |= ((t & 1U) ? a : ~a) & ((t & 2U) ? b : ~b);
    return out & mask;
}

json graphs_json(std::span<const Graph> gs) {
    json arr = json::array();
    for (const auto& g : gs) arr.push_back(to_graph6(g));
    return arr;
}

std::vector<Graph> graphs_from_json(const json& arr) {
    std::vector<Graph> out;
    for (const auto& s : arr) out.push_back(from_graph6(s.get<std::string>()));
    return out;
}

TheoremCheck fail(TheoremCheck c, json witness) {
    c.passed = false;
    c.counterexample = witness.dump();
    return c;
}

// Expression and binding parsing for chi-binding checks.
struct ChiExpr {
    CombineOp op;
    std::size_t t;
    ClassTag tag;
};

ChiExpr parse_expr(std::string_view text) {
    auto bad = [&] { return Error(Errc::UnsupportedExpression, "cannot parse class expression '" + std::string(text) + "'"); };
    auto c1 = text.find(':');
    if (c1 == std::string_view::npos) throw bad();
    auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw bad();
    ChiExpr e;
    auto op = text.substr(0, c1);
    if (op == "union") e.op = CombineOp::Union;
    else if (op == "intersect") e.op = CombineOp::Intersect;
    else throw bad();
    auto ts = text.substr(c1 + 1, c2 - c1 - 1);
    if (ts.empty() || ts.size() > 2 || !std::all_of(ts.begin(), ts.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw bad();
    e.t = std::stoul(std::string(ts));
    if (e.t < 1 || e.t > kMaxArity) throw bad();
    try {
        e.tag = parse_class_tag(text.substr(c2 + 1));
    } catch (const Error&) {
        throw bad();
    }
    switch (e.tag.kind) {
        case ClassKind::Equivalence:
        case ClassKind::CompleteMultipartite:
        case ClassKind::Split:
        case ClassKind::Matching:
        case ClassKind::BoundedDegree: break;
        default: throw Error(Errc::UnsupportedExpression, "no sampler for class " + to_string(e.tag));
    }
    return e;
}

std::function<double(double)> parse_binding(std::string_view text, std::size_t t) {
    const double td = static_cast<double>(t);
    if (text == "linear") return [td](double x) { return td * x; };
    if (text.starts_with("linear:")) {
        auto cs = text.substr(7);
        if (cs.empty() || !std::all_of(cs.begin(), cs.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw Error(Errc::UnsupportedExpression, "bad linear constant");
        double c = std::stod(std::string(cs));
        return [c](double x) { return c * x; };
    }
    if (text == "power") return [td](double x) { return std::pow(x, std::pow(2.0, td)); };
    if (text == "product") return [td](double x) { return std::pow(x, td); };
    if (text == "multipartite") return [td](double x) { return std::pow(td, std::pow(2.0, td)) * x; };
    throw Error(Errc::UnsupportedExpression, "unknown binding '" + std::string(text) + "'");
}

std::size_t nu_equivalence_class(std::size_t n, std::size_t m) {
    static std::mutex lock;
    static std::map<std::pair<std::size_t, std::size_t>, std::size_t> cache;
    std::lock_guard guard(lock);
    auto key = std::make_pair(n, m);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::size_t best = 0;
    for_each_member(tags::equivalence, n, [&](const Graph& h) {
        best = std::max(best, neighborhood_complexity(h, m));
        return true;
    });
    cache[key] = best;
    return best;
}

bool bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

json split_json(const SplitGraph& s) {
    std::string sides;
    for (char c : s.in_clique) sides.push_back(c ? '1' : '0');
    return json{{"graph", to_graph6(s.graph)}, {"clique_side", sides}};
}

SplitGraph split_from_json(const json& j) {
    SplitGraph s{from_graph6(j.at("graph").get<std::string>()), {}};
    for (char c : j.at("clique_side").get<std::string>()) s.in_clique.push_back(c == '1');
    return s;
}

// Individual catalogue checks ------------------------------------------------

TheoremCheck perfect_2fn_equiv(std::uint64_t) {
    TheoremCheck c{"perfect-2fn-equiv", "all ordered pairs of labeled equivalence graphs, n = 1..6, all 16 binary functions", false, {}};
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<PairBits> eq;
        for (const auto& g : enumerate(tags::equivalence, n)) eq.push_back(to_bits(g));
        const PairBits mask = pair_mask(n);
        std::vector<signed char> memo(std::size_t{1} << std::popcount(mask), -1);
        for (PairBits a : eq)
            for (PairBits b : eq)
                for (unsigned f = 0; f < 16; ++f) {
                    PairBits r = apply2(f, a, b, mask);
                    auto& m = memo[r];
                    if (m < 0) m = is_perfect(from_bits(n, r)) ? 1 : 0;
                    if (!m) {
                        Graph parts[] = {from_bits(n, a), from_bits(n, b)};
                        return fail(c, {{"kind", "not-perfect"},
                                        {"parts", graphs_json(parts)},
                                        {"f", BooleanFunction(2, f).to_string()}});
                    }
                }
    }
    c.passed = true;
    return c;
}

TheoremCheck forbidden_multipartite(std::uint64_t) {
    TheoremCheck c{"forbidden-multipartite", "t = 2: K_3+O_1 on 4 and 3K_2 on 6 labeled vertices against all multipartite pairs", false, {}};
    GraphBuilder kb(4);
    kb.add_edge(0, 1).add_edge(0, 2).add_edge(1, 2);
    const Graph targets[] = {std::move(kb).build(), named::matching_graph(3)};
    for (const auto& target : targets) {
        const std::size_t n = target.order();
        std::vector<PairBits> mp;
        for (const auto& g : enumerate(tags::multipartite, n)) mp.push_back(to_bits(g));
        const PairBits want = to_bits(target);
        for (std::size_t i = 0; i < mp.size(); ++i)
            for (std::size_t j = i; j < mp.size(); ++j)
                if ((mp[i] & mp[j]) == want) {
                    Graph parts[] = {from_bits(n, mp[i]), from_bits(n, mp[j])};
                    return fail(c, {{"kind", "intersection-representation"},
                                    {"target", to_graph6(target)},
                                    {"parts", graphs_json(parts)}});
                }
    }
    c.passed = true;
    return c;
}

TheoremCheck c5_not_2fn_equiv(std::uint64_t) {
    TheoremCheck c{"c5-not-2fn-equiv", "exhaustive search over multisets of at most 2 equivalence graphs on 5 vertices", false, {}};
    Graph c5 = named::cycle(5);
    for (std::size_t k = 1; k <= 2; ++k)
        if (auto w = exists_representation(c5, tags::equivalence, k))
            return fail(c, {{"kind", "representation"},
                            {"target", to_graph6(c5)},
                            {"tag", "equiv"},
                            {"parts", graphs_json(w->parts)},
                            {"f", w->f.to_string()}});
    c.passed = true;
    return c;
}

TheoremCheck speed_bound(std::uint64_t) {
    TheoremCheck c{"speed-bound", "Y = 2-XOR of equivalence graphs, n = 1..5, exhaustive counts", false, {}};
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<PairBits> eq;
        for (const auto& g : enumerate(tags::equivalence, n)) eq.push_back(to_bits(g));
        std::vector<PairBits> ys;
        for (PairBits a : eq)
            for (PairBits b : eq) ys.push_back(a ^ b);
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        double lx = std::log2(static_cast<double>(eq.size())), ly = std::log2(static_cast<double>(ys.size()));
        if (ly > 2 * lx + 4 + 1e-9)
            return fail(c, {{"kind", "speed"}, {"n", n}, {"x", eq.size()}, {"y", ys.size()}});
    }
    c.passed = true;
    return c;
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p)) b.add_edge(u, v);
    return std::move(b).build();
}

TheoremCheck chain_sandwich(std::uint64_t seed) {
    TheoremCheck c{"chain-sandwich", "300 random graphs, n = 2..10, edge density uniform in [0.1, 0.9]", false, {}};
    Rng rng(seed ^ 0xC4A1);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 2 + rng.below(9);
        double p = 0.1 + 0.8 * static_cast<double>(rng.below(1000)) / 1000.0;
        Graph g = random_graph(n, p, rng);
        std::size_t ch = chain_number(g), sch = strong_chain_number(g);
        if (!(sch / 2 <= ch && ch <= sch))
            return fail(c, {{"kind", "chain-sandwich"}, {"graph", to_graph6(g)}, {"ch", ch}, {"sch", sch}});
    }
    c.passed = true;
    return c;
}

TheoremCheck nbhd_product(std::uint64_t seed) {
    TheoremCheck c{"nbhd-product",
                   "200 random pairs of equivalence graphs, n = 4..8, random binary f, m = 1..4; "
                   "class-level bound against the exact equivalence-class value at the same n, "
                   "per-graph bound when f(0,0) = 0",
                   false, {}};
    Rng rng(seed ^ 0x4B4D);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 4 + rng.below(5);
        Graph parts[] = {random_member(tags::equivalence, n, rng), random_member(tags::equivalence, n, rng)};
        unsigned f = static_cast<unsigned>(rng.below(16));
        Graph g = apply_boolean(BooleanFunction(2, f), parts);
        for (std::size_t m = 1; m <= std::min<std::size_t>(4, n); ++m) {
            std::size_t ng = neighborhood_complexity(g, m);
            std::size_t nx = nu_equivalence_class(n, m);
            bool ok = ng <= nx * nx;
            if (ok && !(f & 1U))
                ok = ng <= neighborhood_complexity(parts[0], m) * neighborhood_complexity(parts[1], m);
            if (!ok)
                return fail(c, {{"kind", "nbhd-product"},
                                {"parts", graphs_json(parts)},
                                {"f", BooleanFunction(2, f).to_string()},
                                {"m", m}});
        }
    }
    c.passed = true;
    return c;
}

bool extraction_ok(std::span<const Graph> parts) {
    auto s = common_homogeneous_set(parts);
    for (const auto& h : parts)
        if (!is_homogeneous(h, s)) return false;
    auto trace = homogeneous_extraction_trace(parts);
    const double n = static_cast<double>(trace.front());
    const double r = static_cast<double>(parts.size());
    double delta = 1;
    for (std::size_t i = 1; i < trace.size(); ++i)
        if (trace[i - 1] > 1)
            delta = std::min(delta, std::log(static_cast<double>(trace[i])) / std::log(static_cast<double>(trace[i - 1])));
    const double size = static_cast<double>(s.size());
    // Observed exponent, and the square-root exponent available for perfect inputs.
    return size + 1e-9 >= std::pow(n, std::pow(delta, r)) && size + 1e-9 >= std::pow(n, std::pow(0.5, r));
}

TheoremCheck eh_extraction(std::uint64_t seed) {
    TheoremCheck c{"eh-extraction", "100 random tuples of r = 1..3 equivalence graphs, n = 4..30", false, {}};
    Rng rng(seed ^ 0xE4);
    for (int i = 0; i < 100; ++i) {
        std::size_t r = 1 + rng.below(3), n = 4 + rng.below(27);
        std::vector<Graph> parts;
        for (std::size_t j = 0; j < r; ++j) parts.push_back(random_member(tags::equivalence, n, rng));
        if (!extraction_ok(parts)) return fail(c, {{"kind", "homogeneous"}, {"parts", graphs_json(parts)}});
    }
    c.passed = true;
    return c;
}

TheoremCheck e1_characterization(std::uint64_t) {
    TheoremCheck c{"e1-characterization", "all ordered pairs of graphs with at most one edge, n = 1..6, all 16 binary functions, t = 4", false, {}};
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<PairBits> e1;
        for (const auto& g : enumerate(tags::at_most_edges(1), n)) e1.push_back(to_bits(g));
        const PairBits mask = pair_mask(n);
        const int pairs = std::popcount(mask);
        for (PairBits a : e1)
            for (PairBits b : e1)
                for (unsigned f = 0; f < 16; ++f) {
                    int edges = std::popcount(apply2(f, a, b, mask));
                    if (edges > 4 && pairs - edges > 4) {
                        Graph parts[] = {from_bits(n, a), from_bits(n, b)};
                        return fail(c, {{"kind", "e1"}, {"parts", graphs_json(parts)}, {"f", BooleanFunction(2, f).to_string()}});
                    }
                }
    }
    c.passed = true;
    return c;
}

TheoremCheck empty_characterization(std::uint64_t) {
    TheoremCheck c{"empty-characterization", "every function of arity 0..4 applied to empty graphs, n = 1..6", false, {}};
    for (std::size_t n = 1; n <= 6; ++n)
        for (unsigned k = 0; k <= 4; ++k) {
            std::vector<Graph> parts(k, Graph(n));
            for (const auto& f : enumerate_functions(k)) {
                Graph g = apply_boolean(f, parts, n);
                if (g.edge_count() != 0 && g.edge_count() != n * (n - 1) / 2)
                    return fail(c, {{"kind", "e0"}, {"n", n}, {"f", f.to_string()}});
            }
        }
    c.passed = true;
    return c;
}

TheoremCheck meyniel_split(std::uint64_t seed) {
    TheoremCheck c{"meyniel-split", "300 random 2-intersections of split graphs, n = 4..10", false, {}};
    Rng rng(seed ^ 0x5B17);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 4 + rng.below(7);
        SplitGraph a = random_split(n, rng), b = random_split(n, rng);
        auto r = check_split_intersection(a, b);
        if (!r.chi_bound || !r.meyniel)
            return fail(c, {{"kind", "split-intersection"}, {"parts", json::array({split_json(a), split_json(b)})}});
    }
    c.passed = true;
    return c;
}

using CheckFn = TheoremCheck (*)(std::uint64_t);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> r = {
        {"perfect-2fn-equiv", perfect_2fn_equiv},
        {"forbidden-multipartite", forbidden_multipartite},
        {"c5-not-2fn-equiv", c5_not_2fn_equiv},
        {"speed-bound", speed_bound},
        {"chain-sandwich", chain_sandwich},
        {"nbhd-product", nbhd_product},
        {"eh-extraction", eh_extraction},
        {"e1-characterization", e1_characterization},
        {"empty-characterization", empty_characterization},
        {"meyniel-split", meyniel_split},
    };
    return r;
}

}  // namespace

Graph hnk(std::size_t n, std::size_t k) {
    const std::size_t total = checked_power(n, k);
    std::vector<std::vector<std::size_t>> coords(total);
    for (std::size_t v = 0; v < total; ++v) coords[v] = coordinates(v, n, k);
    GraphBuilder b(total);
    for (Vertex u = 0; u < total; ++u)
        for (Vertex v = u + 1; v < total; ++v) {
            std::size_t agree = 0;
            for (std::size_t i = 0; i < k; ++i) agree += coords[u][i] == coords[v][i];
            if (agree % 2 == 1) b.add_edge(u, v);
        }
    return std::move(b).build();
}

std::vector<Graph> hnk_as_xor(std::size_t n, std::size_t k) {
    const std::size_t total = checked_power(n, k);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> label(total);
        for (std::size_t v = 0; v < total; ++v) label[v] = coordinates(v, n, k)[i];
        out.push_back(equivalence_graph(Partition::from_labels(label)));
    }
    return out;
}

HnkReport hnk_report(std::size_t n, std::size_t k, std::uint64_t chi_node_limit) {
    Graph g = hnk(n, k);
    if (g.order() > kCliqueLimit) throw Error(Errc::SizeLimitExceeded, "exact report needs n^k <= 64");
    HnkReport r;
    r.n = n;
    r.k = k;
    r.omega = clique_number(g);
    r.alpha = independence_number(g);
    const double nk = static_cast<double>(n * k);
    const double base = 2 * std::numbers::e * static_cast<double>(n);
    if (k % 2 == 0) {
        r.omega_bound = nk;
        r.alpha_bound = std::pow(base, static_cast<double>(k / 2));
    } else {
        r.omega_bound = std::pow(base, static_cast<double>((k - 1) / 2));
        r.alpha_bound = nk;
    }
    r.chi_lower = r.alpha ? (g.order() + r.alpha - 1) / r.alpha : 0;
    auto c = chromatic_search(g, chi_node_limit);
    r.chi_exact = c.exact;
    if (c.exact) r.chi = c.value;
    return r;
}

TheoremCheck verify_chi_binding(std::string_view tag_expr, std::string_view binding, std::size_t samples,
                                std::size_t n, std::uint64_t seed) {
    ChiExpr e = parse_expr(tag_expr);
    auto bound = parse_binding(binding, e.t);
    if (n > kGraph6Limit) throw Error(Errc::SizeLimitExceeded, "chi-binding samples limited to 62 vertices");
    TheoremCheck c{"chi-binding:" + std::string(tag_expr) + ":" + std::string(binding),
                   std::to_string(samples) + " samples, n = " + std::to_string(n) + ", seed " + std::to_string(seed),
                   false, {}};
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Graph> parts;
        for (std::size_t i = 0; i < e.t; ++i) parts.push_back(random_member(e.tag, n, rng));
        Graph g = combine(e.op, parts);
        std::size_t omega = clique_number(g), chi = chromatic_number(g);
        double b = bound(static_cast<double>(omega));
        if (static_cast<double>(chi) > b + 1e-9)
            return fail(c, {{"kind", "chi-binding"},
                            {"expr", tag_expr},
                            {"binding", binding},
                            {"parts", graphs_json(parts)},
                            {"omega", omega},
                            {"chi", chi},
                            {"bound", b}});
    }
    c.passed = true;
    return c;
}

SplitIntersectionResult check_split_intersection(const SplitGraph& a, const SplitGraph& b) {
    SplitIntersectionResult res;
    const Graph parts[] = {a.graph, b.graph};
    Graph h = combine(CombineOp::Intersect, parts);
    std::size_t omega = clique_number(h);
    res.chi_bound = static_cast<double>(chromatic_number(h)) <= std::pow(static_cast<double>(omega), 4.0);
    const std::size_t n = h.order();
    GraphBuilder by_class[4] = {GraphBuilder(n), GraphBuilder(n), GraphBuilder(n), GraphBuilder(n)};
    for (auto [u, v] : h.edges()) {
        unsigned cls = (a.in_clique[u] && a.in_clique[v] ? 1U : 0U) | (b.in_clique[u] && b.in_clique[v] ? 2U : 0U);
        by_class[cls].add_edge(u, v);
    }
    for (unsigned cls = 0; cls < 4; ++cls) {
        Graph hb = std::move(by_class[cls]).build();
        if (cls != 3 && !bipartite(hb)) res.meyniel = false;
        if (!is_perfect(hb)) res.meyniel = false;
    }
    return res;
}

bool reverify_counterexample(const std::string& text) {
    json j = json::parse(text);
    const std::string kind = j.at("kind");
    if (kind == "chi-binding") {
        ChiExpr e = parse_expr(j.at("expr").get<std::string>());
        auto bound = parse_binding(j.at("binding").get<std::string>(), e.t);
        auto parts = graphs_from_json(j.at("parts"));
        if (parts.size() != e.t) return false;
        for (const auto& p : parts)
            if (!is_member(e.tag, p)) return false;
        Graph g = combine(e.op, parts);
        return static_cast<double>(chromatic_number(g)) > bound(static_cast<double>(clique_number(g))) + 1e-9;
    }
    if (kind == "not-perfect") {
        auto parts = graphs_from_json(j.at("parts"));
        return !is_perfect(apply_boolean(BooleanFunction::parse(j.at("f").get<std::string>()), parts));
    }
    if (kind == "intersection-representation") {
        auto parts = graphs_from_json(j.at("parts"));
        for (const auto& p : parts)
            if (!is_member(tags::multipartite, p)) return false;
        return combine(CombineOp::Intersect, parts) == from_graph6(j.at("target").get<std::string>());
    }
    if (kind == "representation") {
        auto parts = graphs_from_json(j.at("parts"));
        ClassTag tag = parse_class_tag(j.at("tag").get<std::string>());
        for (const auto& p : parts)
            if (!is_member(tag, p)) return false;
        return apply_boolean(BooleanFunction::parse(j.at("f").get<std::string>()), parts) ==
               from_graph6(j.at("target").get<std::string>());
    }
    if (kind == "chain-sandwich") {
        Graph g = from_graph6(j.at("graph").get<std::string>());
        std::size_t ch = chain_number(g), sch = strong_chain_number(g);
        return !(sch / 2 <= ch && ch <= sch);
    }
    if (kind == "nbhd-product") {
        auto parts = graphs_from_json(j.at("parts"));
        auto f = BooleanFunction::parse(j.at("f").get<std::string>());
        std::size_t m = j.at("m"), n = parts.at(0).order();
        std::size_t ng = neighborhood_complexity(apply_boolean(f, parts), m), nx = nu_equivalence_class(n, m);
        bool ok = ng <= nx * nx;
        if (ok && !f(0)) ok = ng <= neighborhood_complexity(parts[0], m) * neighborhood_complexity(parts[1], m);
        return !ok;
    }
    if (kind == "homogeneous") return !extraction_ok(graphs_from_json(j.at("parts")));
    if (kind == "e1") {
        auto parts = graphs_from_json(j.at("parts"));
        Graph g = apply_boolean(BooleanFunction::parse(j.at("f").get<std::string>()), parts);
        std::size_t pairs = g.order() * (g.order() - 1) / 2;
        return g.edge_count() > 4 && pairs - g.edge_count() > 4;
    }
    if (kind == "e0") {
        std::size_t n = j.at("n");
        auto f = BooleanFunction::parse(j.at("f").get<std::string>());
        std::vector<Graph> parts(f.arity(), Graph(n));
        Graph g = apply_boolean(f, parts, n);
        return g.edge_count() != 0 && g.edge_count() != n * (n - 1) / 2;
    }
    if (kind == "split-intersection") {
        SplitGraph a = split_from_json(j.at("parts").at(0)), b = split_from_json(j.at("parts").at(1));
        auto r = check_split_intersection(a, b);
        return !r.chi_bound || !r.meyniel;
    }
    if (kind == "speed") {
        TheoremCheck again = speed_bound(0);
        return !again.passed;
    }
    return false;
}

const std::vector<std::string>& theorem_catalogue() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

TheoremCheck verify_theorem(std::string_view id, std::uint64_t seed) {
    for (const auto& [name, fn] : registry())
        if (name == id) return fn(seed);
    throw Error(Errc::UnknownTheorem, "no catalogue entry '" + std::string(id) + "'");
}

std::vector<TheoremCheck> verify_all(std::uint64_t seed) {
    std::vector<std::future<TheoremCheck>> jobs;
    for (const auto& [name, fn] : registry()) jobs.push_back(std::async(std::launch::async, fn, seed));
    std::vector<TheoremCheck> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

TheoremCheck explore_c5_three_xor() {
    TheoremCheck c{"c5-3xor-equiv", "", true, {}};
    auto w = exists_representation(named::cycle(5), tags::equivalence, 3, DimMode::Xor);
    if (w) {
        c.scope = "C_5 is the XOR of " + to_graph6(w->parts[0]) + ", " + to_graph6(w->parts[1]) + ", " +
                  to_graph6(w->parts[2]);
    } else {
        c.scope = "no 3-XOR of equivalence graphs on 5 vertices equals C_5";
    }
    return c;
}

}  // namespace boolcomb
