#include "boolcomb/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace boolcomb {

namespace {

using Mask = std::uint64_t;

void require_at_most(const Graph& g, std::size_t limit, const char* what) {
    if (g.order() > limit)
        throw Error(Errc::SizeLimitExceeded, std::string(what) + " supports at most " + std::to_string(limit) +
                                                 " vertices, got " + std::to_string(g.order()));
}

Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<Vertex> mask_to_vertices(Mask m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

// MCQ-style maximum clique with a greedy colouring bound.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : n_(g.order()), adj_(n_) {
        for (Vertex v = 0; v < n_; ++v) adj_[v] = g.mask(v);
    }

    Mask run() {
        expand(0, full_mask(n_));
        return best_;
    }

private:
    void expand(Mask current, Mask cand) {
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        colour_sort(cand, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            std::size_t size = static_cast<std::size_t>(std::popcount(current));
            if (size + bound[i] <= best_size_) return;
            Vertex v = order[i];
            Mask next = cand & adj_[v];
            Mask with = current | (Mask{1} << v);
            if (next == 0) {
                if (size + 1 > best_size_) {
                    best_size_ = size + 1;
                    best_ = with;
                }
            } else {
                expand(with, next);
            }
            cand &= ~(Mask{1} << v);
        }
    }

    void colour_sort(Mask cand, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
        std::size_t colour = 0;
        while (cand) {
            ++colour;
            Mask avail = cand;
            while (avail) {
                Vertex v = static_cast<Vertex>(std::countr_zero(avail));
                avail &= ~adj_[v] & ~(Mask{1} << v);
                cand &= ~(Mask{1} << v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    std::size_t n_;
    std::vector<Mask> adj_;
    Mask best_ = 0;
    std::size_t best_size_ = 0;
};

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, std::uint64_t node_limit)
        : n_(g.order()), adj_(n_), node_limit_(node_limit), colour_(n_, kNone), sat_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v) adj_[v] = g.mask(v);
    }

    ColoringResult run(const std::vector<Vertex>& clique) {
        ColoringResult res;
        if (n_ == 0) return res;
        lower_ = clique.size();
        best_ = n_ + 1;
        // Colour a maximum clique first; any optimal colouring can be permuted to agree.
        std::size_t used = 0;
        for (Vertex v : clique) assign(v, used++, nullptr);
        search(used, n_ - clique.size());
        res.value = best_;
        res.exact = !aborted_;
        res.colors = best_colours_;
        return res;
    }

private:
    static constexpr std::size_t kNone = SIZE_MAX;

    void assign(Vertex v, std::size_t c, std::vector<Vertex>* changed) {
        colour_[v] = c;
        Mask nb = adj_[v];
        while (nb) {
            Vertex u = static_cast<Vertex>(std::countr_zero(nb));
            nb &= nb - 1;
            if (!(sat_[u] >> c & 1U)) {
                sat_[u] |= Mask{1} << c;
                if (changed) changed->push_back(u);
            }
        }
    }

    void search(std::size_t used, std::size_t remaining) {
        if (aborted_ || best_ == lower_ || used >= best_) return;
        if (node_limit_ && ++nodes_ > node_limit_) {
            aborted_ = true;
            return;
        }
        if (remaining == 0) {
            best_ = used;
            best_colours_ = colour_;
            return;
        }
        // Highest saturation, then highest degree, then lowest index.
        Vertex pick = 0;
        int best_sat = -1, best_deg = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] != kNone) continue;
            int s = std::popcount(sat_[v]);
            int d = std::popcount(adj_[v]);
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                pick = v;
                best_sat = s;
                best_deg = d;
            }
        }
        std::size_t limit = std::min(used + 1, best_ - 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (sat_[pick] >> c & 1U) continue;
            std::vector<Vertex> changed;
            assign(pick, c, &changed);
            search(std::max(used, c + 1), remaining - 1);
            for (Vertex u : changed) sat_[u] &= ~(Mask{1} << c);
            colour_[pick] = kNone;
            if (aborted_ || best_ == lower_) return;
            limit = std::min(limit, best_ - 1);
        }
    }

    std::size_t n_;
    std::vector<Mask> adj_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::size_t lower_ = 0, best_ = 0;
    std::vector<std::size_t> colour_, best_colours_;
    std::vector<Mask> sat_;
};

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g) {
    require_at_most(g, kCliqueLimit, "clique search");
    return mask_to_vertices(CliqueSearch(g).run());
}

std::vector<Vertex> maximum_independent_set(const Graph& g) { return maximum_clique(complement(g)); }

std::size_t clique_number(const Graph& g) { return maximum_clique(g).size(); }
std::size_t independence_number(const Graph& g) { return maximum_independent_set(g).size(); }

ColoringResult chromatic_search(const Graph& g, std::uint64_t node_limit) {
    require_at_most(g, kChromaticLimit, "chromatic number");
    return DsaturSearch(g, node_limit).run(maximum_clique(g));
}

std::size_t chromatic_number(const Graph& g) { return chromatic_search(g).value; }

std::size_t max_degree(const Graph& g) {
    std::size_t d = 0;
    for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::size_t degeneracy(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<char> gone(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::size_t result = 0;
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = 0;
        std::size_t low = SIZE_MAX;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[v] && deg[v] < low) {
                low = deg[v];
                pick = v;
            }
        result = std::max(result, low);
        gone[pick] = 1;
        for (Vertex u : g.neighbors(pick))
            if (!gone[u]) --deg[u];
    }
    return result;
}

std::size_t biclique_number(const Graph& g) {
    require_at_most(g, kBicliqueLimit, "biclique number");
    const std::size_t n = g.order();
    std::size_t best = 0;
    // B can be any subset of the common neighbourhood of A, which never meets A.
    for (Mask a = 1; a < (Mask{1} << n); ++a) {
        std::size_t size = static_cast<std::size_t>(std::popcount(a));
        if (size <= best) continue;
        Mask common = full_mask(n), rest = a;
        while (rest && static_cast<std::size_t>(std::popcount(common)) > best) {
            common &= g.mask(static_cast<Vertex>(std::countr_zero(rest)));
            rest &= rest - 1;
        }
        best = std::max(best, std::min(size, static_cast<std::size_t>(std::popcount(common))));
    }
    return best;
}

namespace {

// Grows (a_1,b_1),...,(a_k,b_k) one pair at a time. cand_a holds vertices
// non-adjacent to every b so far, cand_b vertices adjacent to every a so far.
struct ChainSearch {
    const Graph& g;
    bool strong;
    std::size_t best = 0;

    void grow(std::size_t k, Mask used, Mask cand_a, Mask cand_b) {
        best = std::max(best, k);
        Mask free_a = cand_a & ~used, free_b = cand_b & ~used;
        std::size_t room = static_cast<std::size_t>(std::min(std::popcount(free_a), std::popcount(free_b)));
        std::size_t left = static_cast<std::size_t>(std::popcount(~used & full_mask(g.order()))) / 2;
        if (k + std::min(room, left) <= best) return;
        for (Mask as = free_a; as; as &= as - 1) {
            Vertex a = static_cast<Vertex>(std::countr_zero(as));
            Mask bs = free_b & ~(Mask{1} << a);
            if (!strong) bs &= g.mask(a);
            for (; bs; bs &= bs - 1) {
                Vertex b = static_cast<Vertex>(std::countr_zero(bs));
                grow(k + 1, used | (Mask{1} << a) | (Mask{1} << b), cand_a & ~g.mask(b),
                     cand_b & g.mask(a));
            }
        }
    }
};

std::size_t chain_search(const Graph& g, bool strong) {
    require_at_most(g, kChainLimit, "chain number");
    ChainSearch s{g, strong};
    Mask all = full_mask(g.order());
    s.grow(0, 0, all, all);
    return s.best;
}

}  // namespace

std::size_t chain_number(const Graph& g) { return chain_search(g, false); }
std::size_t strong_chain_number(const Graph& g) { return chain_search(g, true); }

Partition twin_classes(const Graph& g) {
    const std::size_t n = g.order(), w = g.words_per_row();
    std::vector<Vertex> reps;
    std::vector<std::size_t> label(n);
    auto twins = [&](Vertex a, Vertex b) {
        auto ra = g.row(a), rb = g.row(b);
        for (std::size_t i = 0; i < w; ++i) {
            Word x = ra[i] ^ rb[i];
            if (i == a / kWordBits) x &= ~(Word{1} << (a % kWordBits));
            if (i == b / kWordBits) x &= ~(Word{1} << (b % kWordBits));
            if (x) return false;
        }
        return true;
    };
    for (Vertex v = 0; v < n; ++v) {
        std::size_t found = reps.size();
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (twins(reps[c], v)) {
                found = c;
                break;
            }
        if (found == reps.size()) reps.push_back(v);
        label[v] = found;
    }
    return Partition::from_labels(label);
}

std::size_t twin_number(const Graph& g) { return twin_classes(g).size(); }

std::size_t vc_dimension(const Graph& g) {
    require_at_most(g, kVcLimit, "VC dimension");
    const std::size_t n = g.order();
    std::size_t best = 0;
    std::vector<char> seen;
    for (std::size_t d = 1; d <= n; ++d) {
        if ((std::size_t{1} << d) > n) break;  // at most n distinct traces
        bool any = false;
        for (Mask s = 1; s < (Mask{1} << n) && !any; ++s) {
            if (static_cast<std::size_t>(std::popcount(s)) != d) continue;
            seen.assign(std::size_t{1} << d, 0);
            std::size_t distinct = 0;
            for (Vertex v = 0; v < n; ++v) {
                Mask t = g.mask(v) & s;
                // compress trace to d bits
                std::size_t idx = 0, bit = 0;
                for (Mask r = s; r; r &= r - 1, ++bit)
                    if (t >> std::countr_zero(r) & 1U) idx |= std::size_t{1} << bit;
                if (!seen[idx]) {
                    seen[idx] = 1;
                    ++distinct;
                }
            }
            any = distinct == (std::size_t{1} << d);
        }
        if (!any) break;
        best = d;
    }
    return best;
}

std::size_t neighborhood_complexity(const Graph& g, std::size_t m) {
    require_at_most(g, 64, "neighbourhood complexity");
    const std::size_t n = g.order();
    if (m == 0) return n == 0 ? 0 : 1;
    if (m > n) throw Error(Errc::SizeLimitExceeded, "subset size larger than the graph");
    // Guard against combinatorial blow-up.
    double subsets = 1;
    for (std::size_t i = 0; i < m; ++i) subsets = subsets * static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (subsets > 2e7) throw Error(Errc::SizeLimitExceeded, "too many subsets to enumerate");

    std::size_t best = 0;
    std::vector<Vertex> idx(m);
    std::iota(idx.begin(), idx.end(), Vertex{0});
    std::vector<Mask> traces(n);
    while (true) {
        Mask a = 0;
        for (Vertex v : idx) a |= Mask{1} << v;
        for (Vertex v = 0; v < n; ++v) traces[v] = g.mask(v) & a;
        std::sort(traces.begin(), traces.end());
        best = std::max(best, static_cast<std::size_t>(std::unique(traces.begin(), traces.end()) - traces.begin()));
        std::size_t i = m;
        while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

namespace {

// Induced odd cycle of length >= 5 whose smallest vertex is the path start.
bool odd_hole_from(const Graph& g, std::vector<Vertex>& path, Mask on_path, Mask blocked) {
    Vertex s = path.front(), last = path.back();
    Mask ext = g.mask(last) & ~on_path & ~blocked;
    // Only vertices larger than s, so each cycle is found from its minimum.
    ext &= ~((Mask{2} << s) - 1);
    for (; ext; ext &= ext - 1) {
        Vertex v = static_cast<Vertex>(std::countr_zero(ext));
        std::size_t len = path.size() + 1;
        bool closes = g.adjacent(v, s);
        if (closes) {
            if (len >= 5 && len % 2 == 1) {
                path.push_back(v);
                return true;
            }
            continue;
        }
        // v must be non-adjacent to every internal vertex except last.
        Mask new_blocked = blocked | (g.mask(last) & ~(Mask{1} << v));
        path.push_back(v);
        if (odd_hole_from(g, path, on_path | (Mask{1} << v), new_blocked)) return true;
        path.pop_back();
    }
    return false;
}

std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g) {
    for (Vertex s = 0; s < g.order(); ++s) {
        for (Vertex t : g.neighbors(s)) {
            if (t < s) continue;
            std::vector<Vertex> path{s, t};
            // Vertices adjacent to s (other than through closing) may only appear last.
            if (odd_hole_from(g, path, (Mask{1} << s) | (Mask{1} << t), 0)) return path;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<Vertex>> find_odd_hole_or_antihole(const Graph& g) {
    require_at_most(g, kPerfectLimit, "perfectness test");
    if (auto hole = find_odd_hole(g)) return hole;
    if (auto anti = find_odd_hole(complement(g))) return anti;
    return std::nullopt;
}

bool is_perfect_by_subsets(const Graph& g) {
    require_at_most(g, kPerfectOracleLimit, "subset perfectness oracle");
    const std::size_t n = g.order(), total = std::size_t{1} << n;
    std::vector<unsigned char> omega(total, 0), chi(total, 0), indep(total, 0);
    indep[0] = 1;
    for (Mask s = 1; s < total; ++s) {
        Vertex v = static_cast<Vertex>(std::countr_zero(s));
        Mask rest = s & (s - 1);
        indep[s] = indep[rest] && !(g.mask(v) & rest);
        omega[s] = std::max<unsigned char>(omega[rest], static_cast<unsigned char>(1 + omega[rest & g.mask(v)]));
        // Colour class containing v: any independent subset of s holding v.
        unsigned char best = 255;
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            Mask cls = sub | (Mask{1} << v);
            if (indep[cls]) best = std::min<unsigned char>(best, static_cast<unsigned char>(1 + chi[s & ~cls]));
            if (sub == 0) break;
        }
        chi[s] = best;
        if (chi[s] != omega[s]) return false;
    }
    return true;
}

bool is_perfect(const Graph& g) {
    bool spgt = !find_odd_hole_or_antihole(g).has_value();
    if (g.order() <= kPerfectOracleLimit && spgt != is_perfect_by_subsets(g))
        throw Error(Errc::CertificationFailed, "perfectness oracles disagree");
    return spgt;
}

bool is_homogeneous(const Graph& g, std::span<const Vertex> s) {
    if (s.size() < 2) return true;
    bool first = g.adjacent(s[0], s[1]);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]) != first) return false;
    return true;
}

namespace {

std::vector<std::vector<Vertex>> extraction_steps(std::span<const Graph> graphs) {
    if (graphs.empty()) throw Error(Errc::EmptyInput, "need at least one graph");
    for (const auto& h : graphs)
        if (h.order() != graphs.front().order())
            throw Error(Errc::MismatchedVertexCount, "graphs have different vertex counts");
    std::vector<Vertex> current(graphs.front().order());
    std::iota(current.begin(), current.end(), Vertex{0});
    std::vector<std::vector<Vertex>> steps{current};
    for (const auto& h : graphs) {
        Graph sub = induced_subgraph(h, current);
        auto clique = maximum_clique(sub);
        auto indep = maximum_independent_set(sub);
        const auto& pick = clique.size() >= indep.size() ? clique : indep;
        std::vector<Vertex> next;
        for (Vertex i : pick) next.push_back(current[i]);
        std::sort(next.begin(), next.end());
        current = std::move(next);
        steps.push_back(current);
    }
    return steps;
}

}  // namespace

std::vector<Vertex> common_homogeneous_set(std::span<const Graph> graphs) {
    return extraction_steps(graphs).back();
}

std::vector<std::size_t> homogeneous_extraction_trace(std::span<const Graph> graphs) {
    std::vector<std::size_t> out;
    for (const auto& s : extraction_steps(graphs)) out.push_back(s.size());
    return out;
}

ParamReport parameters(const Graph& g) {
    ParamReport r;
    const std::size_t n = g.order();
    r.max_degree = max_degree(g);
    r.degeneracy = degeneracy(g);
    r.twin_number = twin_number(g);
    if (n <= kCliqueLimit) {
        r.omega = clique_number(g);
        r.alpha = independence_number(g);
    }
    if (n <= kChromaticLimit) {
        auto c = chromatic_search(g, 5'000'000);
        if (c.exact) r.chi = c.value;
    }
    if (n <= kBicliqueLimit) r.biclique = biclique_number(g);
    if (n <= kChainLimit) {
        r.chain = chain_number(g);
        r.strong_chain = strong_chain_number(g);
    }
    if (n <= kPerfectLimit) r.perfect = is_perfect(g);
    return r;
}

}  // namespace boolcomb
