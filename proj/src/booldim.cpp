#include "boolcomb/booldim.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <memory>
#include <string>

#include "boolcomb/io.hpp"

namespace boolcomb {

namespace {

using PairBits = std::uint64_t;

PairBits pair_bits(const Graph& g) {
    PairBits bits = 0;
    std::size_t i = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v, ++i)
            if (g.adjacent(u, v)) bits |= PairBits{1} << i;
    return bits;
}

struct Search {
    std::size_t pairs;
    PairBits target;
    DimMode mode;
    std::size_t k;
    const std::vector<PairBits>& cand;
    std::vector<std::size_t> pick;

    bool feasible() const {
        switch (mode) {
            case DimMode::Union: {
                PairBits acc = 0;
                for (auto i : pick) acc |= cand[i];
                return acc == target;
            }
            case DimMode::Intersect: {
                PairBits acc = ~PairBits{0};
                for (auto i : pick) acc &= cand[i];
                return (acc & mask()) == target;
            }
            case DimMode::Xor: {
                PairBits acc = 0;
                for (auto i : pick) acc ^= cand[i];
                return acc == target;
            }
            case DimMode::Any: break;
        }
        // The map from observed input vectors to target bits must be single-valued.
        std::bitset<256> seen0, seen1;
        for (std::size_t p = 0; p < pairs; ++p) {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < k; ++i) idx |= static_cast<std::size_t>(cand[pick[i]] >> p & 1U) << i;
            if (target >> p & 1U) {
                if (seen0[idx]) return false;
                seen1[idx] = true;
            } else {
                if (seen1[idx]) return false;
                seen0[idx] = true;
            }
        }
        return true;
    }

    PairBits mask() const { return pairs >= 64 ? ~PairBits{0} : (PairBits{1} << pairs) - 1; }

    bool rec(std::size_t depth, std::size_t from) {
        if (depth == k) return feasible();
        for (std::size_t i = from; i < cand.size(); ++i) {
            pick[depth] = i;
            if (rec(depth + 1, i)) return true;
        }
        return false;
    }
};

BooleanFunction fold_function(DimMode mode, unsigned k) {
    switch (mode) {
        case DimMode::Union: return BooleanFunction::disjunction(k);
        case DimMode::Intersect: return BooleanFunction::conjunction(k);
        case DimMode::Xor: return BooleanFunction::parity(k);
        case DimMode::Any: break;
    }
    return BooleanFunction::constant(k, false);
}

}  // namespace

std::optional<DimWitness> exists_representation(const Graph& g, const ClassTag& tag, std::size_t k, DimMode mode,
                                                std::uint64_t budget) {
    const std::size_t n = g.order();
    if (n > kBooldimVertexLimit)
        throw Error(Errc::SizeLimitExceeded, "dimension search limited to 11 vertices");
    if (k == 0) return std::nullopt;  // arity 0 is not considered
    if (k > kMaxArity) throw Error(Errc::SizeLimitExceeded, "arity above 8");

    // Distinct members, in graph6 order so multisets have one canonical form.
    std::vector<std::pair<std::string, Graph>> members;
    const PairBits target = pair_bits(g);
    for_each_member(tag, n, [&](const Graph& h) {
        PairBits hb = pair_bits(h);
        // Folded modes can only use parts below (union) or above (intersection) the target.
        if (mode == DimMode::Union && (hb & ~target)) return true;
        if (mode == DimMode::Intersect && (target & ~hb)) return true;
        members.emplace_back(to_graph6(h), h);
        return true;
    });
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    members.erase(std::unique(members.begin(), members.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  members.end());

    const double tuples = std::pow(static_cast<double>(members.size()), static_cast<double>(k));
    if (tuples > static_cast<double>(budget))
        throw Error(Errc::BudgetExceeded, std::to_string(members.size()) + "^" + std::to_string(k) +
                                              " tuples exceed the budget of " + std::to_string(budget));
    if (members.empty()) return std::nullopt;

    std::vector<PairBits> cand;
    for (const auto& m : members) cand.push_back(pair_bits(m.second));
    Search s{n * (n - (n > 0 ? 1 : 0)) / 2, target, mode, k, cand, std::vector<std::size_t>(k)};
    if (!s.rec(0, 0)) return std::nullopt;

    DimWitness w;
    w.k = k;
    for (auto i : s.pick) w.parts.push_back(members[i].second);
    if (mode == DimMode::Any) {
        std::unique_ptr<bool[]> table(new bool[std::size_t{1} << k]());
        std::size_t p = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v, ++p) {
                std::size_t idx = 0;
                for (std::size_t i = 0; i < k; ++i) idx |= static_cast<std::size_t>(w.parts[i].adjacent(u, v)) << i;
                table[idx] = g.adjacent(u, v);
            }
        w.f = BooleanFunction::from_bits(static_cast<unsigned>(k),
                                         std::span<const bool>(table.get(), std::size_t{1} << k));
    } else {
        w.f = fold_function(mode, static_cast<unsigned>(k));
    }
    if (!(apply_boolean(w.f, w.parts, n) == g))
        throw Error(Errc::CertificationFailed, "dimension witness does not recombine");
    return w;
}

DimResult boolean_dimension(const Graph& g, const ClassTag& tag, std::size_t k_max, std::uint64_t budget) {
    return restricted_dimension(g, tag, DimMode::Any, k_max, budget);
}

DimResult restricted_dimension(const Graph& g, const ClassTag& tag, DimMode mode, std::size_t k_max,
                               std::uint64_t budget) {
    DimResult r;
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (auto w = exists_representation(g, tag, k, mode, budget)) {
            r.witness = std::move(w);
            r.exhausted_k = k - 1;
            return r;
        }
        r.exhausted_k = k;
    }
    return r;
}

}  // namespace boolcomb
