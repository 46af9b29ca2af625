#include "serialize.hpp"

#include "boolcomb/io.hpp"

namespace boolcomb {

using json = nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const ParamReport& r) {
    return {{"omega", opt(r.omega)},
            {"alpha", opt(r.alpha)},
            {"chi", opt(r.chi)},
            {"max_degree", opt(r.max_degree)},
            {"degeneracy", opt(r.degeneracy)},
            {"biclique", opt(r.biclique)},
            {"chain", opt(r.chain)},
            {"strong_chain", opt(r.strong_chain)},
            {"twin_number", opt(r.twin_number)},
            {"perfect", opt(r.perfect)}};
}

json to_json(const Decomposition& d, std::string_view method) {
    json parts = json::array();
    for (const auto& [g, tag] : d.parts) parts.push_back({to_graph6(g), to_string(tag)});
    return {{"method", method},
            {"target", to_graph6(d.target)},
            {"f", d.f.to_string()},
            {"alpha", d.alpha},
            {"parts", parts},
            {"certified", d.certified}};
}

json to_json(const HnkReport& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"omega", r.omega},
            {"alpha", r.alpha},
            {"chi", opt(r.chi)},
            {"chi_exact", r.chi_exact},
            {"omega_bound", r.omega_bound},
            {"alpha_bound", r.alpha_bound},
            {"chi_lower", r.chi_lower}};
}

json to_json(const TheoremCheck& c, std::uint64_t seed) {
    return {{"id", c.id},
            {"scope", c.scope},
            {"passed", c.passed},
            {"seed", seed},
            {"counterexample", c.counterexample ? json::parse(*c.counterexample) : json(nullptr)}};
}

json to_json(const DimResult& r, const Graph& target, const ClassTag& tag, std::string_view mode) {
    json out = {{"target", to_graph6(target)},
                {"class", to_string(tag)},
                {"mode", mode},
                {"found", r.witness.has_value()},
                {"exhausted_k", r.exhausted_k}};
    if (r.witness) {
        json parts = json::array();
        for (const auto& p : r.witness->parts) parts.push_back(to_graph6(p));
        out["k"] = r.witness->k;
        out["f"] = r.witness->f.to_string();
        out["parts"] = parts;
    } else {
        out["k"] = nullptr;
        out["f"] = nullptr;
        out["parts"] = nullptr;
    }
    return out;
}

json to_json(const ComposedLabels& l) {
    json bases = json::array();
    for (std::size_t i = 0; i < l.scheme.bases.size(); ++i) bases.push_back("equiv");
    json labels = json::object();
    for (std::size_t v = 0; v < l.labels.size(); ++v) labels[std::to_string(v)] = l.labels[v].to_hex();
    return {{"scheme",
             {{"f", l.scheme.f.to_string()},
              {"bases", bases},
              {"n", l.scheme.n},
              {"base_width", l.scheme.base_width()},
              {"label_bits", l.scheme.label_bits()}}},
            {"labels", labels}};
}

json to_json(const std::vector<Partition>& seq, bool certified) {
    json steps = json::array();
    for (const auto& p : seq) steps.push_back(p.blocks());
    return {{"method", "pcseq"},
            {"n", seq.empty() ? 0 : seq.front().ground_size()},
            {"sequence", steps},
            {"certified", certified}};
}

}  // namespace boolcomb
