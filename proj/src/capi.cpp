#include "boolcomb/boolcomb.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "boolcomb/booldim.hpp"
#include "boolcomb/classes.hpp"
#include "boolcomb/decompose.hpp"
#include "boolcomb/error.hpp"
#include "boolcomb/extremal.hpp"
#include "boolcomb/graph.hpp"
#include "boolcomb/invariants.hpp"
#include "boolcomb/io.hpp"
#include "boolcomb/labeling.hpp"
#include "serialize.hpp"

struct bc_graph {
    boolcomb::Graph g;
};

namespace {

using namespace boolcomb;
using json = nlohmann::json;

static_assert(BC_ERR_CERTIFICATION_FAILED == static_cast<int>(Errc::CertificationFailed) + 1);

thread_local std::string last_error;

bc_status fail(bc_status s, std::string msg) {
    last_error = std::move(msg);
    return s;
}

template <class Fn>
bc_status guarded(Fn&& fn) {
    try {
        last_error.clear();
        fn();
        return BC_OK;
    } catch (const Error& e) {
        return fail(static_cast<bc_status>(static_cast<int>(e.code()) + 1), e.what());
    } catch (const json::exception& e) {
        return fail(BC_ERR_MALFORMED_INPUT, std::string("MalformedInput: ") + e.what());
    } catch (const std::bad_alloc&) {
        return fail(BC_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(BC_ERR_INTERNAL, e.what());
    }
}

template <class T>
void require(const T* p) {
    if (!p) throw Error(Errc::MalformedInput, "null argument");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bc_graph* wrap(Graph g) { return new bc_graph{std::move(g)}; }

std::vector<Graph> unwrap(const bc_graph* const* graphs, size_t count) {
    if (count && !graphs) throw Error(Errc::MalformedInput, "null graph list");
    std::vector<Graph> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        require(graphs[i]);
        out.push_back(graphs[i]->g);
    }
    return out;
}

GraphFormat format_of(bc_format f) {
    switch (f) {
        case BC_FORMAT_GRAPH6: return GraphFormat::Graph6;
        case BC_FORMAT_EDGE_LIST: return GraphFormat::EdgeList;
        default: return GraphFormat::Auto;
    }
}

CombineOp op_of(bc_op op) {
    switch (op) {
        case BC_OP_UNION: return CombineOp::Union;
        case BC_OP_INTERSECT: return CombineOp::Intersect;
        case BC_OP_XOR: return CombineOp::Xor;
    }
    throw Error(Errc::MalformedInput, "unknown combine operator");
}

std::uint64_t search_budget() {
    const char* env = std::getenv("BOOLCOMB_BUDGET");
    if (!env || !*env) return kDefaultSearchBudget;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw Error(Errc::MalformedInput, "BOOLCOMB_BUDGET must be a positive integer");
    return v;
}

DimMode mode_of(std::string_view m) {
    if (m == "any") return DimMode::Any;
    if (m == "union") return DimMode::Union;
    if (m == "intersect") return DimMode::Intersect;
    if (m == "xor") return DimMode::Xor;
    throw Error(Errc::MalformedInput, "unknown mode '" + std::string(m) + "'");
}

}  // namespace

extern "C" {

const char* bc_status_name(bc_status status) {
    switch (status) {
        case BC_OK: return "Ok";
        case BC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case BC_ERR_OUT_OF_MEMORY: return "OutOfMemory";
        case BC_ERR_INTERNAL: return "Internal";
        default: break;
    }
    int code = static_cast<int>(status) - 1;
    if (code >= 0 && code <= static_cast<int>(Errc::CertificationFailed))
        return errc_name(static_cast<Errc>(code)).data();
    return "Unknown";
}

const char* bc_last_error_message(void) { return last_error.c_str(); }

void bc_string_free(char* s) { std::free(s); }

bc_status bc_graph_parse(const char* text, bc_format format, bc_graph** out) {
    if (!text || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap(parse_graph(text, format_of(format))); });
}

bc_status bc_graph_emit(const bc_graph* g, bc_format format, char** out) {
    if (!g || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        GraphFormat f = format == BC_FORMAT_EDGE_LIST ? GraphFormat::EdgeList : GraphFormat::Graph6;
        *out = dup(emit_graph(g->g, f));
    });
}

void bc_graph_free(bc_graph* g) { delete g; }

size_t bc_graph_order(const bc_graph* g) { return g ? g->g.order() : 0; }

size_t bc_graph_edge_count(const bc_graph* g) { return g ? g->g.edge_count() : 0; }

bc_status bc_graph_adjacent(const bc_graph* g, size_t u, size_t v, int* out) {
    if (!g || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        if (u >= g->g.order() || v >= g->g.order()) throw Error(Errc::OutOfRangeVertex, "vertex out of range");
        *out = g->g.adjacent(u, v) ? 1 : 0;
    });
}

bc_status bc_graph_equal(const bc_graph* a, const bc_graph* b, int* out) {
    if (!a || !b || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = a->g == b->g ? 1 : 0; });
}

bc_status bc_graph_isomorphic(const bc_graph* a, const bc_graph* b, int* out) {
    if (!a || !b || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = is_isomorphic(a->g, b->g) ? 1 : 0; });
}

bc_status bc_combine(bc_op op, const bc_graph* const* graphs, size_t count, bc_graph** out) {
    if (!out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap(combine(op_of(op), unwrap(graphs, count))); });
}

bc_status bc_apply_function(const char* fn, const bc_graph* const* graphs, size_t count, bc_graph** out) {
    if (!fn || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto parts = unwrap(graphs, count);
        *out = wrap(apply_boolean(BooleanFunction::parse(fn), parts));
    });
}

bc_status bc_complement(const bc_graph* g, bc_graph** out) {
    if (!g || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap(complement(g->g)); });
}

bc_status bc_is_member(const char* class_tag, const bc_graph* g, int* out) {
    if (!class_tag || !g || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = is_member(parse_class_tag(class_tag), g->g) ? 1 : 0; });
}

bc_status bc_enumerate_json(const char* class_tag, size_t n, char** out) {
    if (!class_tag || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        json arr = json::array();
        for_each_member(parse_class_tag(class_tag), n, [&](const Graph& g) {
            arr.push_back(to_graph6(g));
            return true;
        });
        *out = dup(arr.dump());
    });
}

bc_status bc_params_json(const bc_graph* g, char** out) {
    if (!g || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = dup(to_json(parameters(g->g)).dump()); });
}

bc_status bc_decompose_json(const char* method, const bc_graph* const* graphs, size_t count, const char* fn,
                            const char* class_tag, char** out) {
    if (!method || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const std::string m = method;
        auto parts = unwrap(graphs, count);
        auto single = [&]() -> const Graph& {
            if (parts.size() != 1) throw Error(Errc::ArityMismatch, "method '" + m + "' takes exactly one graph");
            return parts.front();
        };
        json result;
        if (m == "vizing") {
            result = to_json(vizing_matchings(single()), m);
        } else if (m == "twin") {
            result = to_json(twin_decomposition(single()), m);
        } else if (m == "classL") {
            result = to_json(class_L_decomposition(single()), m);
        } else if (m == "xornf") {
            if (!fn || !class_tag) throw Error(Errc::MalformedInput, "xornf needs a function and a class tag");
            result = to_json(xor_normal_form_decomposition(BooleanFunction::parse(fn), parts, parse_class_tag(class_tag)), m);
        } else if (m == "pcseq") {
            if (parts.empty()) throw Error(Errc::EmptyInput, "pcseq needs at least one graph");
            auto seq = partition_complementation_sequence(parts);
            bool ok = fold_partition_complements(parts.front().order(), seq) == combine(CombineOp::Xor, parts);
            if (!ok) throw Error(Errc::CertificationFailed, "partition complements do not fold to the XOR");
            result = to_json(seq, ok);
        } else {
            throw Error(Errc::MalformedInput, "unknown decomposition method '" + m + "'");
        }
        *out = dup(result.dump());
    });
}

bc_status bc_hnk(size_t n, size_t k, bc_graph** out) {
    if (!out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap(hnk(n, k)); });
}

bc_status bc_hnk_report_json(size_t n, size_t k, char** out) {
    if (!out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = dup(to_json(hnk_report(n, k)).dump()); });
}

bc_status bc_verify_json(const char* id, uint64_t seed, char** out, int* all_passed) {
    if (!id || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        bool ok = true;
        json result;
        if (std::string_view(id) == "all") {
            result = json::array();
            for (const auto& c : verify_all(seed)) {
                ok = ok && c.passed;
                result.push_back(to_json(c, seed));
            }
        } else {
            auto c = verify_theorem(id, seed);
            ok = c.passed;
            result = to_json(c, seed);
        }
        *out = dup(result.dump());
        if (all_passed) *all_passed = ok ? 1 : 0;
    });
}

bc_status bc_chi_binding_json(const char* expr, const char* binding, size_t samples, size_t n, uint64_t seed,
                              char** out, int* passed) {
    if (!expr || !binding || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto c = verify_chi_binding(expr, binding, samples, n, seed);
        *out = dup(to_json(c, seed).dump());
        if (passed) *passed = c.passed ? 1 : 0;
    });
}

bc_status bc_reverify_counterexample(const char* text, int* out) {
    if (!text || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = reverify_counterexample(text) ? 1 : 0; });
}

bc_status bc_booldim_json(const bc_graph* target, const char* class_tag, size_t k_max, const char* mode, char** out) {
    if (!target || !class_tag || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const std::string m = mode ? mode : "any";
        ClassTag tag = parse_class_tag(class_tag);
        DimMode dm = mode_of(m);
        std::uint64_t budget = search_budget();
        DimResult r = dm == DimMode::Any ? boolean_dimension(target->g, tag, k_max, budget)
                                         : restricted_dimension(target->g, tag, dm, k_max, budget);
        *out = dup(to_json(r, target->g, tag, m).dump());
    });
}

bc_status bc_label_json(const char* fn, const bc_graph* const* graphs, size_t count, char** out) {
    if (!fn || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto parts = unwrap(graphs, count);
        std::vector<BaseScheme> bases(parts.size(), BaseScheme::Equivalence);
        *out = dup(to_json(compose(BooleanFunction::parse(fn), bases, parts)).dump());
    });
}

bc_status bc_label_decode(const char* fn, size_t n, const char* hex_a, const char* hex_b, int* out) {
    if (!fn || !hex_a || !hex_b || !out) return fail(BC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ComposedScheme s;
        s.f = BooleanFunction::parse(fn);
        s.bases.assign(s.f.arity(), BaseScheme::Equivalence);
        s.n = n;
        const std::size_t bits = s.label_bits();
        *out = decode(s, Label::from_hex(hex_a, bits), Label::from_hex(hex_b, bits)) ? 1 : 0;
    });
}

}  // extern "C"
