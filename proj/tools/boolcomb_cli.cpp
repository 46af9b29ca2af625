#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolcomb/boolcomb.h"

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 7;

struct CliError {
    std::string message;
};

void check(bc_status s) {
    if (s != BC_OK) throw CliError{bc_last_error_message()};
}

struct GraphDeleter {
    void operator()(bc_graph* g) const { bc_graph_free(g); }
};
using GraphPtr = std::unique_ptr<bc_graph, GraphDeleter>;

struct StringDeleter {
    void operator()(char* s) const { bc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return OwnedString(s).get(); }

// A graph argument is a graph6 string, an existing file, or "-" for stdin.
std::string read_source(const std::string& arg) {
    if (arg == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(arg);
    if (in) {
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

GraphPtr load_graph(const std::string& arg) {
    bc_graph* g = nullptr;
    check(bc_graph_parse(read_source(arg).c_str(), BC_FORMAT_AUTO, &g));
    return GraphPtr(g);
}

struct GraphList {
    std::vector<GraphPtr> owned;
    std::vector<const bc_graph*> raw;

    explicit GraphList(const std::vector<std::string>& args) {
        for (const auto& a : args) {
            owned.push_back(load_graph(a));
            raw.push_back(owned.back().get());
        }
    }
};

std::string emit(const bc_graph* g, const std::string& format) {
    bc_format f = format == "edges" ? BC_FORMAT_EDGE_LIST : BC_FORMAT_GRAPH6;
    if (format.empty() && bc_graph_order(g) > 62) f = BC_FORMAT_EDGE_LIST;
    char* out = nullptr;
    check(bc_graph_emit(g, f, &out));
    return take(out);
}

void print_json(const std::string& text) { std::cout << nlohmann::json::parse(text).dump(2) << "\n"; }

void print_table(const nlohmann::json& checks) {
    for (const auto& c : checks) {
        std::cout << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << c["id"].get<std::string>() << "  ("
                  << c["scope"].get<std::string>() << ")\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boolcomb: boolean combinations of graphs"};
    app.require_subcommand(1);
    std::string format;
    app.add_option("--format", format, "graph output format")->check(CLI::IsMember({"g6", "edges"}));

    std::string graph_arg;
    std::vector<std::string> graph_args;

    auto* params = app.add_subcommand("params", "exact parameter report as JSON");
    params->add_option("graph", graph_arg, "graph6 string, file, or -")->required();

    std::string op;
    auto* comb = app.add_subcommand("combine", "combine graphs on a shared vertex set");
    comb->add_option("--op", op, "union | intersect | xor | fn:<arity>:0x<hex>")->required();
    comb->add_option("graphs", graph_args)->required();

    std::string method, fn, tag;
    auto* dec = app.add_subcommand("decompose", "certified decomposition as JSON");
    dec->add_option("--method", method)->required()->check(CLI::IsMember({"vizing", "twin", "classL", "xornf", "pcseq"}));
    dec->add_option("--fn", fn, "function for xornf");
    dec->add_option("--class", tag, "class tag for xornf");
    dec->add_option("graphs", graph_args)->required();

    std::size_t hn = 0, hk = 0;
    bool report = false;
    auto* hnk = app.add_subcommand("hnk", "graph on [n]^k, adjacent when agreeing on an odd number of coordinates");
    hnk->add_option("n", hn)->required();
    hnk->add_option("k", hk)->required();
    hnk->add_flag("--report", report, "exact invariants and analytic bounds as JSON");

    std::string theorem;
    std::uint64_t seed = kDefaultSeed;
    bool table = false;
    auto* ver = app.add_subcommand("verify", "run catalogue checks");
    ver->add_option("theorem", theorem, "catalogue id or all")->required();
    ver->add_option("--seed", seed);
    ver->add_flag("--table", table, "pass/fail table instead of JSON");

    std::string expr, binding;
    std::size_t samples = 500, cn = 12;
    auto* chi = app.add_subcommand("chi-binding", "sample a combination class and test a chi-binding function");
    chi->add_option("--expr", expr, "<union|intersect>:<t>:<class>")->required();
    chi->add_option("--binding", binding, "linear | linear:<c> | power | product | multipartite")->required();
    chi->add_option("--samples", samples);
    chi->add_option("--n", cn);
    chi->add_option("--seed", seed);

    std::string target, mode = "any";
    std::size_t kmax = 3;
    auto* bd = app.add_subcommand("booldim", "boolean dimension search");
    bd->add_option("--target", target)->required();
    bd->add_option("--class", tag)->required();
    bd->add_option("--kmax", kmax);
    bd->add_option("--mode", mode)->check(CLI::IsMember({"any", "union", "intersect", "xor"}));

    auto* lab = app.add_subcommand("label", "composed adjacency labels over equivalence graphs");
    lab->add_option("--fn", fn)->required();
    lab->add_option("graphs", graph_args)->required();

    std::size_t en = 0;
    auto* en_cmd = app.add_subcommand("enumerate", "all labeled class members, one graph6 per line");
    en_cmd->add_option("--class", tag)->required();
    en_cmd->add_option("--n", en)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        char* out = nullptr;
        if (*params) {
            auto g = load_graph(graph_arg);
            check(bc_params_json(g.get(), &out));
            print_json(take(out));
        } else if (*comb) {
            GraphList gs(graph_args);
            bc_graph* r = nullptr;
            if (op == "union") check(bc_combine(BC_OP_UNION, gs.raw.data(), gs.raw.size(), &r));
            else if (op == "intersect") check(bc_combine(BC_OP_INTERSECT, gs.raw.data(), gs.raw.size(), &r));
            else if (op == "xor") check(bc_combine(BC_OP_XOR, gs.raw.data(), gs.raw.size(), &r));
            else if (op.rfind("fn:", 0) == 0) check(bc_apply_function(op.c_str() + 3, gs.raw.data(), gs.raw.size(), &r));
            else throw CliError{"unknown --op '" + op + "'"};
            GraphPtr res(r);
            std::cout << emit(res.get(), format) << "\n";
        } else if (*dec) {
            GraphList gs(graph_args);
            check(bc_decompose_json(method.c_str(), gs.raw.data(), gs.raw.size(), fn.empty() ? nullptr : fn.c_str(),
                                    tag.empty() ? nullptr : tag.c_str(), &out));
            print_json(take(out));
        } else if (*hnk) {
            if (report) {
                check(bc_hnk_report_json(hn, hk, &out));
                print_json(take(out));
            } else {
                bc_graph* r = nullptr;
                check(bc_hnk(hn, hk, &r));
                GraphPtr res(r);
                std::cout << emit(res.get(), format) << "\n";
            }
        } else if (*ver) {
            int passed = 0;
            check(bc_verify_json(theorem.c_str(), seed, &out, &passed));
            auto j = nlohmann::json::parse(take(out));
            if (table) print_table(j.is_array() ? j : nlohmann::json::array({j}));
            else std::cout << j.dump(2) << "\n";
            return passed ? 0 : kExitFailedCheck;
        } else if (*chi) {
            int passed = 0;
            check(bc_chi_binding_json(expr.c_str(), binding.c_str(), samples, cn, seed, &out, &passed));
            print_json(take(out));
            return passed ? 0 : kExitFailedCheck;
        } else if (*bd) {
            auto g = load_graph(target);
            check(bc_booldim_json(g.get(), tag.c_str(), kmax, mode.c_str(), &out));
            print_json(take(out));
        } else if (*lab) {
            GraphList gs(graph_args);
            check(bc_label_json(fn.c_str(), gs.raw.data(), gs.raw.size(), &out));
            print_json(take(out));
        } else if (*en_cmd) {
            check(bc_enumerate_json(tag.c_str(), en, &out));
            for (const auto& g : nlohmann::json::parse(take(out))) std::cout << g.get<std::string>() << "\n";
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitUsage;
    }
    return 0;
}
