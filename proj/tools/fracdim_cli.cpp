#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracdim/catalog.hpp"
#include "fracdim/graph.hpp"
#include "fracdim/io.hpp"
#include "fracdim/products.hpp"
#include "fracdim/resolving.hpp"
#include "fracdim/theorems.hpp"

namespace {

using namespace fracdim;

// A graph argument is either a file path or a generator spec of the form
// gen:<family>:<p1>:<p2>... ; bare "<family>:<params>" is accepted where
// the context is unambiguous (the --gen flag).
Graph load_graph_spec(const std::string& spec, bool allow_bare_family = false) {
    std::string body;
    if (spec.rfind("gen:", 0) == 0) {
        body = spec.substr(4);
    } else if (allow_bare_family) {
        body = spec;
    } else {
        return read_edge_list_file(spec);
    }
    std::vector<std::string> parts;
    std::istringstream in(body);
    std::string token;
    while (std::getline(in, token, ':')) parts.push_back(token);
    if (parts.empty()) throw std::invalid_argument("empty generator spec");
    std::vector<int> params;
    for (size_t i = 1; i < parts.size(); ++i) {
        try {
            params.push_back(std::stoi(parts[i]));
        } catch (...) {
            throw std::invalid_argument("bad generator parameter '" + parts[i] + "'");
        }
    }
    return generate(parts[0], params);
}

Graph resolve_graph(const std::string& positional, const std::string& gen_flag) {
    if (!gen_flag.empty()) return load_graph_spec(gen_flag, true);
    if (positional.empty()) throw std::invalid_argument("no graph given (path or --gen)");
    return load_graph_spec(positional);
}

void emit_graph(const Graph& g, const std::string& out_path, const std::string& label_path) {
    if (out_path.empty()) {
        write_edge_list(std::cout, g);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        write_edge_list(out, g);
    }
    if (!label_path.empty()) {
        std::ofstream out(label_path);
        if (!out) throw std::invalid_argument("cannot open label file '" + label_path + "'");
        write_labels(out, g);
    }
}

void print_dim_result(const std::string& name, const DimResult& r, bool json) {
    if (json) {
        std::ostringstream weights;
        weights << "[";
        for (int v = 0; v < r.weights.size(); ++v) {
            if (v) weights << ",";
            weights << "\"" << to_frac_string(r.weights[v]) << "\"";
        }
        weights << "]";
        std::cout << "{\"" << name << "\":\"" << to_frac_string(r.value)
                  << "\",\"weights\":" << weights.str() << "}\n";
        return;
    }
    std::cout << to_display_string(r.value) << "\n";
    for (int v = 0; v < r.weights.size(); ++v) {
        if (r.weights[v] != 0) {
            std::cout << "  g(" << v << ") = " << to_frac_string(r.weights[v]) << "\n";
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"fractional metric dimension toolkit"};
    app.set_help_flag("--help", "print help");  // keep --h free for the H factor
    app.require_subcommand(1);

    std::string graph_arg, gen_flag, g_arg, h_arg, out_path, label_path, claim;
    bool json = false, all = false;
    int jobs = 1;

    auto add_graph_options = [&](CLI::App* cmd) {
        cmd->add_option("graph", graph_arg, "edge-list file or gen:<family>:<params>");
        cmd->add_option("--gen", gen_flag, "generator spec <family>:<params>");
    };

    auto* dimf_cmd = app.add_subcommand("dimf", "fractional metric dimension");
    add_graph_options(dimf_cmd);
    dimf_cmd->add_flag("--json", json);

    auto* lf_cmd = app.add_subcommand("lf", "locating parameter l_f");
    add_graph_options(lf_cmd);
    lf_cmd->add_flag("--json", json);

    auto* params_cmd = app.add_subcommand("params", "regular-graph parameters k, lambda, mu");
    add_graph_options(params_cmd);
    params_cmd->add_flag("--json", json);

    auto* twins_cmd = app.add_subcommand("twins", "twin classes and m1/m2/m3");
    add_graph_options(twins_cmd);
    twins_cmd->add_flag("--json", json);

    auto* comp_cmd = app.add_subcommand("complement", "complement graph");
    add_graph_options(comp_cmd);
    comp_cmd->add_option("--out", out_path, "output edge-list file (default stdout)");

    auto* gen_cmd = app.add_subcommand("gen", "emit a generated graph");
    gen_cmd->add_option("spec", graph_arg, "gen:<family>:<params> or <family>:<params>")
        ->required();
    gen_cmd->add_option("--out", out_path);

    auto* corona_cmd = app.add_subcommand("corona", "corona product of two graphs");
    corona_cmd->add_option("--g", g_arg)->required();
    corona_cmd->add_option("--h", h_arg)->required();
    corona_cmd->add_option("--out", out_path);
    corona_cmd->add_option("--labels", label_path, "sidecar label file");

    auto* lex_cmd = app.add_subcommand("lex", "lexicographic product of two graphs");
    lex_cmd->add_option("--g", g_arg)->required();
    lex_cmd->add_option("--h", h_arg)->required();
    lex_cmd->add_option("--out", out_path);
    lex_cmd->add_option("--labels", label_path);

    auto* verify_cmd = app.add_subcommand("verify", "verify a theorem claim or the full suite");
    verify_cmd->add_option("claim", claim, "claim name (see --list via bad name)");
    verify_cmd->add_option("--g", g_arg, "G factor (file or gen spec)");
    verify_cmd->add_option("--h", h_arg, "H factor (file or gen spec)");
    verify_cmd->add_flag("--all", all, "run the full built-in verification suite");
    verify_cmd->add_flag("--json", json);
    verify_cmd->add_option("--jobs", jobs, "concurrent verification cases")->default_val(1);

    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in graph catalogs");

    CLI11_PARSE(app, argc, argv);

    if (dimf_cmd->parsed() || lf_cmd->parsed()) {
        Graph g = resolve_graph(graph_arg, gen_flag);
        bool want_dim = dimf_cmd->parsed();
        print_dim_result(want_dim ? "dim_f" : "l_f", want_dim ? dim_f(g) : l_f(g), json);
        return 0;
    }
    if (params_cmd->parsed()) {
        Graph g = resolve_graph(graph_arg, gen_flag);
        RegularParams p = regular_params(g);
        if (json) {
            std::cout << "{\"k\":" << p.k << ",\"lambda\":" << p.lambda << ",\"mu\":" << p.mu
                      << ",\"conventions_applied\":" << (p.conventions_applied ? "true" : "false")
                      << "}\n";
        } else {
            std::cout << "k=" << p.k << " lambda=" << p.lambda << " mu=" << p.mu
                      << (p.conventions_applied ? " (conventions applied)" : "") << "\n";
        }
        return 0;
    }
    if (twins_cmd->parsed()) {
        Graph g = resolve_graph(graph_arg, gen_flag);
        TwinDecomposition t = twin_decomposition(g);
        auto type_name = [](TwinType ty) {
            switch (ty) {
                case TwinType::kType1: return "type1";
                case TwinType::kType2: return "type2";
                case TwinType::kType3: return "type3";
            }
            return "?";
        };
        if (json) {
            std::ostringstream out;
            out << "{\"classes\":[";
            for (size_t i = 0; i < t.classes.size(); ++i) {
                if (i) out << ",";
                out << "{\"type\":\"" << type_name(t.class_type[i]) << "\",\"vertices\":[";
                for (size_t j = 0; j < t.classes[i].size(); ++j) {
                    if (j) out << ",";
                    out << t.classes[i][j];
                }
                out << "]}";
            }
            out << "],\"m1\":" << t.m1 << ",\"m2\":" << t.m2 << ",\"m3\":" << t.m3 << "}";
            std::cout << out.str() << "\n";
        } else {
            for (size_t i = 0; i < t.classes.size(); ++i) {
                std::cout << type_name(t.class_type[i]) << ": {";
                for (size_t j = 0; j < t.classes[i].size(); ++j) {
                    if (j) std::cout << ",";
                    std::cout << t.classes[i][j];
                }
                std::cout << "}; ";
            }
            std::cout << "m=(" << t.m1 << "," << t.m2 << "," << t.m3 << ")\n";
        }
        return 0;
    }
    if (comp_cmd->parsed()) {
        emit_graph(complement(resolve_graph(graph_arg, gen_flag)), out_path, "");
        return 0;
    }
    if (gen_cmd->parsed()) {
        emit_graph(load_graph_spec(graph_arg, true), out_path, "");
        return 0;
    }
    if (corona_cmd->parsed() || lex_cmd->parsed()) {
        Graph g = load_graph_spec(g_arg);
        Graph h = load_graph_spec(h_arg);
        ProductGraph p = corona_cmd->parsed() ? corona(g, h) : lexicographic(g, h);
        emit_graph(p.graph(), out_path, label_path);
        return 0;
    }
    if (verify_cmd->parsed()) {
        std::vector<VerificationReport> reports;
        if (all) {
            reports = run_suite(build_full_suite(), jobs);
        } else {
            if (claim.empty()) throw std::invalid_argument("verify needs a claim name or --all");
            std::optional<Graph> g, h;
            if (!g_arg.empty()) g = load_graph_spec(g_arg);
            if (!h_arg.empty()) h = load_graph_spec(h_arg);
            reports.push_back(verify(claim, g ? &*g : nullptr, h ? &*h : nullptr));
        }
        bool ok = true;
        for (const auto& r : reports) ok = ok && r.passed();
        if (json) {
            std::cout << reports_to_json(reports) << "\n";
        } else {
            for (const auto& r : reports) {
                std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.claim
                          << " G=" << r.g_desc << " H=" << r.h_desc << " lhs="
                          << to_frac_string(r.lhs) << " rhs=" << to_frac_string(r.rhs)
                          << " verdict=" << (r.error ? "ERROR" : verdict_name(r.verdict))
                          << " (" << r.notes << ")\n";
            }
            std::cout << reports.size() << " case(s), " << (ok ? "all passed" : "FAILURES")
                      << "\n";
        }
        return ok ? 0 : 2;
    }
    if (catalog_cmd->parsed()) {
        std::cout << "# G catalog: connected graphs on 2..5 vertices\n";
        for (const Graph& g : g_catalog()) std::cout << describe_graph(g) << "\n";
        std::cout << "# H catalog: all graphs on 2..4 vertices\n";
        for (const Graph& h : h_catalog()) std::cout << describe_graph(h) << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
