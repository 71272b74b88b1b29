#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcolor/compactness.hpp"
#include "symcolor/corpus.hpp"
#include "symcolor/gadgets.hpp"
#include "symcolor/io.hpp"
#include "symcolor/kpw.hpp"
#include "symcolor/list_distinguishing.hpp"
#include "symcolor/recolor.hpp"
#include "symcolor/solver.hpp"
#include "symcolor/verify.hpp"

namespace symcolor::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2 };

namespace detail {

// Failure that maps straight onto an exit code.
struct Exit {
    int code;
    std::string message;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Exit{kUsage, "cannot read " + path};
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline Json read_json(const std::string& path) {
    try {
        return Json::parse(slurp(path));
    } catch (const Json::parse_error& e) {
        throw Exit{kUsage, path + ": " + e.what()};
    }
}

// JSON or DOT, told apart by the first non-blank character.
inline FiniteGraph read_graph(const std::string& path) {
    std::string text = slurp(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return graph_from_json(Json::parse(text));
        } catch (const Json::parse_error& e) {
            throw Exit{kUsage, path + ": " + e.what()};
        }
    }
    return graph_from_dot(text);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, sep);) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

inline Notion parse_notion(const std::string& s) {
    auto n = notion_from_string(s);
    if (!n) throw Exit{kUsage, "unknown notion '" + s + "'"};
    return *n;
}

inline GadgetKind parse_gadget(const std::string& s) {
    auto g = gadget_from_string(s);
    if (!g) throw Exit{kUsage, "unknown gadget '" + s + "' (expected g, g1, h1, g2 or h)"};
    return *g;
}

}  // namespace detail

// Runs one command line (without the program name). JSON goes to `out`,
// one-line diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact coloring parameters, symmetry breaking constructions and gadget graphs"};
    app.require_subcommand(1);

    std::string gadget, graph_path, coloring_path, lists_path, notion_name, param_name, rules = "brooks,vizing,kpw,odd";
    std::string remove_spec, trace_path, input_path, target = "dot";
    std::size_t blob = 2, horizon = 4, max_order = 6, dist_order = 6, palette = 0, lookahead = 0;
    std::optional<std::size_t> depth;
    std::uint64_t budget = SolverOptions{}.node_budget;
    bool dot = false, distinguishing = false;

    auto* gen = app.add_subcommand("gen", "Generate a gadget graph");
    gen->add_option("--gadget", gadget, "g, g1, h1, g2 or h")->required();
    gen->add_option("--blob", blob, "Blob size")->check(CLI::Range(2, 64));
    gen->add_option("--horizon", horizon, "Number of blobs, or tail length for h")->check(CLI::Range(1, 100000));
    gen->add_option("--depth", depth, "Truncation depth (default: whole bounded gadget)");
    gen->add_flag("--dot", dot, "Emit DOT instead of JSON");

    auto* compute = app.add_subcommand("compute", "Compute a coloring parameter exactly");
    compute->add_option("--graph", graph_path, "Graph file (JSON or DOT)")->required();
    compute->add_option("--param", param_name, "Parameter tag")->required();
    compute->add_option("--budget", budget, "Search node budget");

    auto* verify = app.add_subcommand("verify", "Verify a coloring");
    verify->add_option("--graph", graph_path, "Graph file")->required();
    verify->add_option("--coloring", coloring_path, "Coloring file")->required();
    verify->add_option("--notion", notion_name, "Structural notion");
    verify->add_flag("--distinguishing", distinguishing, "Also require distinguishing");
    verify->add_option("--lists", lists_path, "List assignment file");

    auto* algo = app.add_subcommand("algo", "Run a constructive algorithm");
    algo->require_subcommand(1);
    auto* kpw = algo->add_subcommand("kpw", "Total distinguishing coloring with ceil(sqrt(maxdeg)) colors");
    kpw->add_option("--graph", graph_path, "Graph file")->required();
    auto* listdist = algo->add_subcommand("listdist", "Proper distinguishing coloring from lists of size 2*maxdeg-1");
    listdist->add_option("--graph", graph_path, "Graph file")->required();
    listdist->add_option("--lists", lists_path, "List assignment file (default: identical lists 0..2*maxdeg-2)");
    listdist->add_option("--trace", trace_path, "Write the repair trace as JSON lines");
    auto* recolor = algo->add_subcommand("recolor", "Remove colors from the blobs of a gadget coloring");
    recolor->add_option("--graph", graph_path, "Gadget graph file")->required();
    recolor->add_option("--coloring", coloring_path, "Vertex coloring file")->required();
    recolor->add_option("--remove", remove_spec, "Comma separated colors to remove")->required();
    auto* extend = algo->add_subcommand("extend", "Layered coloring of a gadget truncation");
    extend->add_option("--gadget", gadget, "g, g1, h1, g2 or h")->required();
    extend->add_option("--blob", blob, "Blob size")->check(CLI::Range(2, 64));
    extend->add_option("--palette", palette, "Number of colors")->required();
    extend->add_option("--notion", notion_name, "proper-vertex, odd or total")->required();
    extend->add_option("--depth", depth, "Depth to color")->required();
    extend->add_option("--lookahead", lookahead, "Extra layers the coloring must extend to");

    auto* corpus = app.add_subcommand("corpus", "Check bound rules on all small connected graphs");
    corpus->add_option("--max-order", max_order, "Largest order")->check(CLI::Range(1, 7));
    corpus->add_option("--rules", rules, "Comma separated: brooks, vizing, kpw, odd");
    corpus->add_option("--distinguishing-max-order", dist_order, "Largest order for the kpw rule");

    auto* exporter = app.add_subcommand("export", "Convert a graph between JSON and DOT");
    exporter->add_option("--input", input_path, "Graph file")->required();
    exporter->add_option("--to", target, "dot or json")->check(CLI::IsMember({"dot", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*gen) {
            GadgetSpec spec{detail::parse_gadget(gadget), blob, horizon};
            FiniteGraph g = depth ? truncate(generate(spec), *depth) : realize(spec);
            if (dot) {
                out << to_dot(g);
            } else {
                out << to_json(g).dump(2) << "\n";
            }
            return kOk;
        }
        if (*compute) {
            auto p = parameter_from_string(param_name);
            if (!p) throw detail::Exit{kUsage, "unknown parameter '" + param_name + "'"};
            FiniteGraph g = detail::read_graph(graph_path);
            SolverOptions options;
            options.node_budget = budget;
            ParameterResult r = compute_parameter(g, *p, options);
            out << to_json(r).dump(2) << "\n";
            return r.value ? kOk : kInvalid;
        }
        if (*verify) {
            if (notion_name.empty() && !distinguishing && lists_path.empty()) {
                throw detail::Exit{kUsage, "verify needs --notion, --distinguishing or --lists"};
            }
            FiniteGraph g = detail::read_graph(graph_path);
            Coloring c = coloring_from_json(detail::read_json(coloring_path), g);
            VerificationReport report;
            if (!notion_name.empty()) report.append(verify_structural(g, c, detail::parse_notion(notion_name)));
            if (distinguishing) report.append(verify_distinguishing(g, c, enumerate_automorphisms(g)));
            if (!lists_path.empty()) {
                report.append(verify_list_containment(c, lists_from_json(detail::read_json(lists_path), g.order())));
            }
            out << to_json(report).dump(2) << "\n";
            return report.valid() ? kOk : kInvalid;
        }
        if (*kpw) {
            out << to_json(kpw_total_distinguishing(detail::read_graph(graph_path))).dump(2) << "\n";
            return kOk;
        }
        if (*listdist) {
            FiniteGraph g = detail::read_graph(graph_path);
            ListAssignment lists;
            if (lists_path.empty()) {
                std::vector<ColorId> base;
                for (ColorId c = 0; c + 1 < 2 * max_degree(g); ++c) base.push_back(c);
                lists = ListAssignment::identical(g.order(), base);
            } else {
                lists = lists_from_json(detail::read_json(lists_path), g.order());
            }
            ListDistinguishingResult r = list_distinguishing(g, lists);
            if (!trace_path.empty()) {
                std::ofstream t(trace_path);
                if (!t) throw detail::Exit{kUsage, "cannot write " + trace_path};
                t << trace_to_json_lines(r.trace);
            }
            out << to_json(r).dump(2) << "\n";
            return kOk;
        }
        if (*recolor) {
            FiniteGraph g = detail::read_graph(graph_path);
            Coloring f = coloring_from_json(detail::read_json(coloring_path), g);
            std::set<ColorId> removed;
            for (const std::string& s : detail::split(remove_spec, ',')) {
                try {
                    removed.insert(static_cast<ColorId>(std::stoul(s)));
                } catch (const std::exception&) {
                    throw detail::Exit{kUsage, "bad color '" + s + "' in --remove"};
                }
            }
            out << to_json(color_elimination_recolor(g, f, removed, blob_partition(g))).dump(2) << "\n";
            return kOk;
        }
        if (*extend) {
            GadgetSpec spec{detail::parse_gadget(gadget), blob, kUnbounded};
            ExtensionResult r =
                compactness_extend(generate(spec), palette, detail::parse_notion(notion_name), *depth, lookahead);
            out << to_json(r).dump(2) << "\n";
            return kOk;
        }
        if (*corpus) {
            std::vector<BoundRule> selected;
            for (const std::string& s : detail::split(rules, ',')) {
                auto r = bound_rule_from_string(s);
                if (!r) throw detail::Exit{kUsage, "unknown rule '" + s + "'"};
                selected.push_back(*r);
            }
            CorpusOptions options;
            options.distinguishing_max_order = dist_order;
            BoundReport report = bound_check_corpus(connected_graphs(max_order), selected, options);
            out << to_json(report).dump(2) << "\n";
            return report.count(BoundStatus::violation) == 0 ? kOk : kInvalid;
        }
        if (*exporter) {
            FiniteGraph g = detail::read_graph(input_path);
            if (target == "dot") {
                out << to_dot(g);
            } else {
                out << to_json(g).dump(2) << "\n";
            }
            return kOk;
        }
    } catch (const detail::Exit& e) {
        err << e.message << "\n";
        return e.code;
    } catch (const RefutationError& e) {
        err << "refuted: " << e.what() << "\n";
        return kInvalid;
    } catch (const ObstructionError& e) {
        err << "obstruction: " << e.what() << "\n";
        return kInvalid;
    } catch (const UnsupportedStructureError& e) {
        err << "unsupported structure: " << e.what() << "\n";
        return kInvalid;
    } catch (const AlgorithmFailure& e) {
        err << "algorithm failure: " << e.what() << "\n";
        return kInvalid;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace symcolor::cli
