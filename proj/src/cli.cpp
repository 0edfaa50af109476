#include "boxicity/cli.hpp"

#include <chrono>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "boxicity/boxrep.hpp"
#include "boxicity/construct.hpp"
#include "boxicity/exact.hpp"
#include "boxicity/generators.hpp"
#include "boxicity/io.hpp"

namespace boxicity::cli {

namespace {

struct Options {
    std::string graph_path, rep_path, output, svg, order = "index", family;
    std::vector<long long> params;
    bool no_prune = false, trace = false, parallel = false;
    std::uint64_t seed = 0;
    int max_k = OracleBudget{}.max_k;
    int max_n = OracleBudget{}.max_n;
    std::uint64_t budget = OracleBudget{}.max_supergraphs;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text;
    else
        write_file(path, text);
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    Graph g = parse_graph(read_file(o.graph_path));
    ConstructOptions opts;
    opts.order = o.order == "smallest-last" ? ColoringOrder::smallest_last : ColoringOrder::index;
    opts.prune = !o.no_prune;
    opts.keep_trace = o.trace;
    opts.parallel = o.parallel;
    Construction c = construct_box_representation(g, opts);
    VerifyReport check = verify(g, c.representation);

    RunReport r;
    r.n = g.order();
    r.m = static_cast<long long>(g.size());
    r.max_degree = static_cast<long long>(max_degree(g));
    r.colors = c.colors;
    r.raw_dimension = static_cast<long long>(c.raw_dimension);
    r.pruned_dimension = static_cast<long long>(c.representation.dimension());
    r.bound = 2 * r.max_degree * r.max_degree + 2;
    r.verified = check.ok;

    // Keep stdout clean for the representation when no output file is given.
    std::ostream& log = (o.output.empty() || o.output == "-") ? err : out;
    emit(o.output, format_representation(c.representation), out);
    if (!o.svg.empty()) write_file(o.svg, render_svg(c.representation));
    if (c.trace) {
        for (std::size_t i = 0; i < c.trace->classes.size(); ++i)
            log << "class " << i + 1 << ": " << c.trace->classes[i].size() << " vertices\n";
        log << "pipeline_check: " << (pipeline_check(g, *c.trace) ? "ok" : "FAILED") << "\n";
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log << format_report(r);
    if (!check.ok) {
        const Edge& e = check.mismatch->pair;
        err << "internal error: representation mismatch at pair " << e.u << " " << e.v << "\n";
        return kNegative;
    }
    return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
    Graph g = parse_graph(read_file(o.graph_path));
    BoxRepresentation b = parse_representation(read_file(o.rep_path));
    if (g.order() != b.order())
        throw parse_error(0, "graph has " + std::to_string(g.order()) + " vertices, representation has " +
                                 std::to_string(b.order()));
    VerifyReport r = verify(g, b);
    if (r.ok) {
        out << "ok: representation of dimension " << b.dimension() << " matches the graph\n";
        return kSuccess;
    }
    const Mismatch& m = *r.mismatch;
    out << "mismatch: pair " << m.pair.u << " " << m.pair.v << " is "
        << (m.in_graph ? "an edge of the graph but the boxes are disjoint"
                       : "not an edge of the graph but the boxes intersect")
        << "\n";
    out << "overlap per dimension:";
    for (bool ov : m.overlap_per_dim) out << (ov ? " 1" : " 0");
    out << "\n";
    return kNegative;
}

int cmd_exact(const Options& o, std::ostream& out) {
    Graph g = parse_graph(read_file(o.graph_path));
    OracleBudget budget;
    budget.max_k = o.max_k;
    budget.max_n = o.max_n;
    budget.max_supergraphs = o.budget;
    ExactResult r = exact_boxicity(g, budget);
    out << "boxicity " << r.boxicity << "\n";
    if (r.boxicity == 0) out << "note: complete graph; boxicity 0 by the empty-intersection convention\n";
    if (!o.output.empty()) write_file(o.output, format_representation(BoxRepresentation(g.order(), r.witness)));
    return kSuccess;
}

Graph generate(const Options& o) {
    auto need = [&](std::size_t count) {
        if (o.params.size() != count)
            throw std::invalid_argument("family '" + o.family + "' takes " + std::to_string(count) +
                                        " parameter(s), got " + std::to_string(o.params.size()));
    };
    auto vertex = [&](std::size_t i) {
        if (o.params[i] < 0 || o.params[i] > std::numeric_limits<Vertex>::max())
            throw std::invalid_argument("parameter " + std::to_string(o.params[i]) + " out of range");
        return static_cast<Vertex>(o.params[i]);
    };
    const std::string& f = o.family;
    if (f == "path") return need(1), path_graph(vertex(0));
    if (f == "cycle") return need(1), cycle_graph(vertex(0));
    if (f == "complete") return need(1), complete_graph(vertex(0));
    if (f == "edgeless") return need(1), edgeless_graph(vertex(0));
    if (f == "cocktail") return need(1), cocktail_party(vertex(0));
    if (f == "random") return need(2), random_bounded_degree(vertex(0), vertex(1), o.seed);
    if (f == "multipartite") {
        std::vector<Vertex> sizes;
        for (std::size_t i = 0; i < o.params.size(); ++i) sizes.push_back(vertex(i));
        return complete_multipartite(sizes);
    }
    throw std::invalid_argument("unknown family '" + f +
                                "' (path, cycle, complete, edgeless, cocktail, multipartite, random)");
}

}  // namespace

std::string format_report(const RunReport& r) {
    std::ostringstream s;
    s << "n: " << r.n << "\n"
      << "m: " << r.m << "\n"
      << "max_degree: " << r.max_degree << "\n"
      << "colors_on_square: " << r.colors << "\n"
      << "dimension_raw: " << r.raw_dimension << "\n"
      << "dimension: " << r.pruned_dimension << "\n"
      << "bound: " << r.bound << "\n"
      << "status: " << (r.verified ? "ok" : "FAILED") << "\n"
      << "seconds: " << r.seconds << "\n";
    if (r.pruned_dimension == 0)
        s << "note: dimension 0 means every pair of boxes meets (complete graph convention)\n";
    return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Box representations of bounded-degree graphs", "boxicity"};
    app.require_subcommand(1);
    Options o;

    auto* construct = app.add_subcommand("construct", "Build and verify a box representation");
    construct->add_option("graph", o.graph_path, "Edge list or DIMACS file")->required();
    construct->add_option("-o,--output", o.output, "Representation file (default stdout)");
    construct->add_option("--order", o.order, "Coloring order for the graph square")
        ->check(CLI::IsMember({"index", "smallest-last"}));
    construct->add_flag("--no-prune", o.no_prune, "Keep complete and duplicate dimensions");
    construct->add_flag("--trace", o.trace, "Keep and check the construction trace");
    construct->add_flag("--parallel", o.parallel, "Build color classes on worker threads");
    construct->add_option("--svg", o.svg, "Render dimension <= 2 representations to SVG");

    auto* verify_cmd = app.add_subcommand("verify", "Check a representation against a graph");
    verify_cmd->add_option("graph", o.graph_path)->required();
    verify_cmd->add_option("representation", o.rep_path)->required();

    auto* exact = app.add_subcommand("exact", "Exact boxicity of a small graph");
    exact->add_option("graph", o.graph_path)->required();
    exact->add_option("--max-k", o.max_k, "Deepest cover size to try")->check(CLI::PositiveNumber);
    exact->add_option("--max-n", o.max_n, "Vertex limit")->check(CLI::Range(1, 64));
    exact->add_option("--budget", o.budget, "Cap on candidate supergraphs examined");
    exact->add_option("-o,--output", o.output, "Witness representation file");

    auto* gen = app.add_subcommand("gen", "Generate a graph as a canonical edge list");
    gen->add_option("family", o.family, "path|cycle|complete|edgeless|cocktail|multipartite|random")
        ->required();
    gen->add_option("params", o.params, "Family parameters");
    gen->add_option("--seed", o.seed, "Seed for the random family");
    gen->add_option("-o,--output", o.output, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*construct) return cmd_construct(o, out, err);
        if (*verify_cmd) return cmd_verify(o, out);
        if (*exact) return cmd_exact(o, out);
        if (*gen) {
            emit(o.output, format_edge_list(generate(o)), out);
            return kSuccess;
        }
    } catch (const budget_exceeded& e) {
        out << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace boxicity::cli
