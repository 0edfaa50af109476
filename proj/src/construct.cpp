#include "boxicity/construct.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace boxicity {

namespace {

std::vector<bool> membership(Vertex n, std::span<const Vertex> cls) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (Vertex v : cls) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("class vertex " + std::to_string(v) + " out of range for n=" +
                                        std::to_string(n));
        if (in[v]) throw std::invalid_argument("class lists vertex " + std::to_string(v) + " twice");
        in[v] = true;
    }
    return in;
}

}  // namespace

Graph augmented_graph(const Graph& g, std::span<const Vertex> cls) {
    auto in = membership(g.order(), cls);
    EdgeSet edges = g.edges();
    for (Vertex u = 0; u < g.order(); ++u) {
        if (in[u]) continue;
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!in[v]) edges.emplace_back(u, v);
    }
    return Graph::from_edges(g.order(), edges);
}

ClassRealizations class_realizations(const Graph& g, std::span<const Vertex> labeled) {
    const Vertex n = g.order();
    membership(n, labeled);
    const auto h = static_cast<Coord>(labeled.size());

    std::vector<Coord> label(static_cast<std::size_t>(n), 0);
    for (std::size_t j = 0; j < labeled.size(); ++j) label[labeled[j]] = static_cast<Coord>(j) + 1;

    // owner[w]: the unique class neighbor of an outside vertex w, or -1.
    std::vector<Vertex> owner(static_cast<std::size_t>(n), -1);
    for (Vertex z : labeled) {
        for (Vertex w : g.neighbors(z)) {
            if (label[w] != 0)
                throw std::invalid_argument("class vertices " + std::to_string(std::min(z, w)) + " and " +
                                            std::to_string(std::max(z, w)) + " are adjacent");
            if (owner[w] >= 0)
                throw std::invalid_argument("vertex " + std::to_string(w) + " has two neighbors " +
                                            std::to_string(owner[w]) + " and " + std::to_string(z) +
                                            " in the class");
            owner[w] = z;
        }
    }

    std::vector<Interval> fwd(static_cast<std::size_t>(n)), rev(static_cast<std::size_t>(n));
    for (Vertex w = 0; w < n; ++w) {
        if (label[w] != 0) {
            fwd[w] = {label[w], label[w]};
            rev[w] = {h - label[w] + 1, h - label[w] + 1};
        } else if (owner[w] >= 0) {
            const Coord z = label[owner[w]];
            fwd[w] = {0, z};
            rev[w] = {0, h - z + 1};
        } else {
            fwd[w] = {0, 0};
            rev[w] = {0, 0};
        }
    }
    return {IntervalRealization(std::move(fwd)), IntervalRealization(std::move(rev))};
}

Construction construct_box_representation(const Graph& g, const ConstructOptions& options) {
    VertexColoring coloring = greedy_color(square(g), options.order);
    auto classes = color_classes(coloring);
    const std::size_t k = classes.size();

    std::vector<ClassRealizations> pairs(k);
    auto build = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < k; i += step) pairs[i] = class_realizations(g, classes[i]);
    };
    const std::size_t workers =
        options.parallel ? std::min<std::size_t>(k, std::max(1u, std::thread::hardware_concurrency())) : 1;
    if (workers > 1) {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < workers; ++t)
                pool.emplace_back([&, t] {
                    try {
                        build(t, workers);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    } else {
        build(0, 1);
    }

    std::vector<IntervalRealization> dims;
    dims.reserve(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        dims.push_back(pairs[i].forward);
        // A single-vertex class has identical forward and reverse labelings.
        if (!(options.prune && classes[i].size() == 1)) dims.push_back(pairs[i].reverse);
    }

    Construction out;
    out.colors = static_cast<int>(k);
    out.raw_dimension = 2 * k;
    out.representation = BoxRepresentation(g.order(), std::move(dims));
    if (options.prune) out.representation = prune(out.representation);
    if (options.keep_trace) {
        ConstructionTrace trace{std::move(coloring), std::move(classes), {}, std::move(pairs)};
        trace.augmented.reserve(k);
        for (const auto& cls : trace.classes) trace.augmented.push_back(augmented_graph(g, cls));
        out.trace = std::move(trace);
    }
    return out;
}

bool pipeline_check(const Graph& g, const ConstructionTrace& trace) {
    const auto k = static_cast<std::size_t>(trace.coloring.num_colors());
    if (trace.classes.size() != k || trace.augmented.size() != k || trace.pairs.size() != k) return false;
    if (trace.coloring.size() != g.order()) return false;

    EdgeSet meet = complete_edge_set(g.order());
    for (std::size_t i = 0; i < k; ++i) {
        const Graph& gi = trace.augmented[i];
        const auto& [fwd, rev] = trace.pairs[i];
        if (gi.order() != g.order() || fwd.size() != g.order() || rev.size() != g.order()) return false;
        EdgeSet gi_edges = gi.edges();
        if (intersect(interval_edges(fwd), interval_edges(rev)) != gi_edges) return false;
        meet = intersect(meet, gi_edges);
    }
    return meet == g.edges();
}

}  // namespace boxicity
