#ifndef MEDIANFORGE_PIPELINE_HPP
#define MEDIANFORGE_PIPELINE_HPP

#include "medianforge/cuts.hpp"
#include "medianforge/dual.hpp"
#include "medianforge/geometry.hpp"
#include "medianforge/graph.hpp"
#include "medianforge/io.hpp"
#include "medianforge/treeify.hpp"

#include <string>
#include <vector>

namespace medianforge {

struct PipelineOptions {
    std::uint32_t radius = 1;
    EdgeOrder order = EdgeOrder::Input;
    CutOptions cuts;
    DualOptions dual;
};

struct PipelineResult {
    FiniteGraph input;
    Pocset pocset;
    DualMedianGraph dual;
    FiniteGraph host; // dual graph in the requested edge order
    ColourClasses colouring;
    SpanningTree tree;
};

namespace detail {
template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.code(), std::string(name) + ": " + e.detail());
    }
}
} // namespace detail

/// cuts -> dual -> median check -> hyperplanes -> colouring -> tree -> verify.
inline PipelineResult run_pipeline(const FiniteGraph& g, const PipelineOptions& opts) {
    PipelineResult r;
    r.input = g;
    r.pocset = detail::stage("enumerate_cuts", [&] { return enumerate_cuts(g, opts.radius, opts.cuts); });
    r.dual = detail::stage("build_dual", [&] { return build_dual(r.pocset, opts.dual); });
    r.host = r.dual.graph.with_edge_order(opts.order);
    detail::stage("check_median", [&] {
        const auto& cert = check_median(r.host);
        require(cert.verdict, Errc::InvariantViolation, "dual graph is not median");
        return 0;
    });
    r.colouring = detail::stage("greedy_colouring", [&] { return greedy_colouring(hyperplane_intersection_graph(r.host)); });
    r.tree = detail::stage("canonical_spanning_tree", [&] { return canonical_spanning_tree(r.host, r.colouring); });
    detail::stage("verify_spanning_tree", [&] {
        auto report = verify_spanning_tree(r.host, r.tree);
        require(report.ok(), Errc::InvariantViolation, report.ok() ? "" : report.violations.front());
        return 0;
    });
    return r;
}

inline Json to_json(const PipelineResult& r) {
    Json stats{{"input_vertices", r.input.order()},
               {"input_edges", r.input.size()},
               {"pocset_pairs", r.pocset.pair_count()},
               {"dual_vertices", r.host.order()},
               {"dual_edges", r.host.size()},
               {"hyperplanes", r.colouring.pairs.size()},
               {"colours", r.colouring.colour_count()},
               {"tree_edges", r.tree.edges.size()}};
    return {{"pocset", to_json(r.pocset)},
            {"dual", to_json(r.dual)},
            {"hyperplanes", to_json(r.host, r.colouring.pairs)},
            {"colouring", to_json(r.colouring)},
            {"tree", to_json(r.tree)},
            {"stats", std::move(stats)}};
}

} // namespace medianforge

#endif
