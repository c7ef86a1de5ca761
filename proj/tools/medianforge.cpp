#include "medianforge/medianforge.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace mf = medianforge;

namespace {

struct RunConfig {
    std::string file;
    std::string gen;
    std::optional<std::uint32_t> truncate;
    std::optional<std::uint32_t> radius;
    std::string order = "input";
    std::string view = "graph";
    std::string json_path;
    std::string dot_path;
    std::uint64_t budget_subsets = 1'000'000;
    std::uint64_t budget_orientations = 100'000;
};

int exit_code(mf::Errc code) {
    if (code == mf::Errc::BudgetExceeded) return 3;
    if (mf::is_internal(code)) return 4;
    return 2;
}

struct Input {
    std::string label;
    mf::FiniteGraph graph;
    std::optional<mf::BallTruncation> truncation;
};

Input load(const RunConfig& cfg) {
    const bool has_file = !cfg.file.empty(), has_gen = !cfg.gen.empty();
    mf::require(has_file != has_gen, mf::Errc::BadParams, "give exactly one of an input file or --gen");
    if (has_file) return {cfg.file, mf::load_graph(cfg.file), std::nullopt};
    mf::require(cfg.truncate.has_value(), mf::Errc::BadParams, "--gen needs --truncate");
    auto t = mf::truncate_ball(cfg.gen, *cfg.truncate);
    auto label = cfg.gen + "@" + std::to_string(*cfg.truncate);
    auto g = t.graph;
    return {label, g, std::move(t)};
}

std::uint32_t radius(const RunConfig& cfg) {
    mf::require(cfg.radius.has_value(), mf::Errc::BadParams, "--radius is required");
    return *cfg.radius;
}

mf::EdgeOrder edge_order(const RunConfig& cfg) {
    return cfg.order == "lex" ? mf::EdgeOrder::Lex : mf::EdgeOrder::Input;
}

void emit(const RunConfig& cfg, const std::string& command, const Input& in, mf::Json payload,
          const std::string& dot) {
    mf::Json doc{{"schema", mf::schema_version}, {"command", command}, {"input", in.label}};
    for (auto& [k, v] : payload.items()) doc[k] = v;
    const auto text = mf::dump(doc);
    if (cfg.json_path.empty())
        std::cout << text;
    else
        mf::write_file(cfg.json_path, text);
    if (!cfg.dot_path.empty()) mf::write_file(cfg.dot_path, dot);
}

void run(const std::string& command, const RunConfig& cfg) {
    const auto in = load(cfg);
    const auto g = in.graph.with_edge_order(edge_order(cfg));
    const mf::CutOptions cut_opts{cfg.budget_subsets, mf::CutStrategy::Auto};
    const mf::DualOptions dual_opts{cfg.budget_orientations};

    if (command == "cuts") {
        auto p = mf::enumerate_cuts(g, radius(cfg), cut_opts);
        emit(cfg, command, in, {{"radius", radius(cfg)}, {"graph", mf::to_json(g)}, {"pocset", mf::to_json(p)}},
             mf::to_dot(g));
    } else if (command == "pipeline") {
        mf::PipelineOptions opts{radius(cfg), edge_order(cfg), cut_opts, dual_opts};
        auto r = mf::run_pipeline(g, opts);
        auto payload = mf::to_json(r);
        payload["radius"] = radius(cfg);
        emit(cfg, command, in, std::move(payload), mf::to_dot(r.tree));
    } else if (command == "check-median") {
        emit(cfg, command, in, {{"certificate", mf::to_json(g, mf::check_median(g))}}, mf::to_dot(g));
    } else if (command == "hyperplanes") {
        auto hps = mf::hyperplanes(g);
        emit(cfg, command, in, {{"hyperplanes", mf::to_json(g, hps)}}, mf::to_dot(g, hps));
    } else if (command == "tree") {
        auto colouring = mf::greedy_colouring(mf::hyperplane_intersection_graph(g));
        auto t = mf::canonical_spanning_tree(g, colouring);
        auto report = mf::verify_spanning_tree(g, t);
        mf::require(report.ok(), mf::Errc::InvariantViolation, report.ok() ? "" : report.violations.front());
        emit(cfg, command, in,
             {{"hyperplanes", mf::to_json(g, colouring.pairs)},
              {"colouring", mf::to_json(colouring)},
              {"tree", mf::to_json(t)}},
             mf::to_dot(t));
    } else if (command == "roundtrip") {
        auto r = mf::roundtrip(g, dual_opts);
        mf::Json image = mf::Json::object();
        for (mf::Vertex v = 0; v < g.order(); ++v) image[g.name(v)] = r.dual.graph.name(r.image[v]);
        emit(cfg, command, in, {{"pocset", mf::to_json(r.pocset)}, {"dual", mf::to_json(r.dual)}, {"image", image}},
             mf::to_dot(r.dual));
    } else if (command == "density") {
        auto p = mf::enumerate_cuts(g, radius(cfg), cut_opts);
        emit(cfg, command, in,
             {{"radius", radius(cfg)}, {"pairs", p.pair_count()}, {"density", mf::to_json(mf::density_criterion(p))}},
             mf::to_dot(g));
    } else if (command == "ends") {
        mf::require(in.truncation.has_value(), mf::Errc::BadParams, "ends needs --gen and --truncate");
        const auto& t = *in.truncation;
        mf::Json estimates = mf::Json::array();
        for (std::uint32_t r = 0; r < t.radius; ++r) {
            if (cfg.radius && *cfg.radius != r) continue;
            estimates.push_back({{"r", r}, {"count", mf::end_estimate(t, r)}});
        }
        if (cfg.radius) mf::require(*cfg.radius < t.radius, mf::Errc::RadiusOrder, "end estimate needs r < R");
        mf::Json ray = mf::Json::array();
        if (t.radius > 0)
            for (auto v : mf::ray_prefix(t, t.graph.all_vertices())) ray.push_back(t.graph.name(v));
        emit(cfg, command, in,
             {{"generator", t.spec},
              {"R", t.radius},
              {"vertices", t.graph.order()},
              {"frontier", t.graph.names_of(t.frontier)},
              {"end_estimates", std::move(estimates)},
              {"ray_prefix", std::move(ray)}},
             mf::to_dot(t.graph));
    } else if (command == "dot") {
        std::string text;
        if (cfg.view == "graph") {
            text = mf::to_dot(g);
        } else if (cfg.view == "hyperplanes") {
            text = mf::to_dot(g, mf::hyperplanes(g));
        } else if (cfg.view == "tree") {
            text = mf::to_dot(mf::canonical_spanning_tree(g));
        } else {
            text = mf::to_dot(mf::build_dual(mf::enumerate_cuts(g, radius(cfg), cut_opts), dual_opts));
        }
        if (cfg.dot_path.empty())
            std::cout << text;
        else
            mf::write_file(cfg.dot_path, text);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"medianforge: cut pocsets, dual median graphs and canonical spanning trees"};
    app.require_subcommand(1);
    RunConfig cfg;

    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"cuts", "enumerate connected cuts with boundary diameter <= radius"},
        {"pipeline", "cuts, dual median graph, hyperplanes, colouring and spanning tree"},
        {"check-median", "exhaustive median-triple check"},
        {"hyperplanes", "hyperplanes of a median graph"},
        {"tree", "canonical spanning tree of a median graph"},
        {"roundtrip", "rebuild a median graph from its convex half-spaces"},
        {"density", "block sizes and successor counts of the cut pocset"},
        {"ends", "end estimates and a ray prefix of a generator truncation"},
        {"dot", "DOT rendering of the graph, hyperplanes, tree or dual"},
    };
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("input", cfg.file, "edge-list file");
        sub->add_option("--gen", cfg.gen, "generator spec, e.g. ladder or regular_tree:3");
        sub->add_option("--truncate", cfg.truncate, "ball radius for --gen");
        sub->add_option("--radius", cfg.radius, "boundary diameter bound");
        sub->add_option("--order", cfg.order, "edge order for tie-breaks")->check(CLI::IsMember({"input", "lex"}));
        sub->add_option("--json", cfg.json_path, "write JSON here instead of stdout");
        sub->add_option("--dot", cfg.dot_path, "also write DOT here");
        sub->add_option("--budget-subsets", cfg.budget_subsets, "candidate subset budget");
        sub->add_option("--budget-orientations", cfg.budget_orientations, "orientation budget");
        if (std::string(c.name) == "dot")
            sub->add_option("--view", cfg.view, "graph, hyperplanes, tree or dual")
                ->check(CLI::IsMember({"graph", "hyperplanes", "tree", "dual"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const auto rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        run(app.get_subcommands().front()->get_name(), cfg);
    } catch (const mf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
