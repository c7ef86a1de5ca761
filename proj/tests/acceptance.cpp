// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "medianforge/medianforge.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <sys/wait.h>

using namespace medianforge;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

struct CutCase {
    std::string name;
    const corpus::Entry* entry;
    std::uint32_t radius;
    Pocset pocset;
};

const std::vector<corpus::Entry>& entries() {
    static const auto all = corpus::all();
    return all;
}

const std::vector<CutCase>& cut_cases() {
    static const auto cases = [] {
        std::vector<CutCase> out;
        for (const auto& e : entries())
            for (auto r : e.radii)
                out.push_back({e.name + " R=" + std::to_string(r), &e, r, enumerate_cuts(e.graph, r)});
        return out;
    }();
    return cases;
}

const std::vector<DualMedianGraph>& duals() {
    static const auto out = [] {
        std::vector<DualMedianGraph> d;
        for (const auto& c : cut_cases()) d.push_back(build_dual(c.pocset));
        return d;
    }();
    return out;
}

bool within_median_check(const FiniteGraph& g) { return g.size() + 1 == g.order() || g.order() <= median_check_limit; }

// 1
Outcome dual_exactness() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < cut_cases().size(); ++i) {
        const auto& c = cut_cases()[i];
        if (c.pocset.pair_count() > 16) continue;
        std::vector<oracle::Set> sides;
        for (const auto& s : c.pocset.sides()) sides.push_back(oracle::to_set(s));
        auto expected = oracle::orientations(sides);
        std::set<std::vector<bool>> got;
        for (const auto& u : duals()[i].vertices) {
            std::vector<bool> chosen(c.pocset.size());
            for (std::size_t m = 0; m < c.pocset.size(); ++m) chosen[m] = u.contains(m);
            got.insert(chosen);
        }
        if (got != expected || got.size() != duals()[i].vertices.size())
            o.fail(c.name + ": " + std::to_string(got.size()) + " vs " + std::to_string(expected.size()));
        ++checked;
    }
    if (o.pass) o.detail = std::to_string(checked) + " pocsets";
    return o;
}

// 2
Outcome median_axiom() {
    Outcome o;
    for (std::size_t i = 0; i < cut_cases().size(); ++i)
        if (!check_median(duals()[i].graph).verdict) o.fail(cut_cases()[i].name + " dual is not median");
    auto c6 = corpus::load("c6");
    const auto& cert = check_median(c6);
    std::vector<std::string> triple;
    if (cert.counterexample)
        for (auto v : *cert.counterexample) triple.push_back(c6.name(v));
    if (cert.verdict || triple != std::vector<std::string>{"v0", "v2", "v4"}) o.fail("C6 counterexample differs");
    if (o.pass) o.detail = std::to_string(cut_cases().size()) + " duals median; C6 fails at (v0,v2,v4)";
    return o;
}

// 3
Outcome distance_formula() {
    Outcome o;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < cut_cases().size(); ++i) {
        const auto& d = duals()[i];
        const auto n = static_cast<Vertex>(d.graph.order());
        for (Vertex u = 0; u < n && o.pass; ++u)
            for (Vertex v = u; v < n; ++v, ++pairs)
                if (dual_distance(d.vertices[u], d.vertices[v]) != d.graph.distance(u, v)) {
                    o.fail(cut_cases()[i].name + ": distance mismatch");
                    break;
                }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " orientation pairs";
    return o;
}

// 4
Outcome tree_cases() {
    Outcome o;
    std::size_t trees = 0;
    for (const auto& e : entries()) {
        if (!e.tree) continue;
        ++trees;
        auto p = tree_edge_cuts(e.graph);
        auto d = build_dual(p);
        std::vector<Vertex> image;
        for (Vertex x = 0; x < e.graph.order(); ++x) {
            auto idx = d.find(principal_orientation(p, x));
            image.push_back(idx ? static_cast<Vertex>(*idx) : static_cast<Vertex>(-1));
        }
        if (!is_isomorphism(e.graph, d.graph, image)) o.fail(e.name + ": dual not isomorphic via principal map");
        if (d.graph.size() + 1 != d.graph.order() || !d.graph.is_connected(d.graph.all_vertices()))
            o.fail(e.name + ": dual not a tree");
    }
    if (o.pass) o.detail = std::to_string(trees) + " trees";
    return o;
}

// 5
Outcome roundtrips() {
    Outcome o;
    std::size_t done = 0;
    std::vector<std::string> skipped;
    for (const auto& e : entries()) {
        if (!e.median) continue;
        if (!within_median_check(e.graph)) {
            skipped.push_back(e.name);
            continue;
        }
        auto r = roundtrip(e.graph);
        if (!is_isomorphism(e.graph, r.dual.graph, r.image)) o.fail(e.name + ": principal map not an isomorphism");
        ++done;
    }
    if (o.pass) {
        o.detail = std::to_string(done) + " median graphs";
        for (const auto& s : skipped) o.detail += "; " + s + " skipped (over median check limit)";
    }
    return o;
}

// 6
Outcome spanning_trees() {
    Outcome o;
    std::size_t done = 0;
    std::vector<std::string> skipped;
    for (const auto& e : entries()) {
        if (!e.median) continue;
        if (!within_median_check(e.graph)) {
            skipped.push_back(e.name);
            continue;
        }
        auto t = canonical_spanning_tree(e.graph);
        auto report = verify_spanning_tree(e.graph, t);
        if (!report.ok()) o.fail(e.name + ": " + report.violations.front());
        ++done;
    }
    auto c4 = canonical_spanning_tree(corpus::load("c4"));
    if (c4.edges.size() != 3) o.fail("C4 tree has " + std::to_string(c4.edges.size()) + " edges");
    auto q3 = canonical_spanning_tree(corpus::load("q3"));
    if (q3.edges.size() != 7 || q3.stage_sizes() != std::vector<std::size_t>{4, 2, 1})
        o.fail("Q3 tree stages differ");
    if (o.pass) {
        o.detail = std::to_string(done) + " median graphs; C4 3 edges; Q3 stages 4/2/1";
        for (const auto& s : skipped) o.detail += "; " + s + " skipped (over median check limit)";
    }
    return o;
}

// 7
Outcome separation_counting() {
    Outcome o;
    std::mt19937 rng(2024);
    std::size_t graphs = 0;
    for (const auto& e : entries()) {
        if (!e.median || !within_median_check(e.graph)) continue;
        const auto& g = e.graph;
        auto halfspaces = convex_halfspaces(g);
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.order() - 1));
        std::uniform_int_distribution<int> count(1, 3);
        int sampled = 0;
        for (int attempt = 0; attempt < 100000 && sampled < 100; ++attempt) {
            auto a = g.empty_set(), b = g.empty_set();
            for (int k = count(rng); k > 0; --k) a.insert(pick(rng));
            for (int k = count(rng); k > 0; --k) b.insert(pick(rng));
            a = convex_hull(g, a);
            b = convex_hull(g, b);
            if (a.intersects(b)) continue;
            std::size_t separating = 0;
            for (std::size_t i = 1; i + 1 < halfspaces.size(); ++i)
                if (a.is_subset_of(halfspaces.side(i)) && !halfspaces.side(i).intersects(b)) ++separating;
            if (separating != set_distance(g, a, b) || separating_count(g, a, b).count != separating)
                o.fail(e.name + ": separating count differs from d(A,B)");
            ++sampled;
        }
        if (sampled < 100) o.fail(e.name + ": only " + std::to_string(sampled) + " disjoint pairs sampled");
        ++graphs;
    }
    if (o.pass) o.detail = std::to_string(graphs) + " graphs x 100 pairs";
    return o;
}

// 8
Outcome projection() {
    Outcome o;
    std::size_t cases = 0, triples = 0;
    std::mt19937 rng(99);
    for (const char* name : {"q3", "c4", "grid3x3"}) {
        auto g = corpus::load(name);
        auto og = oracle::from(g);
        const auto n = static_cast<Vertex>(g.order());
        std::vector<VertexSet> subsets;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a; b < n; ++b)
                for (Vertex c = b; c < n; ++c) {
                    auto s = g.empty_set();
                    s.insert(a);
                    s.insert(b);
                    s.insert(c);
                    if (std::find(subsets.begin(), subsets.end(), s) == subsets.end()) subsets.push_back(s);
                }
        std::uniform_int_distribution<Vertex> pick(0, n - 1);
        for (const auto& a : subsets) {
            std::vector<Vertex> proj(n);
            for (Vertex x = 0; x < n; ++x, ++cases) {
                proj[x] = project(g, a, x);
                if (static_cast<int>(proj[x]) != oracle::gate(og, oracle::to_set(a), x))
                    o.fail(std::string(name) + ": projection differs from oracle");
            }
            for (int t = 0; t < 20; ++t, ++triples) {
                auto x = pick(rng), y = pick(rng), z = pick(rng);
                if (proj[median(g, x, y, z)] != median(g, proj[x], proj[y], proj[z]))
                    o.fail(std::string(name) + ": projection is not a median homomorphism");
            }
        }
    }
    if (o.pass) o.detail = std::to_string(cases) + " (A, x) cases; " + std::to_string(triples) + " triples";
    return o;
}

// 9
Outcome finite_hyperplanes() {
    Outcome o;
    std::size_t total = 0, worst_slack = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < cut_cases().size(); ++i) {
        const auto& p = cut_cases()[i].pocset;
        const auto& d = duals()[i];
        for (const auto& hp : hyperplanes(d.graph)) {
            const auto& first = d.graph.edges()[hp.edges.front()];
            auto h = edge_flip(d, first.u, first.v);
            auto pair_of = [&](std::size_t m) { return std::min(m, p.complement(m)); };
            const auto pair = pair_of(h);
            for (auto ei : hp.edges) {
                const auto& e = d.graph.edges()[ei];
                auto f = edge_flip(d, e.u, e.v);
                if (pair_of(f) != pair)
                    o.fail(cut_cases()[i].name + ": hyperplane mixes complement pairs");
            }
            auto bound = 1 + non_nested_neighbors(p, p.member(h)).size();
            if (hp.edges.size() > bound)
                o.fail(cut_cases()[i].name + ": hyperplane with " + std::to_string(hp.edges.size()) +
                       " edges exceeds " + std::to_string(bound));
            else
                worst_slack = std::min(worst_slack, bound - hp.edges.size());
            ++total;
        }
    }
    if (o.pass) o.detail = std::to_string(total) + " hyperplanes; least slack " + std::to_string(worst_slack);
    return o;
}

// 10
Outcome toolkit() {
    Outcome o;
    std::mt19937 rng(5);
    for (const auto& e : entries()) {
        const auto& g = e.graph;
        std::bernoulli_distribution coin(0.7);
        std::uniform_int_distribution<std::uint32_t> radius(0, 3);
        for (int trial = 0; trial < 100; ++trial) {
            auto a = g.empty_set();
            for (Vertex v = 0; v < g.order(); ++v)
                if (coin(rng)) a.insert(v);
            auto d = radius(rng);
            auto s = shrink(g, a, d);
            if (!s.empty() && !ball(g, s, d).is_subset_of(a)) o.fail(e.name + ": B_D(shrink(A, D)) leaves A");
        }
    }
    std::size_t pulled = 0;
    for (const auto& q : {ladder_to_line(8), decorated_tree_to_tree(3, 4, 8)}) {
        auto cuts = tree_edge_cuts(q.target.graph);
        for (std::size_t i = 1; i + 1 < cuts.size(); ++i, ++pulled) {
            auto r = pullback_cut(q, cuts.side(i));
            if (r.image_boundary_diameter > r.boundary_diameter + 2 * q.stretch) o.fail(q.name + ": pullback bound");
        }
    }
    struct Expect {
        const char* spec;
        std::uint32_t r;
        std::size_t ends;
    };
    for (const auto& x : {Expect{"line", 2, 2}, Expect{"ladder", 2, 2}, Expect{"grid2d", 2, 1},
                          Expect{"regular_tree:3", 1, 3}})
        for (auto big = x.r + 3; big <= x.r + 6; ++big) {
            auto got = end_estimate(truncate_ball(x.spec, big), x.r);
            if (got != x.ends)
                o.fail(std::string(x.spec) + " R=" + std::to_string(big) + ": " + std::to_string(got) + " ends");
        }
    if (o.pass)
        o.detail = "shrink on " + std::to_string(entries().size()) + " graphs; " + std::to_string(pulled) +
                   " pullbacks; ends 2/2/1/3";
    return o;
}

// 11
Outcome determinism() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path();
    auto run = [&](const std::string& args, const std::string& file) {
        auto path = (dir / file).string();
        auto cmd = std::string(MEDIANFORGE_CLI) + " pipeline " + args + " --json " + path + " 2>/dev/null";
        int status = std::system(cmd.c_str());
        bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
        std::string text = ok ? read_file(path) : std::string();
        std::filesystem::remove(path);
        return std::pair{ok, text};
    };
    std::size_t runs = 0;
    auto compare = [&](const std::string& args) {
        auto a = run(args, "medianforge_acceptance_a.json");
        auto b = run(args, "medianforge_acceptance_b.json");
        if (!a.first || !b.first)
            o.fail("pipeline " + args + " failed");
        else if (a.second != b.second)
            o.fail("pipeline " + args + " not byte-identical");
        ++runs;
    };
    for (const auto& e : corpus::files())
        for (auto r : e.radii) compare(corpus::data_path(e.name + ".edges") + " --radius " + std::to_string(r));
    for (const auto& [spec, big, radii] : std::vector<std::tuple<std::string, int, std::vector<int>>>{
             {"ladder", 4, {1, 2, 3}},
             {"ladder", 8, {1, 2}},
             {"decorated_tree:3:4", 2, {1, 2, 3}},
             {"decorated_tree:3:4", 3, {1}},
             {"decorated_tree:3:4", 8, {1}},
             {"line", 8, {1, 2}},
             {"regular_tree:3", 3, {1, 2}}})
        for (auto r : radii)
            compare("--gen " + spec + " --truncate " + std::to_string(big) + " --radius " + std::to_string(r));
    if (o.pass) o.detail = std::to_string(runs) + " inputs run twice";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"dual construction exactness", dual_exactness},
        {"median axiom", median_axiom},
        {"distance formula", distance_formula},
        {"tree cases", tree_cases},
        {"roundtrip", roundtrips},
        {"spanning tree", spanning_trees},
        {"separation counting", separation_counting},
        {"projection", projection},
        {"finite hyperplanes bound", finite_hyperplanes},
        {"shrink, pullback and ends", toolkit},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << " (" << ms << " ms)" << std::endl;
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
