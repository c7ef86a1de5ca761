#ifndef MEDIANFORGE_TESTS_CORPUS_HPP
#define MEDIANFORGE_TESTS_CORPUS_HPP

#include "medianforge/ends.hpp"
#include "medianforge/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace corpus {

struct Entry {
    std::string name;
    medianforge::FiniteGraph graph;
    bool median = false;
    bool tree = false;
    std::vector<std::uint32_t> radii;
};

inline std::string data_path(const std::string& file) { return std::string(MEDIANFORGE_DATA_DIR) + "/" + file; }

inline medianforge::FiniteGraph load(const std::string& name) { return medianforge::load_graph(data_path(name + ".edges")); }

inline std::vector<Entry> files() {
    return {
        {"p2", load("p2"), true, true, {0, 1, 2, 3}},
        {"p3", load("p3"), true, true, {0, 1, 2, 3}},
        {"p4", load("p4"), true, true, {0, 1, 2, 3}},
        {"p5", load("p5"), true, true, {0, 1, 2, 3}},
        {"p6", load("p6"), true, true, {0, 1, 2, 3}},
        {"c4", load("c4"), true, false, {0, 1, 2, 3}},
        {"c6", load("c6"), false, false, {0, 1, 2, 3}},
        {"q3", load("q3"), true, false, {0, 1, 2}},
        {"k13", load("k13"), true, true, {0, 1, 2, 3}},
        {"grid3x3", load("grid3x3"), true, false, {0, 1, 2}},
        {"tree7", load("tree7"), true, true, {0, 1, 2, 3}},
    };
}

inline Entry truncation(const std::string& spec, std::uint32_t r, bool median, bool tree,
                        std::vector<std::uint32_t> radii) {
    return {spec + "@" + std::to_string(r), medianforge::truncate_ball(spec, r).graph, median, tree, std::move(radii)};
}

inline std::vector<Entry> truncations() {
    return {
        truncation("ladder", 4, true, false, {1, 2, 3}),
        truncation("ladder", 8, true, false, {1, 2}),
        truncation("decorated_tree:3:4", 2, true, false, {1, 2, 3}),
        truncation("decorated_tree:3:4", 3, true, false, {1}),
        truncation("decorated_tree:3:4", 8, true, false, {1}),
        truncation("line", 8, true, true, {1, 2}),
        truncation("regular_tree:3", 3, true, true, {1, 2}),
    };
}

inline std::vector<Entry> all() {
    auto out = files();
    for (auto& e : truncations()) out.push_back(std::move(e));
    return out;
}

} // namespace corpus

#endif
