#pragma once

// Random valid foliation graphs for property tests. Generated graphs are
// generic: separatrices never run from saddle to saddle, so every saddle
// draws its stable separatrices from dedicated or shared sources and sends
// its unstable ones to sinks or the boundary.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "core/foliation.hpp"

namespace testgen {

inline ratknot::FoliationGraph random_graph(std::mt19937_64& rng) {
    using ratknot::FoliationGraph;
    using ratknot::NodeKind;
    using ratknot::Sign;

    std::uniform_int_distribution<int> n_sources(1, 4);
    std::uniform_int_distribution<int> n_sinks(0, 3);
    std::uniform_int_distribution<int> n_saddles(0, 4);
    std::uniform_int_distribution<int> coin(0, 1);

    std::map<std::string, FoliationGraph::Node> nodes;
    std::vector<FoliationGraph::Edge> edges;
    std::vector<std::string> sources, sinks;
    const std::string boundary{FoliationGraph::boundary_id};

    int src_count = n_sources(rng);
    for (int i = 0; i < src_count; ++i) {
        std::string id = "src" + std::to_string(i);
        nodes.emplace(id, FoliationGraph::Node{NodeKind::elliptic, Sign::positive});
        sources.push_back(id);
    }
    int sink_count = n_sinks(rng);
    for (int i = 0; i < sink_count; ++i) {
        std::string id = "snk" + std::to_string(i);
        nodes.emplace(id, FoliationGraph::Node{NodeKind::elliptic, Sign::negative});
        sinks.push_back(id);
    }

    auto pick = [&](const std::vector<std::string>& pool) {
        std::uniform_int_distribution<size_t> d(0, pool.size() - 1);
        return pool[d(rng)];
    };
    auto sink_or_boundary = [&] {
        if (sinks.empty() || coin(rng) == 0) return boundary;
        return pick(sinks);
    };

    int saddle_count = n_saddles(rng);
    for (int i = 0; i < saddle_count; ++i) {
        std::string id = "sad" + std::to_string(i);
        Sign sign = coin(rng) == 0 ? Sign::positive : Sign::negative;
        nodes.emplace(id, FoliationGraph::Node{NodeKind::hyperbolic, sign});
        edges.emplace_back(pick(sources), id);
        edges.emplace_back(pick(sources), id);
        edges.emplace_back(id, sink_or_boundary());
        edges.emplace_back(id, sink_or_boundary());
    }

    // Generic flow lines straight from sources to sinks or out the boundary.
    std::uniform_int_distribution<int> n_plain(1, 5);
    int plain = n_plain(rng);
    for (int i = 0; i < plain; ++i)
        edges.emplace_back(pick(sources), sink_or_boundary());

    return FoliationGraph::build(std::move(nodes), std::move(edges));
}

}  // namespace testgen
