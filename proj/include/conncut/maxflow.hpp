#pragma once

#include <cstdint>
#include <vector>

#include "conncut/weight.hpp"

namespace conncut {

/// Directed capacitated network. Arcs are stored in structurally paired
/// form: arc i and arc i^1 are mutual reverses. add_arc pairs the arc with
/// a zero-capacity reverse; add_edge pairs two antiparallel arcs that both
/// carry the full capacity (the undirected reduction).
struct FlowNetwork {
    struct Arc {
        int head;
        Weight cap;
    };

    int node_count = 0;
    int source = -1;
    int sink = -1;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;  // arc ids with this tail, insertion order

    explicit FlowNetwork(int nodes = 0) : node_count(nodes), out(nodes) {}

    int add_node();
    int add_arc(int tail, int head, Weight cap);
    int add_edge(int u, int v, Weight cap);
};

struct FlowResult {
    Weight value;
    std::vector<int64_t> flow;      // per arc, >= 0; at most one of a pair is positive
    std::vector<char> source_side;  // residual-reachable from source (inclusion-minimal)
    std::vector<char> sink_side;    // residual-co-reachable to sink (inclusion-minimal)
    int max_augmenting_path_len = 0;  // arcs on the longest augmenting path used
};

/// Exact blocking-flow (Dinic) maximum flow. Deterministic: arc order is
/// insertion order and there is no randomness. If an augmenting path with
/// an Infinite bottleneck is found the run stops immediately with value
/// Infinite; the sides are then taken over arcs with positive *finite*
/// residual.
FlowResult max_flow(const FlowNetwork& net);

/// The two inclusion-minimal min-cut sides of a completed run.
std::pair<std::vector<char>, std::vector<char>> min_cut_sides(const FlowResult& r);

}  // namespace conncut
