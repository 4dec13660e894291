#pragma once

// Shared graph fixtures and seeded instance generators for the test and
// acceptance suites.

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "conncut/instance.hpp"
#include "conncut/rng.hpp"
#include "conncut/weight.hpp"

namespace conncut::testing {

inline WeightedGraph make_graph(int n, const std::vector<std::tuple<int, int, uint64_t>>& edges,
                                const std::vector<uint64_t>& vweights = {}) {
    WeightedGraph g;
    g.n = n;
    g.vertex_weights.assign(n, Weight(1));
    for (size_t i = 0; i < vweights.size(); ++i) g.vertex_weights[i] = Weight(vweights[i]);
    std::map<std::pair<int, int>, Weight> merged;
    for (auto [u, v, w] : edges) {
        if (u > v) std::swap(u, v);
        merged[{u, v}] += Weight(w);
    }
    for (auto& [uv, w] : merged)
        if (!w.is_zero()) g.edges.push_back({uv.first, uv.second, w});
    return g;
}

// Two unit triangles {0,1,2} and {3,4,5} joined by the unit bridge 2-3.
inline WeightedGraph dumbbell() {
    return make_graph(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}, {2, 3, 1}});
}

// Center 0, unit leaves 1..k.
inline WeightedGraph star(int k) {
    std::vector<std::tuple<int, int, uint64_t>> edges;
    for (int i = 1; i <= k; ++i) edges.push_back({0, i, 1});
    return make_graph(k + 1, edges);
}

inline WeightedGraph path3(uint64_t w1, uint64_t w2) {
    return make_graph(3, {{0, 1, w1}, {1, 2, w2}});
}

inline WeightedGraph complete(int n) {
    std::vector<std::tuple<int, int, uint64_t>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    return make_graph(n, edges);
}

inline WeightedGraph cycle(int n) {
    std::vector<std::tuple<int, int, uint64_t>> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1});
    return make_graph(n, edges);
}

inline WeightedGraph petersen() {
    std::vector<std::tuple<int, int, uint64_t>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5, 1});          // outer cycle
        edges.push_back({i, i + 5, 1});                // spokes
        edges.push_back({i + 5, 5 + (i + 2) % 5, 1});  // pentagram
    }
    return make_graph(10, edges);
}

inline WeightedGraph k33() {
    std::vector<std::tuple<int, int, uint64_t>> edges;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) edges.push_back({u, v, 1});
    return make_graph(6, edges);
}

// Terminals s=0, t=1; non-terminals u=2, v=3; two internally disjoint
// s-t paths through u and v. Unit weights everywhere.
inline ElementInstance elem_two_path() {
    ElementInstance inst;
    inst.graph = make_graph(4, {{0, 2, 1}, {2, 1, 1}, {0, 3, 1}, {3, 1, 1}});
    inst.terminals = {0, 1};
    return inst;
}

// V = {0,1,2,3}; hyperedges {0,1,2} w5 and {2,3} w2.
inline Hypergraph hyper_triple() {
    Hypergraph h;
    h.n = 4;
    h.hyperedges.push_back({{0, 1, 2}, Weight(5)});
    h.hyperedges.push_back({{2, 3}, Weight(2)});
    return h;
}

inline WeightedGraph random_graph(Rng& rng, int n, uint64_t max_w, int density_pct = 50) {
    std::vector<std::tuple<int, int, uint64_t>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < uint64_t(density_pct))
                edges.push_back({u, v, 1 + rng.below(max_w)});
    return make_graph(n, edges);
}

inline WeightedGraph random_connected_graph(Rng& rng, int n, uint64_t max_w, int density_pct = 50) {
    auto g = random_graph(rng, n, max_w, density_pct);
    std::vector<std::tuple<int, int, uint64_t>> edges;
    for (const Edge& e : g.edges) edges.push_back({e.u, e.v, e.w.value()});
    // Stitch a random spanning chain through any disconnection.
    for (int v = 1; v < n; ++v)
        edges.push_back({static_cast<int>(rng.below(v)), v, 1 + rng.below(max_w)});
    return make_graph(n, edges);
}

inline Hypergraph random_hypergraph(Rng& rng, int n, int m, uint64_t max_w) {
    Hypergraph h;
    h.n = n;
    for (int j = 0; j < m; ++j) {
        int k = 2 + static_cast<int>(rng.below(3));
        std::vector<int> mem;
        for (int i = 0; i < k; ++i) mem.push_back(static_cast<int>(rng.below(n)));
        std::sort(mem.begin(), mem.end());
        mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
        if (mem.size() < 2) {
            --j;
            continue;
        }
        h.hyperedges.push_back({std::move(mem), Weight(1 + rng.below(max_w))});
    }
    return h;
}

inline std::vector<int> random_subset(Rng& rng, int n, size_t min_size) {
    std::vector<int> out;
    while (out.size() < min_size) {
        out.clear();
        for (int v = 0; v < n; ++v)
            if (rng.chance(1, 2)) out.push_back(v);
    }
    return out;
}

inline ElementInstance random_element_instance(Rng& rng, int n, int max_edges, uint64_t max_w,
                                               int n_terminals) {
    std::vector<std::tuple<int, int, uint64_t>> edges;
    for (int j = 0; j < max_edges; ++j) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        edges.push_back({u, v, 1 + rng.below(max_w)});
    }
    ElementInstance inst;
    std::vector<uint64_t> vw;
    for (int v = 0; v < n; ++v) vw.push_back(1 + rng.below(max_w));
    inst.graph = make_graph(n, edges, vw);
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(uint64_t(i) + 1)]);
    inst.terminals.assign(perm.begin(), perm.begin() + n_terminals);
    std::sort(inst.terminals.begin(), inst.terminals.end());
    return inst;
}

}  // namespace conncut::testing
