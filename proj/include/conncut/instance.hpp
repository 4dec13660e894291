#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "conncut/weight.hpp"

namespace conncut {

/// Undirected edge, endpoints canonicalized u < v. Parallel input edges
/// are merged additively at load, so (u, v) identifies an edge uniquely.
struct Edge {
    int u = 0, v = 0;
    Weight w;
};

/// Weighted undirected graph over dense 0-based vertex ids. External
/// (file) labels map through `labels`; internal id i carries labels[i],
/// and ids are assigned in increasing label order.
struct WeightedGraph {
    int n = 0;
    std::vector<Edge> edges;                // sorted by (u, v)
    std::vector<Weight> vertex_weights;     // size n; defaults to 1
    std::vector<uint64_t> labels;           // size n, strictly increasing
    uint64_t precision = 1;

    int m() const { return static_cast<int>(edges.size()); }
    uint64_t label(int v) const { return labels.empty() ? uint64_t(v) : labels[v]; }

    /// Adjacency as (neighbor, edge id) lists, in edge-id order.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;

    /// Component id per vertex, ids in order of smallest contained vertex.
    std::vector<int> components() const;

    Weight total_edge_weight() const;
};

struct Hyperedge {
    std::vector<int> members;  // sorted, >= 2 entries after load
    Weight w;
};

struct Hypergraph {
    int n = 0;
    std::vector<Hyperedge> hyperedges;
    std::vector<uint64_t> labels;
    uint64_t precision = 1;

    int m() const { return static_cast<int>(hyperedges.size()); }
    uint64_t label(int v) const { return labels.empty() ? uint64_t(v) : labels[v]; }

    /// Total size p = sum of member counts.
    long total_size() const;

    std::vector<int> components() const;
};

/// Element connectivity instance: terminals are unremovable; the elements
/// are the edges and the non-terminal vertices. Element ids: vertex v is
/// element v, edge j is element graph.n + j.
struct ElementInstance {
    WeightedGraph graph;
    std::vector<int> terminals;  // sorted internal ids

    int element_count() const { return graph.n + graph.m(); }
    bool is_terminal(int v) const;
    bool element_is_vertex(int id) const { return id < graph.n; }
    int element_edge_index(int id) const { return id - graph.n; }

    /// Weight of a removable element. Terminal vertices are not removable
    /// and have no weight.
    Weight element_weight(int id) const;
};

/// What load dropped or flagged; never part of solver output.
struct LoadReport {
    int merged_parallel_edges = 0;
    std::vector<int> dropped_singleton_hyperedges;  // input hyperedge ordinals (1-based)
    std::vector<std::pair<uint64_t, uint64_t>> dropped_zero_edges;  // label pairs
    std::vector<uint64_t> zero_weight_nonterminals;  // labels
    std::string to_string() const;
};

enum class InstanceKind { graph, hypergraph, element };

using Instance = std::variant<WeightedGraph, Hypergraph, ElementInstance>;

InstanceKind kind_of(const Instance& inst);
const WeightedGraph* as_graph(const Instance& inst);
const Hypergraph* as_hypergraph(const Instance& inst);
const ElementInstance* as_element(const Instance& inst);

uint64_t instance_precision(const Instance& inst);
uint64_t instance_label(const Instance& inst, int v);
int instance_vertex_count(const Instance& inst);

/// Internal id for an external numeric label, -1 if absent.
int vertex_of_label(const Instance& inst, uint64_t lab);

}  // namespace conncut
