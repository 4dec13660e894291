#include "conncut/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "conncut/error.hpp"

namespace conncut {

std::vector<std::vector<std::pair<int, int>>> WeightedGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int j = 0; j < m(); ++j) {
        adj[edges[j].u].push_back({edges[j].v, j});
        adj[edges[j].v].push_back({edges[j].u, j});
    }
    return adj;
}

static std::vector<int> components_from(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

std::vector<int> WeightedGraph::components() const {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return components_from(n, adj);
}

Weight WeightedGraph::total_edge_weight() const {
    Weight t;
    for (const Edge& e : edges) t += e.w;
    return t;
}

long Hypergraph::total_size() const {
    long p = 0;
    for (const Hyperedge& e : hyperedges) p += static_cast<long>(e.members.size());
    return p;
}

std::vector<int> Hypergraph::components() const {
    std::vector<std::vector<int>> adj(n);
    for (const Hyperedge& e : hyperedges)
        for (size_t i = 1; i < e.members.size(); ++i) {
            adj[e.members[0]].push_back(e.members[i]);
            adj[e.members[i]].push_back(e.members[0]);
        }
    return components_from(n, adj);
}

bool ElementInstance::is_terminal(int v) const {
    return std::binary_search(terminals.begin(), terminals.end(), v);
}

Weight ElementInstance::element_weight(int id) const {
    if (element_is_vertex(id)) {
        if (is_terminal(id)) throw InvalidArgument("terminal vertices carry no element weight");
        return graph.vertex_weights[id];
    }
    return graph.edges[element_edge_index(id)].w;
}

std::string LoadReport::to_string() const {
    std::ostringstream os;
    if (merged_parallel_edges > 0)
        os << "merged " << merged_parallel_edges << " parallel edge(s)\n";
    for (int ord : dropped_singleton_hyperedges)
        os << "dropped singleton hyperedge #" << ord << "\n";
    for (auto [a, b] : dropped_zero_edges)
        os << "dropped zero-weight edge (" << a << ", " << b << ")\n";
    for (uint64_t v : zero_weight_nonterminals)
        os << "zero-weight non-terminal " << v << " (cuts may be trivially 0)\n";
    return os.str();
}

InstanceKind kind_of(const Instance& inst) {
    if (std::holds_alternative<WeightedGraph>(inst)) return InstanceKind::graph;
    if (std::holds_alternative<Hypergraph>(inst)) return InstanceKind::hypergraph;
    return InstanceKind::element;
}

const WeightedGraph* as_graph(const Instance& inst) { return std::get_if<WeightedGraph>(&inst); }
const Hypergraph* as_hypergraph(const Instance& inst) { return std::get_if<Hypergraph>(&inst); }
const ElementInstance* as_element(const Instance& inst) {
    return std::get_if<ElementInstance>(&inst);
}

uint64_t instance_precision(const Instance& inst) {
    switch (kind_of(inst)) {
        case InstanceKind::graph: return as_graph(inst)->precision;
        case InstanceKind::hypergraph: return as_hypergraph(inst)->precision;
        default: return as_element(inst)->graph.precision;
    }
}

uint64_t instance_label(const Instance& inst, int v) {
    switch (kind_of(inst)) {
        case InstanceKind::graph: return as_graph(inst)->label(v);
        case InstanceKind::hypergraph: return as_hypergraph(inst)->label(v);
        default: return as_element(inst)->graph.label(v);
    }
}

int instance_vertex_count(const Instance& inst) {
    switch (kind_of(inst)) {
        case InstanceKind::graph: return as_graph(inst)->n;
        case InstanceKind::hypergraph: return as_hypergraph(inst)->n;
        default: return as_element(inst)->graph.n;
    }
}

int vertex_of_label(const Instance& inst, uint64_t lab) {
    const std::vector<uint64_t>* labels = nullptr;
    switch (kind_of(inst)) {
        case InstanceKind::graph: labels = &as_graph(inst)->labels; break;
        case InstanceKind::hypergraph: labels = &as_hypergraph(inst)->labels; break;
        default: labels = &as_element(inst)->graph.labels; break;
    }
    if (labels->empty())  // identity labeling
        return lab < uint64_t(instance_vertex_count(inst)) ? static_cast<int>(lab) : -1;
    auto it = std::lower_bound(labels->begin(), labels->end(), lab);
    if (it == labels->end() || *it != lab) return -1;
    return static_cast<int>(it - labels->begin());
}

}  // namespace conncut
