#include "conncut/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace conncut {

namespace {

VerifyResult fail(std::string msg) { return {false, std::move(msg)}; }
VerifyResult pass() { return {true, ""}; }

bool ids_in_range(const std::vector<int>& ids, int n) {
    return ids.empty() || (ids.front() >= 0 && ids.back() < n);
}

// Generic reachability over surviving objects. adj callback enumerates
// (neighbor) for a vertex under the current deletion sets.
template <typename AdjFn>
bool sides_connected(int n, const std::vector<int>& first, const std::vector<int>& second,
                     const std::vector<char>& blocked_vertex, AdjFn&& adj) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s : first) {
        if (blocked_vertex[s]) continue;
        seen[s] = 1;
        stack.push_back(s);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        adj(v, [&](int w) {
            if (!blocked_vertex[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        });
    }
    for (int t : second)
        if (seen[t]) return true;
    return false;
}

VerifyResult verify_edge_cut(const WeightedGraph& g, const CutCertificate& cert) {
    if (!ids_in_range(cert.side_pair.first, g.n) || !ids_in_range(cert.side_pair.second, g.n))
        return fail("side vertex out of range");
    if (cert.side_pair.first.empty() || cert.side_pair.second.empty())
        return fail("both sides must be nonempty");

    std::map<std::pair<int, int>, int> edge_index;
    for (int j = 0; j < g.m(); ++j) edge_index[{g.edges[j].u, g.edges[j].v}] = j;

    std::vector<char> removed_edge(g.m(), 0);
    Weight total;
    for (const ObjectRef& ref : cert.removed) {
        if (ref.kind != ObjectRef::edge) return fail("edge cut removes a non-edge object");
        auto key = std::minmax(ref.a, ref.b);
        auto it = edge_index.find({key.first, key.second});
        if (it == edge_index.end()) return fail("removed edge does not exist");
        if (removed_edge[it->second]) return fail("removed edge listed twice");
        removed_edge[it->second] = 1;
        total += g.edges[it->second].w;
    }

    auto graph_adj = g.adjacency();
    std::vector<char> no_block(g.n, 0);
    if (cert.value.is_infinite()) {
        if (!cert.removed.empty()) return fail("infinite cut must remove nothing");
        bool connected = sides_connected(g.n, cert.side_pair.first, cert.side_pair.second, no_block,
                                         [&](int v, auto&& push) {
                                             for (auto [w, j] : graph_adj[v])
                                                 if (g.edges[j].w.is_infinite()) push(w);
                                         });
        if (!connected) return fail("claimed infinite but a finite separator exists");
        return pass();
    }
    if (total != cert.value) return fail("value does not equal the removed weight");
    bool connected = sides_connected(g.n, cert.side_pair.first, cert.side_pair.second, no_block,
                                     [&](int v, auto&& push) {
                                         for (auto [w, j] : graph_adj[v])
                                             if (!removed_edge[j]) push(w);
                                     });
    if (connected) return fail("sides remain connected after removal");
    return pass();
}

VerifyResult verify_hyper_cut(const Hypergraph& h, const CutCertificate& cert) {
    if (!ids_in_range(cert.side_pair.first, h.n) || !ids_in_range(cert.side_pair.second, h.n))
        return fail("side vertex out of range");
    if (cert.side_pair.first.empty() || cert.side_pair.second.empty())
        return fail("both sides must be nonempty");

    std::vector<char> removed(h.m(), 0);
    Weight total;
    for (const ObjectRef& ref : cert.removed) {
        if (ref.kind != ObjectRef::hyperedge) return fail("hypergraph cut removes a non-hyperedge");
        if (ref.a < 0 || ref.a >= h.m()) return fail("removed hyperedge out of range");
        if (removed[ref.a]) return fail("removed hyperedge listed twice");
        removed[ref.a] = 1;
        total += h.hyperedges[ref.a].w;
    }

    std::vector<std::vector<int>> incident(h.n);
    for (int j = 0; j < h.m(); ++j)
        for (int v : h.hyperedges[j].members) incident[v].push_back(j);
    std::vector<char> no_block(h.n, 0);
    auto adj_over = [&](auto&& keep) {
        return [&, keep](int v, auto&& push) {
            for (int j : incident[v]) {
                if (!keep(j)) continue;
                for (int w : h.hyperedges[j].members) push(w);
            }
        };
    };
    if (cert.value.is_infinite()) {
        if (!cert.removed.empty()) return fail("infinite cut must remove nothing");
        bool connected = sides_connected(h.n, cert.side_pair.first, cert.side_pair.second, no_block,
                                         adj_over([&](int j) { return h.hyperedges[j].w.is_infinite(); }));
        if (!connected) return fail("claimed infinite but a finite separator exists");
        return pass();
    }
    if (total != cert.value) return fail("value does not equal the removed weight");
    bool connected = sides_connected(h.n, cert.side_pair.first, cert.side_pair.second, no_block,
                                     adj_over([&](int j) { return !removed[j]; }));
    if (connected) return fail("sides remain connected after removal");
    return pass();
}

VerifyResult verify_elem_cut(const ElementInstance& inst, const CutCertificate& cert) {
    const WeightedGraph& g = inst.graph;
    if (!ids_in_range(cert.side_pair.first, inst.element_count()) ||
        !ids_in_range(cert.side_pair.second, inst.element_count()))
        return fail("side element out of range");
    std::map<std::pair<int, int>, int> edge_index;
    for (int j = 0; j < g.m(); ++j) edge_index[{g.edges[j].u, g.edges[j].v}] = j;

    std::vector<char> rem_v(g.n, 0), rem_e(g.m(), 0);
    Weight total;
    for (const ObjectRef& ref : cert.removed) {
        if (ref.kind == ObjectRef::vertex) {
            if (ref.a < 0 || ref.a >= g.n) return fail("removed vertex out of range");
            if (inst.is_terminal(ref.a)) return fail("terminals are unremovable");
            if (rem_v[ref.a]) return fail("removed vertex listed twice");
            rem_v[ref.a] = 1;
            total += g.vertex_weights[ref.a];
        } else if (ref.kind == ObjectRef::edge) {
            auto key = std::minmax(ref.a, ref.b);
            auto it = edge_index.find({key.first, key.second});
            if (it == edge_index.end()) return fail("removed edge does not exist");
            if (rem_e[it->second]) return fail("removed edge listed twice");
            rem_e[it->second] = 1;
            total += g.edges[it->second].w;
        } else {
            return fail("element cut removes a hyperedge");
        }
    }

    // Vertex parts of the sides drive the connectivity check.
    std::vector<int> first_v, second_v;
    for (int x : cert.side_pair.first)
        if (x < g.n) first_v.push_back(x);
    for (int x : cert.side_pair.second)
        if (x < g.n) second_v.push_back(x);
    if (first_v.empty() || second_v.empty()) return fail("both sides need at least one vertex");
    for (int x : cert.side_pair.first)
        if ((x < g.n && rem_v[x]) || (x >= g.n && rem_e[x - g.n])) return fail("side element was removed");
    for (int x : cert.side_pair.second)
        if ((x < g.n && rem_v[x]) || (x >= g.n && rem_e[x - g.n])) return fail("side element was removed");

    auto graph_adj = g.adjacency();
    if (cert.value.is_infinite()) {
        if (!cert.removed.empty()) return fail("infinite cut must remove nothing");
        // Witness: a path through unremovable terminals and infinite
        // elements alone survives every finite removal.
        std::vector<char> blocked(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            if (!inst.is_terminal(v) && !g.vertex_weights[v].is_infinite()) blocked[v] = 1;
        for (int s : first_v) blocked[s] = 0;
        for (int t : second_v) blocked[t] = 0;
        bool connected = sides_connected(g.n, first_v, second_v, blocked,
                                         [&](int v, auto&& push) {
                                             for (auto [w, j] : graph_adj[v])
                                                 if (g.edges[j].w.is_infinite()) push(w);
                                         });
        if (!connected) return fail("claimed infinite but a finite separator exists");
        return pass();
    }
    if (total != cert.value) return fail("value does not equal the removed weight");
    bool connected = sides_connected(g.n, first_v, second_v, rem_v,
                                     [&](int v, auto&& push) {
                                         for (auto [w, j] : graph_adj[v])
                                             if (!rem_e[j]) push(w);
                                     });
    if (connected) return fail("sides remain connected after removal");
    return pass();
}

VerifyResult verify_vertex_cut(const WeightedGraph& g, const CutCertificate& cert) {
    if (!ids_in_range(cert.side_pair.first, g.n) || !ids_in_range(cert.side_pair.second, g.n))
        return fail("side vertex out of range");
    if (cert.side_pair.first.empty() || cert.side_pair.second.empty())
        return fail("both sides must be nonempty");

    std::vector<char> removed(g.n, 0);
    Weight total;
    for (const ObjectRef& ref : cert.removed) {
        if (ref.kind != ObjectRef::vertex) return fail("vertex cut removes a non-vertex");
        if (ref.a < 0 || ref.a >= g.n) return fail("removed vertex out of range");
        if (removed[ref.a]) return fail("removed vertex listed twice");
        removed[ref.a] = 1;
        total += g.vertex_weights[ref.a];
    }
    for (int v : cert.side_pair.first)
        if (removed[v]) return fail("side vertex was removed");
    for (int v : cert.side_pair.second)
        if (removed[v]) return fail("side vertex was removed");

    auto graph_adj = g.adjacency();
    if (cert.value.is_infinite()) {
        if (!cert.removed.empty()) return fail("infinite cut must remove nothing");
        // Connectivity through infinite-weight vertices (edges are never
        // removable in a vertex cut).
        std::vector<char> blocked(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            if (!g.vertex_weights[v].is_infinite()) blocked[v] = 1;
        for (int s : cert.side_pair.first) blocked[s] = 0;
        for (int t : cert.side_pair.second) blocked[t] = 0;
        bool connected = sides_connected(g.n, cert.side_pair.first, cert.side_pair.second, blocked,
                                         [&](int v, auto&& push) {
                                             for (auto [w, j] : graph_adj[v]) push(w);
                                         });
        if (!connected) return fail("claimed infinite but a finite separator exists");
        return pass();
    }
    if (total != cert.value) return fail("value does not equal the removed weight");
    bool connected = sides_connected(g.n, cert.side_pair.first, cert.side_pair.second, removed,
                                     [&](int v, auto&& push) {
                                         for (auto [w, j] : graph_adj[v]) push(w);
                                     });
    if (connected) return fail("sides remain connected after removal");
    return pass();
}

}  // namespace

VerifyResult verify_certificate(const Instance& inst, const CutCertificate& cert) {
    switch (cert.problem) {
        case Problem::edge_cut:
            if (const WeightedGraph* g = as_graph(inst)) return verify_edge_cut(*g, cert);
            return fail("edge cut certificate needs a graph instance");
        case Problem::hyper_cut:
            if (const Hypergraph* h = as_hypergraph(inst)) return verify_hyper_cut(*h, cert);
            return fail("hypergraph certificate needs a hypergraph instance");
        case Problem::elem_cut:
            if (const ElementInstance* e = as_element(inst)) return verify_elem_cut(*e, cert);
            return fail("element certificate needs an element instance");
        case Problem::vertex_cut:
            if (const WeightedGraph* g = as_graph(inst)) return verify_vertex_cut(*g, cert);
            return fail("vertex certificate needs a graph instance");
        default:
            return fail("certificate kind has no file-backed instance");
    }
}

bool graph_is_complete(const WeightedGraph& g) {
    long pairs = static_cast<long>(g.n) * (g.n - 1) / 2;
    return static_cast<long>(g.edges.size()) == pairs;
}

}  // namespace conncut
