#include "conncut/elem_conn.hpp"

#include <algorithm>
#include <set>

#include "conncut/error.hpp"

namespace conncut {

namespace {

void require_terminals(const ElementInstance& inst, const std::vector<int>& S, const char* what) {
    for (int v : S)
        if (!inst.is_terminal(v)) throw InvalidArgument(std::string(what) + ": vertex is not a terminal");
}

ObjectRef element_ref(const ElementInstance& inst, int element_id) {
    if (inst.element_is_vertex(element_id)) return {ObjectRef::vertex, element_id, 0};
    const Edge& e = inst.graph.edges[inst.element_edge_index(element_id)];
    return {ObjectRef::edge, e.u, e.v};
}

// Assemble the canonical lattice pair for a removed element set: X is the
// S-side (vertices reachable from A in G minus removed, plus surviving
// edges touching them), Y is everything else that survives.
CutCertificate cert_from_removed(const ElementInstance& inst, const std::vector<int>& removed,
                                 const std::vector<int>& A, Weight value) {
    const WeightedGraph& g = inst.graph;
    int n = g.n, m = g.m();
    std::vector<char> rem_v(n, 0), rem_e(m, 0);
    Weight total;
    for (int id : removed) {
        if (inst.element_is_vertex(id))
            rem_v[id] = 1;
        else
            rem_e[inst.element_edge_index(id)] = 1;
        total += inst.element_weight(id);
    }
    if (total != value) throw ContractViolation("element cut value does not match removed set");

    auto adj = g.adjacency();
    std::vector<char> reach(n, 0);
    std::vector<int> stack;
    for (int a : A) {
        reach[a] = 1;
        stack.push_back(a);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, j] : adj[v]) {
            if (rem_e[j] || rem_v[w] || reach[w]) continue;
            reach[w] = 1;
            stack.push_back(w);
        }
    }

    std::vector<int> first, second;
    for (int v = 0; v < n; ++v) {
        if (rem_v[v]) continue;
        (reach[v] ? first : second).push_back(v);
    }
    for (int j = 0; j < m; ++j) {
        if (rem_e[j]) continue;
        bool touches = reach[g.edges[j].u] || reach[g.edges[j].v];
        (touches ? first : second).push_back(n + j);
    }

    CutCertificate cert;
    cert.problem = Problem::elem_cut;
    cert.value = value;
    cert.side_pair = SetPair(std::move(first), std::move(second), n + m);
    for (int id : removed) cert.removed.push_back(element_ref(inst, id));
    std::sort(cert.removed.begin(), cert.removed.end());
    return cert;
}

// No finite separator: the minimal pair keeps exactly A on the first side.
CutCertificate infinite_element_cert(const ElementInstance& inst, const std::vector<int>& A) {
    const WeightedGraph& g = inst.graph;
    std::vector<char> in_a(g.n, 0);
    for (int v : A) in_a[v] = 1;
    std::vector<int> second;
    for (int v = 0; v < g.n; ++v)
        if (!in_a[v]) second.push_back(v);
    for (int j = 0; j < g.m(); ++j)
        if (!in_a[g.edges[j].u] && !in_a[g.edges[j].v]) second.push_back(g.n + j);
    CutCertificate cert;
    cert.problem = Problem::elem_cut;
    cert.value = Weight::infinite();
    cert.side_pair = SetPair(A, std::move(second), inst.element_count());
    return cert;
}

std::vector<int> removed_from_flow(const ElementNetwork& en, const FlowResult& fr) {
    std::set<int> removed;
    for (size_t a = 0; a < en.net.arcs.size(); ++a) {
        int elem = en.arc_element[a];
        if (elem < 0) continue;
        int tail = en.net.arcs[a ^ 1].head;
        int head = en.net.arcs[a].head;
        if (fr.source_side[tail] && !fr.source_side[head]) removed.insert(elem);
    }
    return {removed.begin(), removed.end()};
}

}  // namespace

ElementNetwork element_split_network(const ElementInstance& inst, const std::vector<int>& S,
                                     const std::vector<int>& Z) {
    if (S.empty() || Z.empty()) throw InvalidArgument("element cut needs nonempty terminal sides");
    if (!sets_disjoint(S, Z)) throw InvalidArgument("element cut: sides intersect");
    require_terminals(inst, S, "element cut source side");
    require_terminals(inst, Z, "element cut sink side");

    const WeightedGraph& g = inst.graph;
    ElementNetwork en;
    en.node_in.assign(g.n, -1);
    en.node_out.assign(g.n, -1);
    FlowNetwork& net = en.net;
    auto track = [&](int arc_id, int elem) {
        if (static_cast<size_t>(arc_id) + 2 > en.arc_element.size())
            en.arc_element.resize(arc_id + 2, -1);
        en.arc_element[arc_id] = elem;
    };

    for (int v = 0; v < g.n; ++v) {
        if (inst.is_terminal(v)) {
            en.node_in[v] = en.node_out[v] = net.add_node();
        } else {
            en.node_in[v] = net.add_node();
            en.node_out[v] = net.add_node();
            track(net.add_arc(en.node_in[v], en.node_out[v], g.vertex_weights[v]), v);
        }
    }
    for (int j = 0; j < g.m(); ++j) {
        const Edge& e = g.edges[j];
        track(net.add_arc(en.node_out[e.u], en.node_in[e.v], e.w), g.n + j);
        track(net.add_arc(en.node_out[e.v], en.node_in[e.u], e.w), g.n + j);
    }
    net.source = net.add_node();
    net.sink = net.add_node();
    for (int s : S) track(net.add_arc(net.source, en.node_in[s], Weight::infinite()), -1);
    for (int z : Z) track(net.add_arc(en.node_out[z], net.sink, Weight::infinite()), -1);
    en.arc_element.resize(net.arcs.size(), -1);
    return en;
}

CutCertificate element_min_cut(const ElementInstance& inst, const std::vector<int>& S,
                               const std::vector<int>& Z) {
    ElementNetwork en = element_split_network(inst, S, Z);
    FlowResult fr = max_flow(en.net);
    if (fr.value.is_infinite()) {
        std::vector<int> a(S);
        std::sort(a.begin(), a.end());
        CutCertificate cert = infinite_element_cert(inst, a);
        cert.meta.oracle_calls = 1;
        return cert;
    }
    std::vector<int> a(S);
    std::sort(a.begin(), a.end());
    CutCertificate cert = cert_from_removed(inst, removed_from_flow(en, fr), a, fr.value);
    cert.meta.oracle_calls = 1;
    return cert;
}

std::pair<SetPair, Weight> ElementCutOracle::outer_cut(const SetPair& terminals) {
    CutCertificate cert = element_min_cut(inst_, terminals.first, terminals.second);
    return {cert.side_pair, cert.value};
}

CutCertificate ElementCutOracle::inner_cut(int r, const SetPair& piece, RunLog* log) {
    const WeightedGraph& g = inst_.graph;
    int n = g.n, m = g.m();

    std::vector<char> piece_v(n, 0), piece_e(m, 0);
    for (int x : piece.first) {
        if (x < n)
            piece_v[x] = 1;
        else
            piece_e[x - n] = 1;
    }
    // Boundary: vertices outside the piece on a piece edge; edges outside
    // the piece touching a piece vertex.
    std::vector<char> bound_v(n, 0), bound_e(m, 0);
    for (int j = 0; j < m; ++j) {
        const Edge& e = g.edges[j];
        if (piece_e[j]) {
            if (!piece_v[e.u]) bound_v[e.u] = 1;
            if (!piece_v[e.v]) bound_v[e.v] = 1;
        } else if (piece_v[e.u] || piece_v[e.v]) {
            bound_e[j] = 1;
        }
    }

    PieceStat st;
    st.r = r;
    for (int v = 0; v < n; ++v) {
        if (piece_v[v]) ++st.n_inner;
        if (piece_v[v] || bound_v[v]) ++st.n_r;
    }
    for (int j = 0; j < m; ++j)
        if (piece_e[j] || bound_e[j]) ++st.m_r;

    // Contracted auxiliary network: piece vertices split as usual, every
    // boundary exit merged straight into the auxiliary terminal t_bar.
    FlowNetwork net(0);
    std::vector<int> arc_element;
    auto track = [&](int arc_id, int elem) {
        if (static_cast<size_t>(arc_id) + 2 > arc_element.size()) arc_element.resize(arc_id + 2, -1);
        arc_element[arc_id] = elem;
    };
    std::vector<int> node_in(n, -1), node_out(n, -1);
    int t_bar = net.add_node();
    for (int v = 0; v < n; ++v) {
        if (piece_v[v]) {
            if (inst_.is_terminal(v)) {
                node_in[v] = node_out[v] = net.add_node();
            } else {
                node_in[v] = net.add_node();
                node_out[v] = net.add_node();
                track(net.add_arc(node_in[v], node_out[v], g.vertex_weights[v]), v);
            }
        } else if (bound_v[v]) {
            node_in[v] = net.add_node();
            node_out[v] = t_bar;  // boundary exits are contracted into t_bar
            if (inst_.is_terminal(v))
                track(net.add_arc(node_in[v], t_bar, Weight::infinite()), -1);
            else
                track(net.add_arc(node_in[v], t_bar, g.vertex_weights[v]), v);
        }
    }
    for (int j = 0; j < m; ++j) {
        const Edge& e = g.edges[j];
        if (piece_e[j]) {
            if (node_out[e.u] != t_bar) track(net.add_arc(node_out[e.u], node_in[e.v], e.w), g.n + j);
            if (node_out[e.v] != t_bar) track(net.add_arc(node_out[e.v], node_in[e.u], e.w), g.n + j);
        } else if (bound_e[j]) {
            bool u_in = piece_v[e.u], v_in = piece_v[e.v];
            if (u_in && v_in) {
                // Outside edge between two piece vertices: keep it whole.
                track(net.add_arc(node_out[e.u], node_in[e.v], e.w), g.n + j);
                track(net.add_arc(node_out[e.v], node_in[e.u], e.w), g.n + j);
            } else {
                // Exactly one endpoint inside: the far endpoint becomes t_bar.
                int u = u_in ? e.u : e.v;
                track(net.add_arc(node_out[u], t_bar, e.w), g.n + j);
            }
        }
    }
    net.source = net.add_node();
    net.sink = net.add_node();
    track(net.add_arc(net.source, node_in[r], Weight::infinite()), -1);
    track(net.add_arc(t_bar, net.sink, Weight::infinite()), -1);
    arc_element.resize(net.arcs.size(), -1);

    FlowResult fr = max_flow(net);
    st.max_aug_len = fr.max_augmenting_path_len;
    if (st.max_aug_len > 2 * st.n_inner + 2)
        throw ContractViolation("augmenting path longer than 2 * n_r + 2 in contracted network");
    if (log) log->pieces.push_back(st);

    if (fr.value.is_infinite()) return infinite_element_cert(inst_, {r});

    std::set<int> removed;
    for (size_t a = 0; a < net.arcs.size(); ++a) {
        int elem = arc_element[a];
        if (elem < 0) continue;
        int tail = net.arcs[a ^ 1].head;
        int head = net.arcs[a].head;
        if (fr.source_side[tail] && !fr.source_side[head]) removed.insert(elem);
    }
    std::vector<int> removed_ids(removed.begin(), removed.end());
    return cert_from_removed(inst_, removed_ids, {r}, fr.value);
}

void ElementCutOracle::check_pieces(const std::map<int, SetPair>& pieces, RunLog* log) {
    (void)log;
    const WeightedGraph& g = inst_.graph;
    int n = g.n, m = g.m();
    // Which piece owns each vertex / edge (firsts are disjoint).
    std::vector<int> owner_v(n, -1), owner_e(m, -1);
    int idx = 0;
    for (const auto& [r, piece] : pieces) {
        for (int x : piece.first) {
            if (x < n)
                owner_v[x] = idx;
            else
                owner_e[x - n] = idx;
        }
        ++idx;
    }
    // No edge of one piece may touch a vertex of another.
    for (int j = 0; j < m; ++j) {
        if (owner_e[j] < 0) continue;
        for (int v : {g.edges[j].u, g.edges[j].v})
            if (owner_v[v] >= 0 && owner_v[v] != owner_e[j])
                throw ContractViolation("piece edge touches a vertex of another piece");
    }
    // Size conservation: sum of per-piece edge counts is at most 2m.
    long total = 0;
    idx = 0;
    for (const auto& [r, piece] : pieces) {
        std::vector<char> pv(n, 0), pe(m, 0);
        for (int x : piece.first) {
            if (x < n)
                pv[x] = 1;
            else
                pe[x - n] = 1;
        }
        for (int j = 0; j < m; ++j) {
            const Edge& e = g.edges[j];
            if (pe[j] || pv[e.u] || pv[e.v]) ++total;
        }
        ++idx;
    }
    if (total > 2L * m)
        throw ContractViolation("element piece size conservation violated: sum exceeds 2m");
}

ElementIsolatingOutput element_isolating_cuts(const ElementInstance& inst,
                                              const std::vector<int>& R) {
    if (R.size() < 2) throw InvalidArgument("element_isolating_cuts needs |R| >= 2");
    require_terminals(inst, R, "element isolating cuts");
    ElementCutOracle oracle(inst);
    IsolatingResult res = isolating_cuts(oracle, R);
    return {std::move(res.cuts), std::move(res.log)};
}

CutCertificate element_global_conn(const ElementInstance& inst, const std::vector<int>& R,
                                   const SamplingParams& params, int threads) {
    if (R.size() < 2) throw InvalidArgument("element_global_conn needs |R| >= 2");
    require_terminals(inst, R, "element_global_conn");
    ElementCutOracle oracle(inst);
    return global_min_cut_sampling(oracle, R, params, threads).best;
}

}  // namespace conncut
