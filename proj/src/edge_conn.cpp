#include "conncut/edge_conn.hpp"

#include <algorithm>
#include <map>

#include "conncut/error.hpp"
#include "conncut/maxflow.hpp"

namespace conncut {

namespace {

// Vertices 0..n-1, super source n, super sink n+1.
FlowNetwork build_st_network(const WeightedGraph& g, const std::vector<int>& S,
                             const std::vector<int>& T) {
    FlowNetwork net(g.n + 2);
    net.source = g.n;
    net.sink = g.n + 1;
    for (const Edge& e : g.edges) net.add_edge(e.u, e.v, e.w);
    for (int s : S) net.add_arc(net.source, s, Weight::infinite());
    for (int t : T) net.add_arc(t, net.sink, Weight::infinite());
    return net;
}

CutCertificate cert_from_side(const WeightedGraph& g, std::vector<int> side, Weight value) {
    CutCertificate cert;
    cert.problem = Problem::edge_cut;
    cert.value = value;
    std::vector<char> in(g.n, 0);
    for (int v : side) in[v] = 1;
    std::vector<int> other;
    for (int v = 0; v < g.n; ++v)
        if (!in[v]) other.push_back(v);
    Weight check;
    for (int j = 0; j < g.m(); ++j) {
        const Edge& e = g.edges[j];
        if (in[e.u] != in[e.v]) {
            cert.removed.push_back({ObjectRef::edge, e.u, e.v});
            check += e.w;
        }
    }
    if (!value.is_infinite() && check != value)
        throw ContractViolation("edge cut reconstruction does not match flow value");
    cert.side_pair = SetPair(std::move(side), std::move(other), g.n);
    return cert;
}

}  // namespace

CutCertificate min_st_edge_cut(const WeightedGraph& g, const std::vector<int>& S,
                               const std::vector<int>& T) {
    if (S.empty() || T.empty()) throw InvalidArgument("min_st_edge_cut needs nonempty sides");
    if (!sets_disjoint(S, T)) throw InvalidArgument("min_st_edge_cut: sides intersect");
    FlowNetwork net = build_st_network(g, S, T);
    FlowResult fr = max_flow(net);

    if (fr.value.is_infinite()) {
        // No finite separator; report the terminal pair itself.
        CutCertificate cert;
        cert.problem = Problem::edge_cut;
        cert.value = Weight::infinite();
        std::vector<int> s(S), t(T);
        std::sort(s.begin(), s.end());
        std::sort(t.begin(), t.end());
        cert.side_pair = SetPair(std::move(s), std::move(t), g.n);
        cert.meta.oracle_calls = 1;
        return cert;
    }
    std::vector<int> side;
    for (int v = 0; v < g.n; ++v)
        if (fr.source_side[v]) side.push_back(v);
    CutCertificate cert = cert_from_side(g, std::move(side), fr.value);
    cert.meta.oracle_calls = 1;
    return cert;
}

Contraction contract_outside(const WeightedGraph& g, const std::vector<int>& keep) {
    if (keep.empty()) throw InvalidArgument("contract_outside: keep set empty");
    if (static_cast<int>(keep.size()) >= g.n)
        throw InvalidArgument("contract_outside: keep must be a proper subset");
    Contraction c;
    c.to_sub.assign(g.n, -1);
    int next = 0;
    for (int v : keep) c.to_sub[v] = next++;
    c.sink = next;
    c.from_sub.assign(next + 1, -1);
    for (int v : keep) c.from_sub[c.to_sub[v]] = v;

    c.graph.n = next + 1;
    c.graph.precision = g.precision;
    c.graph.vertex_weights.assign(c.graph.n, Weight(g.precision));
    for (int v : keep) c.graph.vertex_weights[c.to_sub[v]] = g.vertex_weights[v];

    std::map<std::pair<int, int>, Weight> merged;
    for (const Edge& e : g.edges) {
        int u = c.to_sub[e.u] >= 0 ? c.to_sub[e.u] : c.sink;
        int v = c.to_sub[e.v] >= 0 ? c.to_sub[e.v] : c.sink;
        if (u == v) continue;  // edge fully outside, or self-loop at sink
        if (u > v) std::swap(u, v);
        merged[{u, v}] += e.w;
    }
    for (auto& [uv, w] : merged) c.graph.edges.push_back({uv.first, uv.second, w});
    return c;
}

OuterCut EdgeCutOracle::outer_cut(const SetPair& terminals) {
    const std::vector<int>& S = terminals.first;
    const std::vector<int>& T = terminals.second;
    FlowNetwork net = build_st_network(g_, S, T);
    FlowResult fr = max_flow(net);

    auto bipartition_of = [&](const std::vector<int>& side) {
        std::vector<char> in(g_.n, 0);
        for (int v : side) in[v] = 1;
        std::vector<int> rest;
        for (int v = 0; v < g_.n; ++v)
            if (!in[v]) rest.push_back(v);
        return SetPair(side, rest, g_.n);
    };
    if (fr.value.is_infinite()) {
        // Every separating bipartition costs Infinite, so all are minimum;
        // the minimal representatives keep exactly the terminal sides.
        return {bipartition_of(S), bipartition_of(T), fr.value};
    }
    std::vector<int> src_side, sink_side;
    for (int v = 0; v < g_.n; ++v) {
        if (fr.source_side[v]) src_side.push_back(v);
        if (fr.sink_side[v]) sink_side.push_back(v);
    }
    return {bipartition_of(src_side), bipartition_of(sink_side), fr.value};
}

CutCertificate EdgeCutOracle::inner_cut(int r, const SetPair& piece, RunLog* log) {
    (void)log;
    Contraction c = contract_outside(g_, piece.first);
    CutCertificate sub = min_st_edge_cut(c.graph, {c.to_sub[r]}, {c.sink});
    if (sub.value.is_infinite()) {
        CutCertificate cert;
        cert.problem = Problem::edge_cut;
        cert.value = Weight::infinite();
        std::vector<int> rest;
        for (int v = 0; v < g_.n; ++v)
            if (v != r) rest.push_back(v);
        cert.side_pair = SetPair({r}, std::move(rest), g_.n);
        return cert;
    }
    std::vector<int> side;
    for (int x : sub.side_pair.first)
        if (x != c.sink) side.push_back(c.from_sub[x]);
    return cert_from_side(g_, std::move(side), sub.value);
}

void EdgeCutOracle::check_pieces(const std::map<int, SetPair>& pieces, RunLog* log) {
    long total = 0;
    for (const auto& [r, piece] : pieces) {
        std::vector<char> in(g_.n, 0);
        for (int v : piece.first) in[v] = 1;
        long count = 0;
        for (const Edge& e : g_.edges)
            if (in[e.u] || in[e.v]) ++count;  // inside or crossing
        if (log) {
            PieceStat st;
            st.r = r;
            st.n_inner = static_cast<long>(piece.first.size());
            st.m_r = count;
            log->pieces.push_back(st);
        }
        total += count;
    }
    if (total > 2L * g_.m())
        throw ContractViolation("edge piece size conservation violated: sum exceeds 2m");
}

IsolatingCutsOutput edge_isolating_cuts(const WeightedGraph& g, const std::vector<int>& R) {
    EdgeCutOracle oracle(g);
    IsolatingResult res = isolating_cuts(oracle, R);
    return {std::move(res.cuts), std::move(res.log)};
}

CutCertificate steiner_min_cut(const WeightedGraph& g, const std::vector<int>& R,
                               const SamplingParams& params, int threads) {
    if (R.size() < 2) throw InvalidArgument("steiner_min_cut needs |R| >= 2");
    auto comp = g.components();
    int rc = comp[R[0]];
    bool split = false;
    for (int r : R)
        if (comp[r] != rc) split = true;
    if (split) {
        int target = comp[*std::min_element(R.begin(), R.end())];
        std::vector<int> side;
        for (int v = 0; v < g.n; ++v)
            if (comp[v] == target) side.push_back(v);
        CutCertificate cert =
            [&] {
                CutCertificate c0;
                c0.problem = Problem::edge_cut;
                c0.value = Weight::zero();
                std::vector<int> other;
                for (int v = 0; v < g.n; ++v)
                    if (comp[v] != target) other.push_back(v);
                c0.side_pair = SetPair(side, other, g.n);
                return c0;
            }();
        cert.meta.seed = params.seed;
        return cert;
    }
    EdgeCutOracle oracle(g);
    return global_min_cut_sampling(oracle, R, params, threads).best;
}

}  // namespace conncut
