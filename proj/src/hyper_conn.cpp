#include "conncut/hyper_conn.hpp"

#include <algorithm>

#include "conncut/error.hpp"

namespace conncut {

FlowNetwork hypergraph_to_flow(const Hypergraph& h, const std::vector<int>& S,
                               const std::vector<int>& T) {
    if (S.empty() || T.empty()) throw InvalidArgument("hypergraph cut needs nonempty sides");
    if (!sets_disjoint(S, T)) throw InvalidArgument("hypergraph cut: sides intersect");
    int m = h.m();
    FlowNetwork net(h.n + 2 * m + 2);
    net.source = h.n + 2 * m;
    net.sink = h.n + 2 * m + 1;
    for (int j = 0; j < m; ++j) {
        int a = h.n + 2 * j, b = a + 1;
        net.add_arc(a, b, h.hyperedges[j].w);
        for (int v : h.hyperedges[j].members) {
            net.add_arc(v, a, Weight::infinite());
            net.add_arc(b, v, Weight::infinite());
        }
    }
    for (int s : S) net.add_arc(net.source, s, Weight::infinite());
    for (int t : T) net.add_arc(t, net.sink, Weight::infinite());
    return net;
}

namespace {

CutCertificate hyper_cert_from_side(const Hypergraph& h, std::vector<int> side, Weight value) {
    CutCertificate cert;
    cert.problem = Problem::hyper_cut;
    cert.value = value;
    std::vector<char> in(h.n, 0);
    for (int v : side) in[v] = 1;
    Weight check;
    for (int j = 0; j < h.m(); ++j) {
        bool any_in = false, any_out = false;
        for (int v : h.hyperedges[j].members) (in[v] ? any_in : any_out) = true;
        if (any_in && any_out) {
            cert.removed.push_back({ObjectRef::hyperedge, j, 0});
            check += h.hyperedges[j].w;
        }
    }
    if (!value.is_infinite() && check != value)
        throw ContractViolation("hypergraph cut reconstruction does not match flow value");
    std::vector<int> other;
    for (int v = 0; v < h.n; ++v)
        if (!in[v]) other.push_back(v);
    cert.side_pair = SetPair(std::move(side), std::move(other), h.n);
    return cert;
}

CutCertificate infinite_hyper_cert(const Hypergraph& h, std::vector<int> S, std::vector<int> T) {
    CutCertificate cert;
    cert.problem = Problem::hyper_cut;
    cert.value = Weight::infinite();
    std::sort(S.begin(), S.end());
    std::sort(T.begin(), T.end());
    cert.side_pair = SetPair(std::move(S), std::move(T), h.n);
    return cert;
}

}  // namespace

CutCertificate hyper_min_st_cut(const Hypergraph& h, const std::vector<int>& S,
                                const std::vector<int>& T) {
    FlowNetwork net = hypergraph_to_flow(h, S, T);
    FlowResult fr = max_flow(net);
    if (fr.value.is_infinite()) return infinite_hyper_cert(h, S, T);
    std::vector<int> side;
    for (int v = 0; v < h.n; ++v)
        if (fr.source_side[v]) side.push_back(v);
    CutCertificate cert = hyper_cert_from_side(h, std::move(side), fr.value);
    cert.meta.oracle_calls = 1;
    return cert;
}

OuterCut HyperCutOracle::outer_cut(const SetPair& terminals) {
    FlowNetwork net = hypergraph_to_flow(h_, terminals.first, terminals.second);
    FlowResult fr = max_flow(net);
    auto bipartition_of = [&](const std::vector<int>& side) {
        std::vector<char> in(h_.n, 0);
        for (int v : side) in[v] = 1;
        std::vector<int> rest;
        for (int v = 0; v < h_.n; ++v)
            if (!in[v]) rest.push_back(v);
        return SetPair(side, rest, h_.n);
    };
    if (fr.value.is_infinite())
        return {bipartition_of(terminals.first), bipartition_of(terminals.second), fr.value};
    std::vector<int> src_side, sink_side;
    for (int v = 0; v < h_.n; ++v) {
        if (fr.source_side[v]) src_side.push_back(v);
        if (fr.sink_side[v]) sink_side.push_back(v);
    }
    return {bipartition_of(src_side), bipartition_of(sink_side), fr.value};
}

CutCertificate HyperCutOracle::inner_cut(int r, const SetPair& piece, RunLog* log) {
    // Shrink everything outside the piece into one vertex c.
    const std::vector<int>& keep = piece.first;
    std::vector<int> to_sub(h_.n, -1);
    int next = 0;
    for (int v : keep) to_sub[v] = next++;
    int c = next;

    Hypergraph sub;
    sub.n = next + 1;
    sub.precision = h_.precision;
    std::vector<int> sub_to_orig;  // per surviving hyperedge
    long p_r = 0;
    for (int j = 0; j < h_.m(); ++j) {
        std::vector<int> mem;
        bool outside = false;
        for (int v : h_.hyperedges[j].members) {
            if (to_sub[v] >= 0)
                mem.push_back(to_sub[v]);
            else
                outside = true;
        }
        if (outside) mem.push_back(c);
        std::sort(mem.begin(), mem.end());
        mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
        if (mem.size() < 2) continue;
        p_r += static_cast<long>(mem.size());
        sub.hyperedges.push_back({std::move(mem), h_.hyperedges[j].w});
        sub_to_orig.push_back(j);
    }
    if (log) {
        PieceStat st;
        st.r = r;
        st.n_inner = static_cast<long>(keep.size());
        st.p_r = p_r;
        log->pieces.push_back(st);
    }

    CutCertificate subcert = hyper_min_st_cut(sub, {to_sub[r]}, {c});
    if (subcert.value.is_infinite()) {
        std::vector<int> rest;
        for (int v = 0; v < h_.n; ++v)
            if (v != r) rest.push_back(v);
        return infinite_hyper_cert(h_, {r}, rest);
    }
    std::vector<int> side;
    for (int x : subcert.side_pair.first)
        if (x != c) side.push_back(keep[x]);
    return hyper_cert_from_side(h_, std::move(side), subcert.value);
}

void HyperCutOracle::check_pieces(const std::map<int, SetPair>& pieces, RunLog* log) {
    (void)log;
    long total = 0;
    for (const auto& [r, piece] : pieces) {
        std::vector<char> in(h_.n, 0);
        for (int v : piece.first) in[v] = 1;
        for (const Hyperedge& e : h_.hyperedges) {
            long inside = 0;
            bool outside = false;
            for (int v : e.members) {
                if (in[v])
                    ++inside;
                else
                    outside = true;
            }
            if (inside == 0) continue;
            long sz = inside + (outside ? 1 : 0);
            if (sz >= 2) total += sz;
        }
    }
    long bound = 2 * h_.total_size() + static_cast<long>(pieces.size());
    if (total > bound)
        throw ContractViolation("hypergraph piece size conservation violated: sum exceeds 2p + |R|");
}

HyperIsolatingOutput hyper_isolating_cuts(const Hypergraph& h, const std::vector<int>& R) {
    HyperCutOracle oracle(h);
    IsolatingResult res = isolating_cuts(oracle, R);
    return {std::move(res.cuts), std::move(res.log)};
}

CutCertificate hyper_global_min_cut(const Hypergraph& h, const std::vector<int>& R,
                                    const SamplingParams& params, int threads) {
    if (R.size() < 2) throw InvalidArgument("hyper_global_min_cut needs |R| >= 2");
    auto comp = h.components();
    int rc = comp[R[0]];
    bool split = false;
    for (int r : R)
        if (comp[r] != rc) split = true;
    if (split) {
        int target = comp[*std::min_element(R.begin(), R.end())];
        std::vector<int> side;
        for (int v = 0; v < h.n; ++v)
            if (comp[v] == target) side.push_back(v);
        CutCertificate cert = hyper_cert_from_side(h, std::move(side), Weight::zero());
        cert.meta.seed = params.seed;
        return cert;
    }
    HyperCutOracle oracle(h);
    return global_min_cut_sampling(oracle, R, params, threads).best;
}

}  // namespace conncut
