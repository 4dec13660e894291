#pragma once

#include "conncut/certificate.hpp"
#include "conncut/instance.hpp"
#include "conncut/isolating.hpp"
#include "conncut/maxflow.hpp"

namespace conncut {

/// Standard hypergraph cut reduction: per hyperedge e two auxiliary nodes
/// joined by an arc of capacity w(e); members attach with infinite arcs;
/// infinite super source/sink for S and T. Vertices keep ids 0..n-1,
/// hyperedge j uses nodes n+2j (in) and n+2j+1 (out).
FlowNetwork hypergraph_to_flow(const Hypergraph& h, const std::vector<int>& S,
                               const std::vector<int>& T);

/// Minimum S-T hypergraph cut with inclusion-minimal source side; removed
/// lists the crossing hyperedges.
CutCertificate hyper_min_st_cut(const Hypergraph& h, const std::vector<int>& S,
                                const std::vector<int>& T);

/// CutOracle over the bipartition lattice of the vertex set with the
/// hypergraph cut objective. Inner subproblems shrink the piece
/// complement into one vertex, de-duplicating members and dropping
/// hyperedges reduced below two members.
class HyperCutOracle : public CutOracle {
public:
    explicit HyperCutOracle(const Hypergraph& h) : h_(h) {}
    int ground_size() const override { return h_.n; }
    OuterCut outer_cut(const SetPair& terminals) override;
    CutCertificate inner_cut(int r, const SetPair& piece, RunLog* log) override;
    void check_pieces(const std::map<int, SetPair>& pieces, RunLog* log) override;

private:
    const Hypergraph& h_;
};

struct HyperIsolatingOutput {
    std::map<int, CutCertificate> cuts;
    RunLog log;
};

/// Minimum (r, R-r) hypergraph cut for every r in R.
HyperIsolatingOutput hyper_isolating_cuts(const Hypergraph& h, const std::vector<int>& R);

/// Minimum hypergraph cut separating at least two vertices of R.
CutCertificate hyper_global_min_cut(const Hypergraph& h, const std::vector<int>& R,
                                    const SamplingParams& params, int threads = 1);

}  // namespace conncut
