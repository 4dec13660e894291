#pragma once

#include "conncut/certificate.hpp"
#include "conncut/instance.hpp"
#include "conncut/isolating.hpp"

namespace conncut {

/// Minimum weight edge cut separating S from T, with the inclusion-minimal
/// source side. Standard reduction: antiparallel arc pairs per edge plus
/// an infinite super source/sink.
CutCertificate min_st_edge_cut(const WeightedGraph& g, const std::vector<int>& S,
                               const std::vector<int>& T);

struct Contraction {
    WeightedGraph graph;
    int sink = -1;                 // the merged outside vertex
    std::vector<int> to_sub;       // original id -> contracted id, -1 if merged
    std::vector<int> from_sub;     // contracted id -> original id, -1 for sink
};

/// Merge all vertices outside `keep` into a single sink vertex; parallel
/// edges merge additively, internal outside edges vanish.
Contraction contract_outside(const WeightedGraph& g, const std::vector<int>& keep);

/// CutOracle over the bipartition lattice of V with the edge-cut
/// objective. Inner subproblems contract the piece complement.
class EdgeCutOracle : public CutOracle {
public:
    explicit EdgeCutOracle(const WeightedGraph& g) : g_(g) {}
    int ground_size() const override { return g_.n; }
    OuterCut outer_cut(const SetPair& terminals) override;
    CutCertificate inner_cut(int r, const SetPair& piece, RunLog* log) override;
    void check_pieces(const std::map<int, SetPair>& pieces, RunLog* log) override;

private:
    const WeightedGraph& g_;
};

struct IsolatingCutsOutput {
    std::map<int, CutCertificate> cuts;
    RunLog log;
};

/// Minimum (r, R-r) edge cut for every r in R.
IsolatingCutsOutput edge_isolating_cuts(const WeightedGraph& g, const std::vector<int>& R);

/// Minimum weight edge cut with both sides meeting R (Steiner minimum
/// cut). Disconnected inputs short-circuit to a zero cut along a
/// component that splits R.
CutCertificate steiner_min_cut(const WeightedGraph& g, const std::vector<int>& R,
                               const SamplingParams& params, int threads = 1);

}  // namespace conncut
