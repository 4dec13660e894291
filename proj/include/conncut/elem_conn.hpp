#pragma once

#include "conncut/certificate.hpp"
#include "conncut/instance.hpp"
#include "conncut/isolating.hpp"
#include "conncut/maxflow.hpp"

namespace conncut {

/// Split-graph reduction for element cuts: every non-terminal v becomes
/// v_in -> v_out with capacity w(v); an edge {u,v} becomes the arcs
/// out(u) -> in(v) and out(v) -> in(u) with capacity w(uv); terminals are
/// single unsplit nodes. Infinite super source/sink attach to S and Z.
/// arc_element maps forward arc ids to the element they price (-1 for
/// auxiliary arcs and all reverse arcs).
struct ElementNetwork {
    FlowNetwork net;
    std::vector<int> arc_element;
    std::vector<int> node_in;   // per vertex: entry node
    std::vector<int> node_out;  // per vertex: exit node (== entry for terminals)
};

ElementNetwork element_split_network(const ElementInstance& inst, const std::vector<int>& S,
                                     const std::vector<int>& Z);

/// Minimum weight element cut separating terminal sets S and Z, as a
/// certificate over the element ground set (vertices then edges).
CutCertificate element_min_cut(const ElementInstance& inst, const std::vector<int>& S,
                               const std::vector<int>& Z);

/// CutOracle over the element lattice: pairs of disjoint element sets
/// with no cross adjacency that cover the terminals. Inner subproblems
/// take the piece plus its boundary, merge every boundary exit into an
/// auxiliary sink, and solve one small split-graph flow whose augmenting
/// paths have length at most 2 * (piece vertices) + 2.
class ElementCutOracle : public CutOracle {
public:
    explicit ElementCutOracle(const ElementInstance& inst) : inst_(inst) {}
    int ground_size() const override { return inst_.element_count(); }
    std::pair<SetPair, Weight> outer_cut(const SetPair& terminals) override;
    CutCertificate inner_cut(int r, const SetPair& piece, RunLog* log) override;
    void check_pieces(const std::map<int, SetPair>& pieces, RunLog* log) override;

private:
    const ElementInstance& inst_;
};

struct ElementIsolatingOutput {
    std::map<int, CutCertificate> cuts;
    RunLog log;  // pieces carry (n_r, m_r, n_inner, max_aug_len) per terminal
};

/// Minimum weight element (r, R-r)-cut for every r in R (R within T).
ElementIsolatingOutput element_isolating_cuts(const ElementInstance& inst,
                                              const std::vector<int>& R);

/// Global / subset element connectivity lambda(R) by sampling.
CutCertificate element_global_conn(const ElementInstance& inst, const std::vector<int>& R,
                                   const SamplingParams& params, int threads = 1);

}  // namespace conncut
