#pragma once

#include <optional>

#include "conncut/certificate.hpp"
#include "conncut/instance.hpp"

namespace conncut {

struct VCParams {
    double epsilon = 0.1;   // approximation slack, > 0
    uint64_t seed = 0;
    double delta = 1e-3;    // failure probability target
    long max_trials = 200000;
    double c = 4.0;         // round multiplier
};

/// Minimum weight vertex separator between s and t via the split graph
/// (vertices except s,t split with their weight, edges infinite).
/// Adjacent pairs have no separator: value Infinite.
CutCertificate vertex_min_st_cut(const WeightedGraph& g, int s, int t);

/// One terminal-sampling draw: include each v independently with
/// probability min(1, w(v)/mu), then sweep the edges in order and drop
/// the higher-id endpoint of any surviving adjacent pair. The result is
/// always independent; it may have fewer than two vertices.
std::vector<int> sample_terminals(const WeightedGraph& g, Weight mu, uint64_t seed);

/// Element-connectivity view of vertex cuts for an independent terminal
/// set R: edges become infinite, only vertices are removable.
ElementInstance vc_element_instance(const WeightedGraph& g, const std::vector<int>& R);

/// (1+epsilon)-approximate minimum vertex cut: best of all singleton
/// neighborhood cuts and repeated sampled isolating-cut rounds. The
/// returned cut is always feasible (value >= kappa); it is within
/// (1+epsilon) of kappa with probability at least 1 - delta. nullopt
/// when no vertex cut exists (complete graph).
std::optional<CutCertificate> approx_vertex_connectivity(const WeightedGraph& g,
                                                         const VCParams& params, int threads = 1);

/// Exact minimum vertex cut for integer weights: run the approximation
/// with epsilon = 1/(B+1) where B is the best singleton cut.
std::optional<CutCertificate> exact_vertex_connectivity(const WeightedGraph& g, uint64_t seed,
                                                        int threads = 1);

/// Nagamochi-Ibaraki sparsification of an unweighted simple graph: the
/// union of k edge-disjoint maximal spanning forests from one scan.
/// Preserves min(kappa(s,t), k) and min(lambda(s,t), k) for all pairs.
WeightedGraph ni_sparsify(const WeightedGraph& g, int k);

/// Exact vertex connectivity of an unweighted simple graph through the
/// sparsifier with k = minimum degree.
std::optional<CutCertificate> exact_vc_sparse(const WeightedGraph& g, uint64_t seed,
                                              int threads = 1);

}  // namespace conncut
