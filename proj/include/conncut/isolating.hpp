#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "conncut/certificate.hpp"
#include "conncut/setpair.hpp"
#include "conncut/weight.hpp"

namespace conncut {

/// Per-piece bookkeeping filled in by oracle implementations. Field use
/// varies by family: element connectivity records vertex/edge counts and
/// the flow engine's longest augmenting path; hypergraphs record total
/// piece size.
struct PieceStat {
    int r = -1;
    long n_r = 0;        // vertices of piece + boundary
    long m_r = 0;        // edges of piece + boundary
    long n_inner = 0;    // vertices strictly inside the piece
    long p_r = 0;        // hypergraph piece total size
    int max_aug_len = 0;
};

/// Log of one isolating-cuts run.
struct RunLog {
    long outer_calls = 0;
    long inner_calls = 0;
    std::vector<PieceStat> pieces;
};

/// Both extremal representatives of a minimum (S, T)-cut: `cut` has the
/// inclusion-minimal first component containing S; `reverse_cut` is the
/// minimum (T, S)-cut with the inclusion-minimal first component
/// containing T. The two first components never intersect, which is what
/// keeps the uncrossed pieces disjoint.
struct OuterCut {
    SetPair cut;
    SetPair reverse_cut;
    Weight value;
};

/// Cut oracle contract for a symmetric pairwise-disjoint crossing lattice
/// over a ground set. outer_cut must return f-minimum cuts in both
/// extremal orientations. inner_cut must return an f-minimum (r, .)-cut
/// that precedes the supplied piece, as a full certificate.
class CutOracle {
public:
    virtual ~CutOracle() = default;
    virtual int ground_size() const = 0;
    virtual OuterCut outer_cut(const SetPair& terminals) = 0;
    virtual CutCertificate inner_cut(int r, const SetPair& piece, RunLog* log) = 0;
    /// Structural check hook, called once per run with all pieces.
    virtual void check_pieces(const std::map<int, SetPair>& pieces, RunLog* log) { (void)pieces; (void)log; }
};

/// The ceil(log2 |R|) binary partition schedule: partition i puts the
/// elements whose index has bit i clear on the first side. Every pair of
/// distinct elements is separated by at least one partition.
std::vector<SetPair> binary_partitions(const std::vector<int>& R, int ground);

/// Intersect the oracle cuts, transposed so r sits in the first
/// component. cuts[i] must cut binary_partitions(R)[i]. The resulting
/// pieces have pairwise-disjoint first components (checked).
std::map<int, SetPair> isolating_components(const std::vector<int>& R,
                                            const std::vector<std::pair<SetPair, Weight>>& cuts,
                                            int ground);

/// Same, but with both extremal representatives available: a terminal on
/// the second side of a partition is oriented through the reverse cut
/// instead of the plain transpose, which keeps pieces small.
std::map<int, SetPair> isolating_components_extremal(const std::vector<int>& R,
                                                     const std::vector<OuterCut>& cuts,
                                                     int ground);

struct IsolatingResult {
    std::map<int, CutCertificate> cuts;
    std::map<int, SetPair> pieces;
    RunLog log;
};

/// Isolating cuts for every r in R with exactly ceil(log2 |R|) outer
/// oracle calls followed by |R| inner calls on the pieces.
IsolatingResult isolating_cuts(CutOracle& oracle, const std::vector<int>& R);

struct SamplingParams {
    uint64_t seed = 0;
    double delta = 1e-3;  // failure probability target
    double c = 4.0;       // trial multiplier
};

/// Number of independent trials run at each sampling scale.
long trials_per_scale(const SamplingParams& params);

struct SamplingOutcome {
    CutCertificate best;
    long trials = 0;
    long oracle_calls = 0;
};

/// Global minimum cut by downsampling: for every scale l in {1, 2, 4, ...}
/// up to |R|, run trials_per_scale independent trials, each keeping every
/// r with probability 1/l and running isolating cuts on the survivors.
/// Samples with fewer than two terminals count as failed trials. The best
/// certificate under (value, |first|, lexicographic first) wins;
/// deterministic for fixed (seed, input) and any thread count.
SamplingOutcome global_min_cut_sampling(CutOracle& oracle, const std::vector<int>& R,
                                        const SamplingParams& params, int threads = 1);

}  // namespace conncut
