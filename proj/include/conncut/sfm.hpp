#pragma once

#include <functional>

#include "conncut/certificate.hpp"
#include "conncut/isolating.hpp"

namespace conncut {

/// Evaluation oracle for a set function over a ground set of at most 20
/// elements; bit i of the mask selects element i.
using SetFunction = std::function<Weight(uint32_t)>;

struct SfmOptions {
    int max_ground = 20;       // enumeration cap, hard error beyond
    int audit_samples = 64;    // random symmetry/submodularity probes
    uint64_t audit_seed = 0x5f3759df;
};

/// Exhaustive minimizer of a symmetric submodular set function over
/// {X : A within X within V\B}, excluding the trivial sides when A and B
/// are both empty. When both A and B are nonempty the returned side is
/// the intersection of all minimizers (the minimal minimum cut, itself
/// minimum by submodularity); otherwise ties break by (value, |X|, lex).
/// Symmetry and submodularity are spot-checked on random pairs first.
CutCertificate brute_sfm_cut(const SetFunction& f, const std::vector<int>& A,
                             const std::vector<int>& B, int ground,
                             const SfmOptions& opts = {});

/// CutOracle over the bipartition lattice backed by brute_sfm_cut, so the
/// sampling driver computes global minimum cuts of symmetric submodular
/// functions at enumeration scale. Inner subproblems contract the piece
/// complement into one element, which needs no new evaluation oracle.
class SymSubmodCutOracle : public CutOracle {
public:
    SymSubmodCutOracle(SetFunction f, int ground, SfmOptions opts = {});
    int ground_size() const override { return ground_; }
    std::pair<SetPair, Weight> outer_cut(const SetPair& terminals) override;
    CutCertificate inner_cut(int r, const SetPair& piece, RunLog* log) override;
    long evaluations() const { return evals_; }

private:
    SetFunction f_;
    int ground_;
    SfmOptions opts_;
    long evals_ = 0;
};

}  // namespace conncut
