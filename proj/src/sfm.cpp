#include "conncut/sfm.hpp"

#include <algorithm>

#include "conncut/error.hpp"
#include "conncut/rng.hpp"

namespace conncut {

namespace {

uint32_t mask_of(const std::vector<int>& s) {
    uint32_t m = 0;
    for (int v : s) m |= uint32_t(1) << v;
    return m;
}

std::vector<int> set_of(uint32_t mask, int ground) {
    std::vector<int> out;
    for (int v = 0; v < ground; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

void audit(const SetFunction& f, int ground, const SfmOptions& opts) {
    Rng rng(opts.audit_seed);
    uint32_t full = ground == 32 ? ~uint32_t(0) : (uint32_t(1) << ground) - 1;
    for (int it = 0; it < opts.audit_samples; ++it) {
        uint32_t x = static_cast<uint32_t>(rng.next()) & full;
        uint32_t y = static_cast<uint32_t>(rng.next()) & full;
        if (f(x) != f(full & ~x))
            throw ContractViolation("set function is not symmetric");
        if (f(x) + f(y) < f(x | y) + f(x & y))
            throw ContractViolation("set function is not submodular");
    }
}

CutCertificate make_cert(uint32_t mask, int ground, Weight value, long evals) {
    CutCertificate cert;
    cert.problem = Problem::sfm_cut;
    cert.value = value;
    std::vector<int> first = set_of(mask, ground), second;
    for (int v = 0; v < ground; ++v)
        if (!(mask >> v & 1)) second.push_back(v);
    cert.side_pair = SetPair(std::move(first), std::move(second), ground);
    cert.meta.oracle_calls = evals;
    return cert;
}

}  // namespace

CutCertificate brute_sfm_cut(const SetFunction& f, const std::vector<int>& A,
                             const std::vector<int>& B, int ground, const SfmOptions& opts) {
    if (ground < 2) throw InvalidArgument("brute_sfm_cut needs a ground set of at least 2");
    if (ground > opts.max_ground) throw LimitExceeded("brute_sfm_cut: ground set too large");
    if (!sets_disjoint(A, B)) throw InvalidArgument("brute_sfm_cut: A and B intersect");
    audit(f, ground, opts);

    uint32_t full = (uint32_t(1) << ground) - 1;
    uint32_t amask = mask_of(A), bmask = mask_of(B);
    long evals = 0;
    bool found = false;
    Weight best;
    uint32_t best_mask = 0;
    std::vector<uint32_t> minimizers;
    for (uint32_t x = 0; x <= full; ++x) {
        if ((x & amask) != amask || (x & bmask) != 0) continue;
        if (x == 0 || x == full) continue;  // trivial sides never count
        Weight v = f(x);
        ++evals;
        if (!found || v < best) {
            best = v;
            best_mask = x;
            minimizers.assign(1, x);
            found = true;
        } else if (v == best) {
            minimizers.push_back(x);
            // Tie-break by (|X|, lex on sorted ids) == (popcount, value of mask read upward).
            int pc_new = __builtin_popcount(x), pc_old = __builtin_popcount(best_mask);
            if (pc_new < pc_old || (pc_new == pc_old && x < best_mask)) best_mask = x;
        }
    }
    if (!found) throw InvalidArgument("brute_sfm_cut: constraint set is empty");

    if (!A.empty() && !B.empty()) {
        uint32_t inter = full;
        for (uint32_t x : minimizers) inter &= x;
        Weight vi = f(inter);
        ++evals;
        if (vi != best)
            throw ContractViolation("intersection of minimizers is not minimum; function not submodular");
        return make_cert(inter, ground, best, evals);
    }
    return make_cert(best_mask, ground, best, evals);
}

SymSubmodCutOracle::SymSubmodCutOracle(SetFunction f, int ground, SfmOptions opts)
    : f_(std::move(f)), ground_(ground), opts_(opts) {
    if (ground_ > opts_.max_ground) throw LimitExceeded("ground set too large for the SFM oracle");
    audit(f_, ground_, opts_);
}

std::pair<SetPair, Weight> SymSubmodCutOracle::outer_cut(const SetPair& terminals) {
    CutCertificate cert = brute_sfm_cut(f_, terminals.first, terminals.second, ground_, opts_);
    evals_ += cert.meta.oracle_calls;
    return {cert.side_pair, cert.value};
}

CutCertificate SymSubmodCutOracle::inner_cut(int r, const SetPair& piece, RunLog* log) {
    (void)log;
    // Contract everything outside the piece: admissible sides are the
    // subsets of the piece containing r, and f evaluates them unchanged.
    uint32_t pmask = mask_of(piece.first);
    uint32_t rbit = uint32_t(1) << r;
    uint32_t free = pmask & ~rbit;
    bool found = false;
    Weight best;
    uint32_t best_mask = 0;
    // Enumerate submasks of `free` plus the forced r bit.
    uint32_t sub = free;
    for (;;) {
        uint32_t x = sub | rbit;
        Weight v = f_(x);
        ++evals_;
        if (!found || v < best ||
            (v == best && (__builtin_popcount(x) < __builtin_popcount(best_mask) ||
                           (__builtin_popcount(x) == __builtin_popcount(best_mask) && x < best_mask)))) {
            best = v;
            best_mask = x;
            found = true;
        }
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    return make_cert(best_mask, ground_, best, 0);
}

}  // namespace conncut
