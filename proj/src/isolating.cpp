#include "conncut/isolating.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "conncut/error.hpp"
#include "conncut/rng.hpp"

namespace conncut {

bool cert_better(const CutCertificate& a, const CutCertificate& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.side_pair.first.size() != b.side_pair.first.size())
        return a.side_pair.first.size() < b.side_pair.first.size();
    return cmp_lex(a.side_pair.first, b.side_pair.first) < 0;
}

std::vector<SetPair> binary_partitions(const std::vector<int>& R, int ground) {
    if (R.size() < 2) throw InvalidArgument("binary_partitions requires at least two elements");
    int k = 0;
    while ((size_t(1) << k) < R.size()) ++k;
    std::vector<SetPair> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        std::vector<int> s, t;
        for (size_t j = 0; j < R.size(); ++j)
            ((j >> i) & 1 ? t : s).push_back(R[j]);
        out.emplace_back(std::move(s), std::move(t), ground);
    }
    return out;
}

namespace {

std::map<int, SetPair> assemble_pieces(const std::vector<int>& R,
                                       const std::vector<OuterCut>& cuts, int ground) {
    auto partitions = binary_partitions(R, ground);
    if (cuts.size() != partitions.size())
        throw InvalidArgument("isolating_components: cut count does not match partition schedule");
    for (size_t i = 0; i < cuts.size(); ++i) {
        if (!conncut::cuts(cuts[i].cut, partitions[i]))
            throw ContractViolation("outer oracle returned a set-pair that does not cut its partition");
        if (!conncut::cuts(cuts[i].reverse_cut, transpose(partitions[i])))
            throw ContractViolation("reverse outer cut does not cut the transposed partition");
    }

    std::map<int, SetPair> pieces;
    for (int r : R) {
        SetPair acc;
        bool started = false;
        for (const OuterCut& oc : cuts) {
            SetPair oriented;
            if (oc.cut.contains_first(r))
                oriented = oc.cut;
            else if (oc.reverse_cut.contains_first(r))
                oriented = oc.reverse_cut;
            else
                throw ContractViolation("outer cut assigns terminal to neither side");
            acc = started ? join(acc, oriented) : oriented;
            started = true;
        }
        pieces.emplace(r, std::move(acc));
    }

    // First components must be pairwise disjoint across pieces.
    std::vector<char> mark(ground, 0);
    for (const auto& [r, piece] : pieces)
        for (int x : piece.first) {
            if (mark[x]) throw ContractViolation("piece first components are not pairwise disjoint");
            mark[x] = 1;
        }
    return pieces;
}

}  // namespace

std::map<int, SetPair> isolating_components(const std::vector<int>& R,
                                            const std::vector<std::pair<SetPair, Weight>>& cuts,
                                            int ground) {
    std::vector<OuterCut> expanded;
    expanded.reserve(cuts.size());
    for (const auto& [w, value] : cuts) expanded.push_back({w, transpose(w), value});
    return assemble_pieces(R, expanded, ground);
}

std::map<int, SetPair> isolating_components_extremal(const std::vector<int>& R,
                                                     const std::vector<OuterCut>& cuts,
                                                     int ground) {
    return assemble_pieces(R, cuts, ground);
}

IsolatingResult isolating_cuts(CutOracle& oracle, const std::vector<int>& R) {
    if (R.size() < 2) throw InvalidArgument("isolating_cuts requires at least two terminals");
    int ground = oracle.ground_size();

    IsolatingResult res;
    auto partitions = binary_partitions(R, ground);
    std::vector<OuterCut> cuts;
    cuts.reserve(partitions.size());
    for (const SetPair& part : partitions) {
        cuts.push_back(oracle.outer_cut(part));
        ++res.log.outer_calls;
    }
    res.pieces = isolating_components_extremal(R, cuts, ground);
    oracle.check_pieces(res.pieces, &res.log);
    for (int r : R) {
        res.cuts.emplace(r, oracle.inner_cut(r, res.pieces.at(r), &res.log));
        ++res.log.inner_calls;
    }
    return res;
}

long trials_per_scale(const SamplingParams& params) {
    if (!(params.delta > 0.0 && params.delta < 1.0))
        throw InvalidArgument("delta must lie in (0, 1)");
    if (params.c < 1.0) throw InvalidArgument("trial multiplier must be >= 1");
    return static_cast<long>(std::ceil(params.c * std::log(1.0 / params.delta)));
}

namespace {

// Run `count` jobs with deterministic per-index results, optionally on a
// small thread pool. Results are consumed in index order by the caller.
template <typename F>
void parallel_for(long count, int threads, F&& job) {
    if (threads <= 1 || count <= 1) {
        for (long i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<long> next{0};
    auto worker = [&] {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= count) return;
            job(i);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<long>(threads, count);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

SamplingOutcome global_min_cut_sampling(CutOracle& oracle, const std::vector<int>& R,
                                        const SamplingParams& params, int threads) {
    if (R.size() < 2) throw InvalidArgument("global min cut requires at least two terminals");

    int k = 0;
    while ((size_t(1) << k) < R.size()) ++k;
    long per_scale = trials_per_scale(params);
    long total_trials = static_cast<long>(k + 1) * per_scale;

    struct TrialOut {
        bool has = false;
        CutCertificate cert;
        long outer = 0, inner = 0;
    };
    std::vector<TrialOut> outs(total_trials);

    parallel_for(total_trials, threads, [&](long idx) {
        long scale_idx = idx / per_scale;
        long trial_idx = idx % per_scale;
        uint64_t ell = uint64_t(1) << scale_idx;
        Rng rng(derive_seed(params.seed, static_cast<uint64_t>(scale_idx), static_cast<uint64_t>(trial_idx)));
        std::vector<int> sampled;
        for (int r : R)
            if (rng.chance(1, ell)) sampled.push_back(r);
        if (sampled.size() < 2) return;  // failed trial
        IsolatingResult iso = isolating_cuts(oracle, sampled);
        TrialOut& out = outs[idx];
        out.outer = iso.log.outer_calls;
        out.inner = iso.log.inner_calls;
        for (auto& [r, cert] : iso.cuts) {
            if (!out.has || cert_better(cert, out.cert)) {
                out.cert = cert;
                out.has = true;
            }
        }
    });

    SamplingOutcome outcome;
    outcome.trials = total_trials;
    bool have = false;
    for (const TrialOut& t : outs) {
        outcome.oracle_calls += t.outer + t.inner;
        if (t.has && (!have || cert_better(t.cert, outcome.best))) {
            outcome.best = t.cert;
            have = true;
        }
    }
    if (!have)
        throw ContractViolation("sampling produced no usable trial; caller must handle tiny terminal sets");
    outcome.best.meta.seed = params.seed;
    outcome.best.meta.trials = outcome.trials;
    outcome.best.meta.oracle_calls = outcome.oracle_calls;
    return outcome;
}

}  // namespace conncut
