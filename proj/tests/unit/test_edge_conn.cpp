#include "conncut/edge_conn.hpp"
#include "conncut/error.hpp"
#include "conncut/oracles.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace conncut;
using namespace conncut::testing;

namespace {

// Exhaustive minimum (r, R-r) edge cut value.
Weight brute_isolating_value(const WeightedGraph& g, const std::vector<int>& R, int r) {
    Weight best = Weight::infinite();
    for (uint32_t mask = 0; mask < (uint32_t(1) << g.n); ++mask) {
        if (!(mask >> r & 1)) continue;
        bool ok = true;
        for (int q : R)
            if (q != r && (mask >> q & 1)) ok = false;
        if (!ok || mask + 1 == (uint32_t(1) << g.n)) continue;
        Weight v;
        for (const Edge& e : g.edges)
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) v += e.w;
        best = std::min(best, v);
    }
    return best;
}

}  // namespace

TEST_CASE("min s-t edge cut basics") {
    auto g = dumbbell();
    auto cert = min_st_edge_cut(g, {0}, {3});
    CHECK(cert.value == Weight(1));
    CHECK(cert.side_pair.first == std::vector<int>{0, 1, 2});
    REQUIRE(cert.removed.size() == 1);
    CHECK(cert.removed[0] == ObjectRef{ObjectRef::edge, 2, 3});

    auto k4 = complete(4);
    CHECK(min_st_edge_cut(k4, {0}, {1}).value == Weight(3));

    CHECK_THROWS_AS(min_st_edge_cut(g, {0, 3}, {3}), InvalidArgument);
}

TEST_CASE("min s-t edge cut matches brute force on random graphs") {
    Rng rng(31);
    for (int it = 0; it < 60; ++it) {
        int n = 3 + static_cast<int>(rng.below(8));  // n <= 10
        auto g = random_graph(rng, n, 9);
        auto S = random_subset(rng, n, 1);
        std::vector<int> T;
        for (int v = 0; v < n; ++v)
            if (!std::binary_search(S.begin(), S.end(), v)) T.push_back(v);
        if (T.empty()) continue;
        std::vector<int> R = set_union(S, T);
        auto cert = min_st_edge_cut(g, S, T);
        // brute: min over bipartitions separating S from T
        Weight best = Weight::infinite();
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
            bool ok = true;
            for (int s : S)
                if (!(mask >> s & 1)) ok = false;
            for (int t : T)
                if (mask >> t & 1) ok = false;
            if (!ok) continue;
            Weight v;
            for (const Edge& e : g.edges)
                if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) v += e.w;
            best = std::min(best, v);
        }
        CHECK(cert.value == best);
    }
}

TEST_CASE("contract_outside preserves inner cut structure") {
    auto g = dumbbell();
    auto c = contract_outside(g, {0, 1, 2});
    CHECK(c.graph.n == 4);
    CHECK(c.sink == 3);
    // Triangle plus one weight-1 edge from old vertex 2 to the sink.
    REQUIRE(c.graph.m() == 4);
    Weight crossing;
    for (const Edge& e : c.graph.edges)
        if (e.v == c.sink) crossing += e.w;
    CHECK(crossing == Weight(1));

    auto single = contract_outside(g, {2});
    CHECK(single.graph.n == 2);
    REQUIRE(single.graph.m() == 1);
    CHECK(single.graph.edges[0].w == Weight(3));  // weighted degree of vertex 2

    CHECK_THROWS_AS(contract_outside(g, {0, 1, 2, 3, 4, 5}), InvalidArgument);

    // Cut values inside keep are preserved.
    Rng rng(55);
    for (int it = 0; it < 40; ++it) {
        int n = 4 + static_cast<int>(rng.below(5));
        auto rg = random_connected_graph(rng, n, 7);
        auto keep = random_subset(rng, n, 2);
        if (static_cast<int>(keep.size()) == n) keep.pop_back();
        int r = keep[0];
        auto cc = contract_outside(rg, keep);
        auto inner = min_st_edge_cut(cc.graph, {cc.to_sub[r]}, {cc.sink});
        // Equivalent cut in the original graph: min cut separating r from
        // everything outside keep.
        std::vector<int> outside;
        for (int v = 0; v < n; ++v)
            if (!std::binary_search(keep.begin(), keep.end(), v)) outside.push_back(v);
        auto direct = min_st_edge_cut(rg, {r}, outside);
        CHECK(inner.value == direct.value);
    }
}

TEST_CASE("isolating components from explicit cut lists") {
    // Two terminals: the single cut and its transpose become the pieces.
    SetPair w({0, 1}, {2, 3, 4}, 5);
    auto pieces = isolating_components({1, 3}, {{w, Weight(2)}}, 5);
    CHECK(pieces.at(1) == w);
    CHECK(pieces.at(3) == transpose(w));

    // Star with unit leaves: every piece collapses to the leaf itself.
    auto s4 = star(4);
    EdgeCutOracle oracle(s4);
    std::vector<int> R{1, 2, 3, 4};
    auto parts = binary_partitions(R, s4.n);
    std::vector<std::pair<SetPair, Weight>> cuts;
    for (const SetPair& p : parts) cuts.push_back(oracle.outer_cut(p));
    auto pieces2 = isolating_components(R, cuts, s4.n);
    for (int leaf : R) CHECK(pieces2.at(leaf).first == std::vector<int>{leaf});

    // A cut that fails to cut its partition is a contract violation.
    SetPair bogus({2}, {0, 1, 3, 4}, 5);
    CHECK_THROWS_AS(isolating_components({1, 3}, {{bogus, Weight(1)}}, 5), ContractViolation);
}

TEST_CASE("edge isolating cuts: star and dumbbell") {
    auto s4 = star(4);
    auto iso = edge_isolating_cuts(s4, {1, 2, 3, 4});
    CHECK(iso.log.outer_calls == 2);
    for (int leaf = 1; leaf <= 4; ++leaf) {
        const CutCertificate& cert = iso.cuts.at(leaf);
        CHECK(cert.value == Weight(1));
        CHECK(cert.side_pair.first == std::vector<int>{leaf});
        REQUIRE(cert.removed.size() == 1);
        CHECK(cert.removed[0] == ObjectRef{ObjectRef::edge, 0, leaf});
    }

    auto g = dumbbell();
    auto iso2 = edge_isolating_cuts(g, {0, 3});
    CHECK(iso2.log.outer_calls == 1);
    CHECK(iso2.cuts.at(0).value == Weight(1));
    CHECK(iso2.cuts.at(3).value == Weight(1));
}

TEST_CASE("edge isolating cuts match exhaustive minima on random instances") {
    Rng rng(202);
    for (int it = 0; it < 50; ++it) {
        int n = 4 + static_cast<int>(rng.below(9));  // n <= 12
        auto g = random_connected_graph(rng, n, 9);
        auto R = random_subset(rng, n, 2);
        if (R.size() > 6) R.resize(6);
        if (R.size() < 2) continue;
        auto iso = edge_isolating_cuts(g, R);
        size_t k = 0;
        while ((size_t(1) << k) < R.size()) ++k;
        CHECK(iso.log.outer_calls == static_cast<long>(k));
        for (int r : R) CHECK(iso.cuts.at(r).value == brute_isolating_value(g, R, r));
    }
}

TEST_CASE("framework guarantees on pieces") {
    Rng rng(303);
    for (int it = 0; it < 30; ++it) {
        int n = 4 + static_cast<int>(rng.below(7));
        auto g = random_connected_graph(rng, n, 5);
        auto R = random_subset(rng, n, 2);
        EdgeCutOracle oracle(g);
        auto res = isolating_cuts(oracle, R);
        // (1) each piece cuts (r, R - r); (3) disjoint firsts (checked by
        // the driver); sum of first components at most n.
        size_t total = 0;
        for (auto& [r, piece] : res.pieces) {
            CHECK(piece.contains_first(r));
            for (int q : R)
                if (q != r) CHECK(piece.contains_second(q));
            total += piece.first.size();
        }
        CHECK(total <= size_t(n));
        // (2) some minimum (r, R-r) cut Y satisfies Y below the piece.
        for (auto& [r, piece] : res.pieces) {
            Weight best = brute_isolating_value(g, R, r);
            bool witness = false;
            for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << n); ++mask) {
                if (!(mask >> r & 1)) continue;
                bool ok = true;
                for (int q : R)
                    if (q != r && (mask >> q & 1)) ok = false;
                if (!ok) continue;
                Weight v;
                for (const Edge& e : g.edges)
                    if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) v += e.w;
                if (v != best) continue;
                bool below = true;
                for (int x = 0; x < n; ++x)
                    if ((mask >> x & 1) && !piece.contains_first(x)) below = false;
                if (below) witness = true;
            }
            CHECK(witness);
        }
    }
}

TEST_CASE("steiner minimum cut equals brute force and stoer-wagner") {
    auto g = dumbbell();
    SamplingParams params;
    auto all = std::vector<int>{0, 1, 2, 3, 4, 5};
    auto cert = steiner_min_cut(g, all, params);
    CHECK(cert.value == Weight(1));
    CHECK(cert.side_pair.first == std::vector<int>{0, 1, 2});
    CHECK(steiner_min_cut(g, {0, 3}, params).value == Weight(1));
    CHECK(steiner_min_cut(complete(4), {0, 1, 2, 3}, params).value == Weight(3));

    Rng rng(404);
    for (int it = 0; it < 30; ++it) {
        int n = 3 + static_cast<int>(rng.below(8));
        auto rg = random_connected_graph(rng, n, 8);
        auto R = random_subset(rng, n, 2);
        SamplingParams p;
        p.seed = 1000 + it;
        auto c = steiner_min_cut(rg, R, p);
        CHECK(c.value == brute_edge_cut(rg, R).value);
        std::vector<int> allv(n);
        for (int v = 0; v < n; ++v) allv[v] = v;
        auto cg = steiner_min_cut(rg, allv, p);
        CHECK(cg.value == stoer_wagner(rg).value);
    }
}

TEST_CASE("disconnected inputs short-circuit to a zero cut") {
    auto g = make_graph(4, {{0, 1, 5}, {2, 3, 5}});
    auto cert = steiner_min_cut(g, {0, 2}, SamplingParams{});
    CHECK(cert.value == Weight::zero());
    CHECK(cert.removed.empty());
    CHECK(cert.side_pair.first == std::vector<int>{0, 1});
}

TEST_CASE("steiner monotone under terminal set inclusion") {
    Rng rng(505);
    for (int it = 0; it < 25; ++it) {
        int n = 4 + static_cast<int>(rng.below(6));
        auto g = random_connected_graph(rng, n, 6);
        auto R = random_subset(rng, n, 3);
        auto Rsub = R;
        Rsub.resize(2 + rng.below(R.size() - 1));
        // Brute values are exact, so monotonicity is checked exactly.
        CHECK(brute_edge_cut(g, Rsub).value >= brute_edge_cut(g, R).value);
        SamplingParams p;
        p.seed = it;
        CHECK(steiner_min_cut(g, Rsub, p, 1).value >= steiner_min_cut(g, R, p, 1).value);
    }
}
