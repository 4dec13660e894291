#include "conncut/error.hpp"
#include "conncut/oracles.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace conncut;
using namespace conncut::testing;

TEST_CASE("brute edge cut on fixtures") {
    auto g = dumbbell();
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    auto r = brute_edge_cut(g, all);
    CHECK(r.value == Weight(1));
    CHECK(r.side == std::vector<int>{0, 1, 2});

    auto k4 = complete(4);
    CHECK(brute_edge_cut(k4, {0, 1, 2, 3}).value == Weight(3));

    auto p = path3(3, 2);
    CHECK(brute_edge_cut(p, {0, 2}).value == Weight(2));
}

TEST_CASE("brute hyper cut on fixtures") {
    auto h = hyper_triple();
    CHECK(brute_hyper_cut(h, {0, 1, 2, 3}).value == Weight(2));

    Hypergraph single;
    single.n = 3;
    single.hyperedges.push_back({{0, 1, 2}, Weight(5)});
    CHECK(brute_hyper_cut(single, {0, 1}).value == Weight(5));

    Hypergraph disc;
    disc.n = 4;
    disc.hyperedges.push_back({{0, 1}, Weight(2)});
    disc.hyperedges.push_back({{2, 3}, Weight(2)});
    CHECK(brute_hyper_cut(disc, {0, 2}).value == Weight(0));
}

TEST_CASE("brute element cut on fixtures") {
    auto inst = elem_two_path();
    auto r = brute_element_cut(inst, {0}, {1});
    CHECK(r.value == Weight(2));
    CHECK(r.removed == std::vector<int>{2, 3});  // the two non-terminals win ties

    ElementInstance direct;
    direct.graph = make_graph(2, {{0, 1, 3}});
    direct.terminals = {0, 1};
    auto rd = brute_element_cut(direct, {0}, {1});
    CHECK(rd.value == Weight(3));
    CHECK(rd.removed == std::vector<int>{2});  // element id n + 0

    ElementInstance inf;
    inf.graph = make_graph(2, {{0, 1, 1}});
    inf.graph.edges[0].w = Weight::infinite();
    inf.terminals = {0, 1};
    CHECK(brute_element_cut(inf, {0}, {1}).value.is_infinite());
}

TEST_CASE("brute vertex cut on fixtures") {
    auto c5 = cycle(5);
    auto r = brute_vertex_cut(c5);
    REQUIRE(r.has_value());
    CHECK(r->value == Weight(2));

    CHECK(brute_vertex_cut(petersen())->value == Weight(3));
    CHECK(!brute_vertex_cut(complete(4)).has_value());
}

TEST_CASE("stoer-wagner agrees with brute force") {
    CHECK(stoer_wagner(dumbbell()).value == Weight(1));
    CHECK(stoer_wagner(dumbbell()).side == std::vector<int>{0, 1, 2});
    CHECK(stoer_wagner(complete(4)).value == Weight(3));

    Rng rng(4242);
    int done = 0;
    while (done < 40) {
        int n = 3 + static_cast<int>(rng.below(8));
        auto g = random_connected_graph(rng, n, 9);
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        CHECK(stoer_wagner(g).value == brute_edge_cut(g, all).value);
        ++done;
    }
}

TEST_CASE("oracle caps are hard errors") {
    auto g = complete(13);
    CHECK_THROWS_AS(brute_vertex_cut(g), LimitExceeded);
}
