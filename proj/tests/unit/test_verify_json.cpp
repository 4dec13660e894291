#include "conncut/edge_conn.hpp"
#include "conncut/elem_conn.hpp"
#include "conncut/hyper_conn.hpp"
#include "conncut/jsonio.hpp"
#include "conncut/oracles.hpp"
#include "conncut/parse.hpp"
#include "conncut/verify.hpp"
#include "conncut/vertex_conn.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace conncut;
using namespace conncut::testing;

TEST_CASE("verify accepts the dumbbell bridge cut and rejects tampering") {
    Instance inst{dumbbell()};
    CutCertificate cert;
    cert.problem = Problem::edge_cut;
    cert.value = Weight(1);
    cert.side_pair = SetPair({0, 1, 2}, {3, 4, 5}, 6);
    cert.removed = {{ObjectRef::edge, 2, 3}};
    CHECK(verify_certificate(inst, cert).ok);

    CutCertificate wrong_value = cert;
    wrong_value.value = Weight(2);
    CHECK(!verify_certificate(inst, wrong_value).ok);

    CutCertificate still_connected = cert;
    still_connected.removed.clear();
    still_connected.value = Weight(0);
    CHECK(!verify_certificate(inst, still_connected).ok);

    CutCertificate ghost_edge = cert;
    ghost_edge.removed = {{ObjectRef::edge, 0, 5}};
    CHECK(!verify_certificate(inst, ghost_edge).ok);
}

TEST_CASE("verify accepts certificates from every solver family") {
    SamplingParams params;
    {
        auto g = dumbbell();
        Instance inst{g};
        auto cert = steiner_min_cut(g, {0, 1, 2, 3, 4, 5}, params);
        CHECK(verify_certificate(inst, cert).ok);
    }
    {
        auto h = hyper_triple();
        Instance inst{h};
        auto cert = hyper_global_min_cut(h, {0, 1, 2, 3}, params);
        CHECK(verify_certificate(inst, cert).ok);
    }
    {
        auto ei = elem_two_path();
        Instance inst{ei};
        auto cert = element_global_conn(ei, {0, 1}, params);
        CHECK(verify_certificate(inst, cert).ok);
        auto iso = element_isolating_cuts(ei, {0, 1});
        for (auto& [r, c] : iso.cuts) CHECK(verify_certificate(inst, c).ok);
    }
    {
        auto g = cycle(5);
        Instance inst{g};
        auto cert = exact_vertex_connectivity(g, 3);
        REQUIRE(cert.has_value());
        CHECK(verify_certificate(inst, *cert).ok);
        auto stcert = vertex_min_st_cut(g, 0, 2);
        CHECK(verify_certificate(inst, stcert).ok);
    }
}

TEST_CASE("verify accepts solver certificates across random instances") {
    Rng rng(1919);
    for (int it = 0; it < 25; ++it) {
        int n = 4 + static_cast<int>(rng.below(6));
        auto g = random_connected_graph(rng, n, 6);
        Instance inst{g};
        SamplingParams p;
        p.seed = it;
        auto R = random_subset(rng, n, 2);
        CHECK(verify_certificate(inst, steiner_min_cut(g, R, p)).ok);
        auto iso = edge_isolating_cuts(g, R);
        for (auto& [r, c] : iso.cuts) CHECK(verify_certificate(inst, c).ok);
    }
}

TEST_CASE("infinite certificates verify via the infinite-witness rule") {
    // kappa(s,t) with adjacent terminals.
    auto g = complete(4);
    Instance inst{g};
    auto cert = vertex_min_st_cut(g, 0, 1);
    CHECK(cert.value.is_infinite());
    CHECK(verify_certificate(inst, cert).ok);

    // Claiming infinite when a finite separator exists must fail.
    auto c5 = cycle(5);
    Instance i5{c5};
    CutCertificate bogus;
    bogus.problem = Problem::vertex_cut;
    bogus.value = Weight::infinite();
    bogus.side_pair = SetPair({0}, {2}, 5);
    CHECK(!verify_certificate(i5, bogus).ok);
}

TEST_CASE("certificate JSON round-trips through parse and verify") {
    std::string text = "p 6 7\ne 1 2 1\ne 1 3 1\ne 2 3 1\ne 4 5 1\ne 4 6 1\ne 5 6 1\ne 3 4 1\n";
    auto parsed = parse_instance(text, ParseKind::graph, 1000000);
    const WeightedGraph& g = *as_graph(parsed.instance);
    SamplingParams params;
    params.seed = 7;
    auto cert = steiner_min_cut(g, {0, 1, 2, 3, 4, 5}, params);
    std::string json = certificate_json(parsed.instance, cert, "edge-cut", {0, 1, 2, 3, 4, 5},
                                        std::nullopt, 0);
    CHECK(json.find("\"value\":1") != std::string::npos);
    CHECK(json.find("\"side\":[1,2,3]") != std::string::npos);
    CHECK(json.find("\"removed\":[[\"3\",\"4\"]]") != std::string::npos);

    auto back = certificate_from_json(parsed.instance, json);
    REQUIRE(back.has_value());
    CHECK(back->value == cert.value);
    CHECK(back->side_pair == cert.side_pair);
    CHECK(back->removed == cert.removed);
    CHECK(verify_certificate(parsed.instance, *back).ok);
}

TEST_CASE("no-cut JSON round-trips") {
    auto g = complete(4);
    Instance inst{g};
    std::string json = no_cut_json(inst, "vertex-cut", 5, std::nullopt, 0);
    auto back = certificate_from_json(inst, json);
    CHECK(!back.has_value());
    CHECK(graph_is_complete(g));
    CHECK(!graph_is_complete(cycle(5)));
}

TEST_CASE("element certificate JSON reconstruction") {
    std::string text = "p 4 4\nt 0\nt 1\ne 0 2 1\ne 2 1 1\ne 0 3 1\ne 3 1 1\n";
    auto parsed = parse_instance(text, ParseKind::element, 1);
    const ElementInstance& ei = *as_element(parsed.instance);
    auto cert = element_min_cut(ei, {0}, {1});
    std::string json = certificate_json(parsed.instance, cert, "elem-cut", {0, 1}, std::nullopt, 0);
    auto back = certificate_from_json(parsed.instance, json);
    REQUIRE(back.has_value());
    CHECK(back->value == cert.value);
    CHECK(back->removed == cert.removed);
    CHECK(verify_certificate(parsed.instance, *back).ok);
}

TEST_CASE("hypergraph certificate JSON reconstruction with parallel hyperedges") {
    Hypergraph h;
    h.n = 4;
    h.hyperedges.push_back({{0, 1}, Weight(1)});
    h.hyperedges.push_back({{0, 1}, Weight(1)});  // identical twin
    h.hyperedges.push_back({{1, 2, 3}, Weight(2)});
    Instance inst{h};
    CutCertificate cert;
    cert.problem = Problem::hyper_cut;
    cert.value = Weight(2);
    cert.side_pair = SetPair({0}, {1, 2, 3}, 4);
    cert.removed = {{ObjectRef::hyperedge, 0, 0}, {ObjectRef::hyperedge, 1, 0}};
    CHECK(verify_certificate(inst, cert).ok);
    std::string json = certificate_json(inst, cert, "hyper-cut", {0, 1, 2, 3}, std::nullopt, 0);
    auto back = certificate_from_json(inst, json);
    REQUIRE(back.has_value());
    CHECK(back->removed == cert.removed);
    CHECK(verify_certificate(inst, *back).ok);
}
