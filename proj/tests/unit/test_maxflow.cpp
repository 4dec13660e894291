#include <set>

#include "conncut/error.hpp"
#include "conncut/maxflow.hpp"
#include "conncut/rng.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace conncut;

namespace {

// Independent oracle: min over all s/t bipartitions of crossing capacity.
Weight brute_directed_min_cut(const FlowNetwork& net) {
    int n = net.node_count;
    Weight best = Weight::infinite();
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        if (!(mask & (uint32_t(1) << net.source))) continue;
        if (mask & (uint32_t(1) << net.sink)) continue;
        Weight v;
        for (size_t a = 0; a < net.arcs.size(); ++a) {
            int head = net.arcs[a].head;
            int tail = net.arcs[a ^ 1].head;
            if ((mask >> tail & 1) && !(mask >> head & 1)) v += net.arcs[a].cap;
        }
        best = std::min(best, v);
    }
    return best;
}

FlowNetwork random_network(Rng& rng, int n, uint64_t max_cap) {
    FlowNetwork net(n);
    net.source = 0;
    net.sink = n - 1;
    int arcs = n + static_cast<int>(rng.below(uint64_t(2 * n)));
    for (int i = 0; i < arcs; ++i) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        net.add_arc(u, v, Weight(1 + rng.below(max_cap)));
    }
    return net;
}

Weight cut_capacity(const FlowNetwork& net, const std::vector<char>& side) {
    Weight v;
    for (size_t a = 0; a < net.arcs.size(); ++a) {
        int head = net.arcs[a].head;
        int tail = net.arcs[a ^ 1].head;
        if (side[tail] && !side[head]) v += net.arcs[a].cap;
    }
    return v;
}

}  // namespace

TEST_CASE("path bottleneck and parallel additivity") {
    FlowNetwork net(3);
    net.source = 0;
    net.sink = 2;
    net.add_arc(0, 1, Weight(3));
    net.add_arc(1, 2, Weight(2));
    auto r = max_flow(net);
    CHECK(r.value == Weight(2));
    CHECK(r.source_side == std::vector<char>{1, 1, 0});
    CHECK(r.sink_side == std::vector<char>{0, 0, 1});

    FlowNetwork two(4);
    two.source = 0;
    two.sink = 3;
    two.add_arc(0, 1, Weight(1));
    two.add_arc(1, 3, Weight(1));
    two.add_arc(0, 2, Weight(2));
    two.add_arc(2, 3, Weight(2));
    CHECK(max_flow(two).value == Weight(3));
}

TEST_CASE("minimal sides under ties") {
    FlowNetwork net(3);
    net.source = 0;
    net.sink = 2;
    net.add_arc(0, 1, Weight(2));
    net.add_arc(1, 2, Weight(2));
    auto r = max_flow(net);
    auto [src, snk] = min_cut_sides(r);
    CHECK(src == std::vector<char>{1, 0, 0});
    CHECK(snk == std::vector<char>{0, 0, 1});
}

TEST_CASE("source = sink rejected") {
    FlowNetwork net(2);
    net.source = 0;
    net.sink = 0;
    CHECK_THROWS_AS(max_flow(net), InvalidArgument);
}

TEST_CASE("random networks match the exhaustive bipartition oracle") {
    Rng rng(1234);
    for (int it = 0; it < 300; ++it) {
        int n = 3 + static_cast<int>(rng.below(6));  // n <= 8
        FlowNetwork net = random_network(rng, n, 10);
        auto r = max_flow(net);
        CHECK(r.value == brute_directed_min_cut(net));
        // Flow feasibility and conservation, exactly.
        for (size_t a = 0; a < net.arcs.size(); ++a) {
            CHECK(r.flow[a] >= 0);
            if (!net.arcs[a].cap.is_infinite())
                CHECK(uint64_t(r.flow[a]) <= net.arcs[a].cap.value());
        }
        std::vector<int64_t> net_out(net.node_count, 0);
        for (size_t a = 0; a < net.arcs.size(); ++a) {
            int head = net.arcs[a].head;
            int tail = net.arcs[a ^ 1].head;
            net_out[tail] += r.flow[a];
            net_out[head] -= r.flow[a];
        }
        for (int v = 0; v < net.node_count; ++v) {
            if (v == net.source || v == net.sink) continue;
            CHECK(net_out[v] == 0);
        }
        // Both recorded sides are cuts of exactly the flow value.
        CHECK(cut_capacity(net, r.source_side) == r.value);
        std::vector<char> not_sink(net.node_count);
        for (int v = 0; v < net.node_count; ++v) not_sink[v] = !r.sink_side[v];
        CHECK(cut_capacity(net, not_sink) == r.value);
    }
}

TEST_CASE("source side is contained in every minimum cut's source side") {
    Rng rng(77);
    for (int it = 0; it < 200; ++it) {
        int n = 3 + static_cast<int>(rng.below(5));
        FlowNetwork net = random_network(rng, n, 3);  // small caps force ties
        auto r = max_flow(net);
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
            if (!(mask & (uint32_t(1) << net.source))) continue;
            if (mask & (uint32_t(1) << net.sink)) continue;
            std::vector<char> side(n);
            for (int v = 0; v < n; ++v) side[v] = (mask >> v) & 1;
            if (cut_capacity(net, side) != r.value) continue;
            for (int v = 0; v < n; ++v) {
                if (r.source_side[v]) CHECK(side[v]);
                if (r.sink_side[v]) CHECK(!side[v]);
            }
        }
    }
}

TEST_CASE("infinite bottleneck terminates with value Infinite") {
    FlowNetwork net(3);
    net.source = 0;
    net.sink = 2;
    net.add_arc(0, 1, Weight::infinite());
    net.add_arc(1, 2, Weight::infinite());
    net.add_arc(0, 2, Weight(5));
    auto r = max_flow(net);
    CHECK(r.value.is_infinite());
    CHECK(r.source_side[0]);
}

TEST_CASE("deterministic: identical input gives identical result") {
    Rng rng(5);
    FlowNetwork net = random_network(rng, 7, 9);
    auto a = max_flow(net);
    auto b = max_flow(net);
    CHECK(a.value == b.value);
    CHECK(a.flow == b.flow);
    CHECK(a.source_side == b.source_side);
    CHECK(a.sink_side == b.sink_side);
    CHECK(a.max_augmenting_path_len == b.max_augmenting_path_len);
}
