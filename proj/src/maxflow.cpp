#include "conncut/maxflow.hpp"

#include <algorithm>
#include <queue>

#include "conncut/error.hpp"

namespace conncut {

int FlowNetwork::add_node() {
    out.emplace_back();
    return node_count++;
}

int FlowNetwork::add_arc(int tail, int head, Weight cap) {
    int id = static_cast<int>(arcs.size());
    arcs.push_back({head, cap});
    arcs.push_back({tail, Weight::zero()});
    out[tail].push_back(id);
    out[head].push_back(id + 1);
    return id;
}

int FlowNetwork::add_edge(int u, int v, Weight cap) {
    int id = static_cast<int>(arcs.size());
    arcs.push_back({v, cap});
    arcs.push_back({u, cap});
    out[u].push_back(id);
    out[v].push_back(id + 1);
    return id;
}

namespace {

struct Dinic {
    const FlowNetwork& net;
    std::vector<int64_t> flow;
    std::vector<int> level, ptr;
    bool infinite_hit = false;

    explicit Dinic(const FlowNetwork& n) : net(n), flow(n.arcs.size(), 0) {}

    Weight res(int a) const { return residual(net.arcs[a].cap, flow[a]); }

    bool bfs() {
        level.assign(net.node_count, -1);
        level[net.source] = 0;
        std::queue<int> q;
        q.push(net.source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : net.out[v]) {
                int w = net.arcs[a].head;
                if (level[w] < 0 && res(a) > Weight::zero()) {
                    level[w] = level[v] + 1;
                    q.push(w);
                }
            }
        }
        return level[net.sink] >= 0;
    }

    // One blocking-flow phase; returns flow added, tracks max path length.
    Weight phase(int& max_len) {
        ptr.assign(net.node_count, 0);
        Weight added;
        std::vector<int> path;  // arc ids from source to current node
        int v = net.source;
        for (;;) {
            if (v == net.sink) {
                Weight bottleneck = Weight::infinite();
                for (int a : path) bottleneck = std::min(bottleneck, res(a));
                if (bottleneck.is_infinite()) {
                    infinite_hit = true;
                    return added;
                }
                max_len = std::max(max_len, static_cast<int>(path.size()));
                int retreat = 0;
                for (size_t i = 0; i < path.size(); ++i) {
                    int a = path[i];
                    flow[a] += static_cast<int64_t>(bottleneck.value());
                    flow[a ^ 1] -= static_cast<int64_t>(bottleneck.value());
                    if (res(a).is_zero() && retreat == 0) retreat = static_cast<int>(i) + 1;
                }
                added += bottleneck;
                // Back up to just before the first saturated arc.
                path.resize(retreat - 1);
                v = path.empty() ? net.source : net.arcs[path.back()].head;
                continue;
            }
            bool advanced = false;
            for (int& i = ptr[v]; i < static_cast<int>(net.out[v].size()); ++i) {
                int a = net.out[v][i];
                int w = net.arcs[a].head;
                if (level[w] == level[v] + 1 && res(a) > Weight::zero()) {
                    path.push_back(a);
                    v = w;
                    advanced = true;
                    break;
                }
            }
            if (advanced) continue;
            if (v == net.source) break;
            level[v] = -1;  // dead end in this phase
            path.pop_back();
            v = path.empty() ? net.source : net.arcs[path.back()].head;
        }
        return added;
    }
};

std::vector<char> reach_forward(const FlowNetwork& net, const std::vector<int64_t>& flow, int from,
                                bool finite_only) {
    std::vector<char> seen(net.node_count, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : net.out[v]) {
            Weight r = residual(net.arcs[a].cap, flow[a]);
            if (r.is_zero()) continue;
            if (finite_only && r.is_infinite()) continue;
            int w = net.arcs[a].head;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

std::vector<char> reach_backward(const FlowNetwork& net, const std::vector<int64_t>& flow, int to,
                                 bool finite_only) {
    std::vector<char> seen(net.node_count, 0);
    std::vector<int> stack{to};
    seen[to] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        // Arcs into v are the pairs of arcs out of v.
        for (int a : net.out[v]) {
            int b = a ^ 1;  // head(b) == v, tail(b) == arcs[a].head
            Weight r = residual(net.arcs[b].cap, flow[b]);
            if (r.is_zero()) continue;
            if (finite_only && r.is_infinite()) continue;
            int w = net.arcs[a].head;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
    if (net.source == net.sink || net.source < 0 || net.sink < 0)
        throw InvalidArgument("max_flow requires distinct source and sink");

    Dinic d(net);
    FlowResult r;
    r.value = Weight::zero();
    int max_len = 0;
    while (d.bfs()) {
        r.value += d.phase(max_len);
        if (d.infinite_hit) {
            r.value = Weight::infinite();
            break;
        }
    }
    r.max_augmenting_path_len = max_len;
    r.flow.resize(net.arcs.size());
    for (size_t a = 0; a < net.arcs.size(); ++a) r.flow[a] = std::max<int64_t>(d.flow[a], 0);

    bool finite_only = r.value.is_infinite();
    r.source_side = reach_forward(net, d.flow, net.source, finite_only);
    r.sink_side = reach_backward(net, d.flow, net.sink, finite_only);
    return r;
}

std::pair<std::vector<char>, std::vector<char>> min_cut_sides(const FlowResult& r) {
    return {r.source_side, r.sink_side};
}

}  // namespace conncut
