#include "conncut/oracles.hpp"

#include <algorithm>
#include <cassert>

#include "conncut/error.hpp"
#include "conncut/setpair.hpp"

namespace conncut {

namespace {

std::vector<int> mask_to_set(uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask & (uint32_t(1) << v)) out.push_back(v);
    return out;
}

uint32_t set_to_mask(const std::vector<int>& s) {
    uint32_t m = 0;
    for (int v : s) m |= uint32_t(1) << v;
    return m;
}

bool better_side(Weight v, const std::vector<int>& side, Weight best_v,
                 const std::vector<int>& best_side) {
    if (v != best_v) return v < best_v;
    if (side.size() != best_side.size()) return side.size() < best_side.size();
    return cmp_lex(side, best_side) < 0;
}

}  // namespace

BruteCut brute_edge_cut(const WeightedGraph& g, const std::vector<int>& R,
                        const OracleLimits& limits) {
    if (g.n > limits.brute_edge_max_n) throw LimitExceeded("brute_edge_cut: graph too large");
    if (R.size() < 2) throw InvalidArgument("brute_edge_cut needs |R| >= 2");
    uint32_t rmask = set_to_mask(R);
    bool found = false;
    Weight best;
    std::vector<int> best_side;
    for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << g.n); ++mask) {
        if ((mask & rmask) == 0 || (~mask & rmask) == 0) continue;
        Weight v;
        for (const Edge& e : g.edges)
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) v += e.w;
        auto side = mask_to_set(mask, g.n);
        if (!found || better_side(v, side, best, best_side)) {
            best = v;
            best_side = std::move(side);
            found = true;
        }
    }
    assert(found);
    return {best, best_side};
}

BruteCut brute_hyper_cut(const Hypergraph& h, const std::vector<int>& R,
                         const OracleLimits& limits) {
    if (h.n > limits.brute_hyper_max_n) throw LimitExceeded("brute_hyper_cut: hypergraph too large");
    if (R.size() < 2) throw InvalidArgument("brute_hyper_cut needs |R| >= 2");
    uint32_t rmask = set_to_mask(R);
    bool found = false;
    Weight best;
    std::vector<int> best_side;
    for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << h.n); ++mask) {
        if ((mask & rmask) == 0 || (~mask & rmask) == 0) continue;
        Weight v;
        for (const Hyperedge& e : h.hyperedges) {
            bool in = false, out = false;
            for (int x : e.members) (((mask >> x) & 1) ? in : out) = true;
            if (in && out) v += e.w;
        }
        auto side = mask_to_set(mask, h.n);
        if (!found || better_side(v, side, best, best_side)) {
            best = v;
            best_side = std::move(side);
            found = true;
        }
    }
    assert(found);
    return {best, best_side};
}

BruteCut brute_edge_st_cut(const WeightedGraph& g, const std::vector<int>& S,
                           const std::vector<int>& T, const OracleLimits& limits) {
    if (g.n > limits.brute_edge_max_n) throw LimitExceeded("brute_edge_st_cut: graph too large");
    if (S.empty() || T.empty() || !sets_disjoint(S, T))
        throw InvalidArgument("brute_edge_st_cut needs disjoint nonempty sides");
    uint32_t smask = set_to_mask(S), tmask = set_to_mask(T);
    bool found = false;
    Weight best;
    std::vector<int> best_side;
    for (uint32_t mask = 0; mask < (uint32_t(1) << g.n); ++mask) {
        if ((mask & smask) != smask || (mask & tmask) != 0) continue;
        Weight v;
        for (const Edge& e : g.edges)
            if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) v += e.w;
        auto side = mask_to_set(mask, g.n);
        if (!found || better_side(v, side, best, best_side)) {
            best = v;
            best_side = std::move(side);
            found = true;
        }
    }
    return {best, best_side};
}

BruteCut brute_hyper_st_cut(const Hypergraph& h, const std::vector<int>& S,
                            const std::vector<int>& T, const OracleLimits& limits) {
    if (h.n > limits.brute_hyper_max_n) throw LimitExceeded("brute_hyper_st_cut: hypergraph too large");
    if (S.empty() || T.empty() || !sets_disjoint(S, T))
        throw InvalidArgument("brute_hyper_st_cut needs disjoint nonempty sides");
    uint32_t smask = set_to_mask(S), tmask = set_to_mask(T);
    bool found = false;
    Weight best;
    std::vector<int> best_side;
    for (uint32_t mask = 0; mask < (uint32_t(1) << h.n); ++mask) {
        if ((mask & smask) != smask || (mask & tmask) != 0) continue;
        Weight v;
        for (const Hyperedge& e : h.hyperedges) {
            bool in = false, out = false;
            for (int x : e.members) (((mask >> x) & 1) ? in : out) = true;
            if (in && out) v += e.w;
        }
        auto side = mask_to_set(mask, h.n);
        if (!found || better_side(v, side, best, best_side)) {
            best = v;
            best_side = std::move(side);
            found = true;
        }
    }
    return {best, best_side};
}

namespace {

// Connectivity of the element instance after deleting the element subset
// given by `removed` (bit i of the mask = element id i removed).
bool elements_separate(const ElementInstance& inst, uint32_t removed_mask,
                       const std::vector<int>& S, const std::vector<int>& Z,
                       const std::vector<std::vector<std::pair<int, int>>>& adj) {
    const WeightedGraph& g = inst.graph;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int s : S) {
        if (removed_mask & (uint32_t(1) << s)) continue;  // cannot happen for terminals
        seen[s] = 1;
        stack.push_back(s);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, j] : adj[v]) {
            if (removed_mask & (uint32_t(1) << (g.n + j))) continue;  // edge removed
            if (w < g.n && (removed_mask & (uint32_t(1) << w))) continue;  // vertex removed
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int z : Z)
        if (seen[z]) return false;
    return true;
}

}  // namespace

BruteElementCut brute_element_cut(const ElementInstance& inst, const std::vector<int>& S,
                                  const std::vector<int>& Z, const OracleLimits& limits) {
    const WeightedGraph& g = inst.graph;
    int elems = inst.element_count();
    if (elems > limits.brute_element_max_elements)
        throw LimitExceeded("brute_element_cut: too many elements");
    if (S.empty() || Z.empty()) throw InvalidArgument("brute_element_cut needs nonempty sides");
    if (!sets_disjoint(S, Z)) throw InvalidArgument("brute_element_cut: sides intersect");

    // Removable element ids: non-terminal vertices and all edges.
    std::vector<int> removable;
    for (int v = 0; v < g.n; ++v)
        if (!inst.is_terminal(v)) removable.push_back(v);
    for (int j = 0; j < g.m(); ++j) removable.push_back(g.n + j);

    auto adj = g.adjacency();
    bool found = false;
    Weight best;
    std::vector<int> best_removed;
    for (uint32_t sub = 0; sub < (uint32_t(1) << removable.size()); ++sub) {
        uint32_t mask = 0;
        Weight v;
        for (size_t i = 0; i < removable.size(); ++i)
            if (sub & (uint32_t(1) << i)) {
                mask |= uint32_t(1) << removable[i];
                v += inst.element_weight(removable[i]);
            }
        if (found && !(v < best)) continue;
        if (!elements_separate(inst, mask, S, Z, adj)) continue;
        std::vector<int> rem;
        for (size_t i = 0; i < removable.size(); ++i)
            if (sub & (uint32_t(1) << i)) rem.push_back(removable[i]);
        if (!found || better_side(v, rem, best, best_removed)) {
            best = v;
            best_removed = std::move(rem);
            found = true;
        }
    }
    if (!found) return {Weight::infinite(), {}};
    return {best, best_removed};
}

std::optional<BruteVertexCut> brute_vertex_cut(const WeightedGraph& g,
                                               const OracleLimits& limits) {
    if (g.n > limits.brute_vertex_max_n) throw LimitExceeded("brute_vertex_cut: graph too large");
    auto adj = g.adjacency();
    bool found = false;
    Weight best;
    std::vector<int> best_sep;
    for (uint32_t mask = 0; mask < (uint32_t(1) << g.n); ++mask) {
        Weight v;
        for (int x = 0; x < g.n; ++x)
            if (mask & (uint32_t(1) << x)) v += g.vertex_weights[x];
        if (found && !(v < best)) continue;
        // Count components of g - mask; need >= 2 nonempty.
        std::vector<char> seen(g.n, 0);
        int comps = 0;
        for (int s = 0; s < g.n; ++s) {
            if (seen[s] || (mask & (uint32_t(1) << s))) continue;
            ++comps;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [w, j] : adj[x]) {
                    (void)j;
                    if (seen[w] || (mask & (uint32_t(1) << w))) continue;
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (comps < 2) continue;
        auto sep = mask_to_set(mask, g.n);
        if (!found || better_side(v, sep, best, best_sep)) {
            best = v;
            best_sep = std::move(sep);
            found = true;
        }
    }
    if (!found) return std::nullopt;
    return BruteVertexCut{best, best_sep};
}

BruteCut stoer_wagner(const WeightedGraph& g) {
    if (g.n < 2) throw InvalidArgument("stoer_wagner needs at least two vertices");
    {
        auto comp = g.components();
        if (*std::max_element(comp.begin(), comp.end()) != 0)
            throw InvalidArgument("stoer_wagner requires a connected graph");
    }
    int n = g.n;
    std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, Weight::zero()));
    for (const Edge& e : g.edges) {
        w[e.u][e.v] += e.w;
        w[e.v][e.u] += e.w;
    }
    std::vector<std::vector<int>> merged(n);
    for (int v = 0; v < n; ++v) merged[v] = {v};
    std::vector<char> gone(n, 0);

    bool found = false;
    Weight best;
    std::vector<int> best_side;
    for (int phase = n; phase > 1; --phase) {
        // Maximum-adjacency order over the remaining supernodes.
        std::vector<char> in_a(n, 0);
        std::vector<Weight> key(n, Weight::zero());
        int prev = -1, last = -1;
        for (int step = 0; step < phase; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (gone[v] || in_a[v]) continue;
                if (pick < 0 || key[v] > key[pick]) pick = v;
            }
            in_a[pick] = 1;
            for (int v = 0; v < n; ++v)
                if (!gone[v] && !in_a[v]) key[v] += w[pick][v];
            prev = last;
            last = pick;
        }
        Weight cut_of_phase = Weight::zero();
        for (int v = 0; v < n; ++v)
            if (!gone[v] && v != last) cut_of_phase += w[last][v];
        std::vector<int> side = merged[last];
        std::sort(side.begin(), side.end());
        {  // canonical representative: the (size, lex)-smaller of side/complement
            std::vector<char> in(n, 0);
            for (int v : side) in[v] = 1;
            std::vector<int> comp;
            for (int v = 0; v < n; ++v)
                if (!in[v]) comp.push_back(v);
            if (better_side(cut_of_phase, comp, cut_of_phase, side)) side = std::move(comp);
        }
        if (!found || better_side(cut_of_phase, side, best, best_side)) {
            best = cut_of_phase;
            best_side = side;
            found = true;
        }
        // Merge last into prev.
        gone[last] = 1;
        merged[prev].insert(merged[prev].end(), merged[last].begin(), merged[last].end());
        for (int v = 0; v < n; ++v) {
            if (gone[v] || v == prev) continue;
            w[prev][v] += w[last][v];
            w[v][prev] += w[v][last];
        }
    }
    return {best, best_side};
}

}  // namespace conncut
