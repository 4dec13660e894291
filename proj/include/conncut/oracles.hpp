#pragma once

#include <optional>
#include <vector>

#include "conncut/instance.hpp"
#include "conncut/weight.hpp"

namespace conncut {

/// Independent ground-truth implementations. These never call the flow
/// engine or the isolating-cuts framework; they exist to check them.
/// Enumeration caps are hard errors, never silent truncation.
struct OracleLimits {
    int brute_edge_max_n = 20;
    int brute_hyper_max_n = 20;
    int brute_element_max_elements = 16;
    int brute_vertex_max_n = 12;
};

struct BruteCut {
    Weight value;
    std::vector<int> side;  // vertex ids on the first side
};

/// Minimum over all bipartitions (S, V\S) with both sides meeting R of the
/// crossing edge weight.
BruteCut brute_edge_cut(const WeightedGraph& g, const std::vector<int>& R,
                        const OracleLimits& limits = {});

/// Same with crossing hyperedges.
BruteCut brute_hyper_cut(const Hypergraph& h, const std::vector<int>& R,
                         const OracleLimits& limits = {});

/// Constrained variants: minimum over bipartitions with S on the first
/// side and T on the second. Used by the CLI oracle cross-checks for
/// isolating cuts.
BruteCut brute_edge_st_cut(const WeightedGraph& g, const std::vector<int>& S,
                           const std::vector<int>& T, const OracleLimits& limits = {});
BruteCut brute_hyper_st_cut(const Hypergraph& h, const std::vector<int>& S,
                            const std::vector<int>& T, const OracleLimits& limits = {});

struct BruteElementCut {
    Weight value;
    std::vector<int> removed;  // element ids
};

/// Minimum weight element subset whose removal disconnects every s in S
/// from every z in Z, by subset enumeration.
BruteElementCut brute_element_cut(const ElementInstance& inst, const std::vector<int>& S,
                                  const std::vector<int>& Z, const OracleLimits& limits = {});

struct BruteVertexCut {
    Weight value;
    std::vector<int> separator;
};

/// Minimum weight vertex subset whose removal leaves at least two
/// nonempty components; nullopt when none exists (complete graphs).
std::optional<BruteVertexCut> brute_vertex_cut(const WeightedGraph& g,
                                               const OracleLimits& limits = {});

/// Exact global edge minimum cut by maximum-adjacency ordering and
/// contraction. Requires a connected graph on at least two vertices.
BruteCut stoer_wagner(const WeightedGraph& g);

}  // namespace conncut
