#pragma once

#include <cstdint>
#include <vector>

#include "conncut/setpair.hpp"
#include "conncut/weight.hpp"

namespace conncut {

enum class Problem { edge_cut, hyper_cut, elem_cut, vertex_cut, sfm_cut };

/// A removed object: an edge (by canonical endpoint pair), a hyperedge
/// (by index), or a vertex / non-terminal (by id).
struct ObjectRef {
    enum Kind { vertex, edge, hyperedge } kind;
    int a = 0;
    int b = 0;  // second endpoint for edges

    friend auto operator<=>(const ObjectRef&, const ObjectRef&) = default;
};

struct CertMeta {
    uint64_t seed = 0;
    long trials = 0;
    long oracle_calls = 0;
};

/// Machine-checkable record of a cut: its value, the separated set-pair,
/// the removed objects, and the randomness that found it. An Infinite
/// value means no finite separator exists; such certificates carry an
/// empty removed set.
struct CutCertificate {
    Problem problem = Problem::edge_cut;
    Weight value;
    SetPair side_pair;
    std::vector<ObjectRef> removed;  // sorted
    CertMeta meta;
};

/// Deterministic preference order between equal-purpose cuts:
/// value, then |first component|, then lexicographic first component.
/// Returns true when a is strictly better than b.
bool cert_better(const CutCertificate& a, const CutCertificate& b);

}  // namespace conncut
