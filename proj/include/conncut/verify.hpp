#pragma once

#include <string>

#include "conncut/certificate.hpp"
#include "conncut/instance.hpp"

namespace conncut {

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;  // empty when ok
};

/// Check a certificate against its instance: the removed objects exist,
/// their weights sum to the claimed value, and deleting them leaves no
/// path between the two sides. An Infinite certificate instead claims no
/// finite separator exists; it must carry an empty removed set and the
/// sides must stay connected through unremovable / infinite-weight
/// objects alone (the witness that every separator costs Infinite).
VerifyResult verify_certificate(const Instance& inst, const CutCertificate& cert);

/// A vertex cut exists iff some pair of vertices is nonadjacent; the
/// "no cut" outcome is valid exactly on complete graphs.
bool graph_is_complete(const WeightedGraph& g);

}  // namespace conncut
