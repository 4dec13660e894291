#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conncut/certificate.hpp"
#include "conncut/instance.hpp"

namespace conncut {

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

/// Stable single-certificate schema:
/// {"problem", "value", "side", "removed", "terminals", "seed", "trials",
///  "oracle_calls", ["oracle_match",] "elapsed_ms"}.
/// value is a number, "inf", or "none"; side/terminals are numeric vertex
/// labels ascending; removed entries are label strings (vertices), label
/// string pairs (edges), or label string arrays (hyperedges). elapsed_ms
/// is the only nondeterministic field.
std::string certificate_json(const Instance& inst, const CutCertificate& cert,
                             const std::string& problem, const std::vector<int>& terminals,
                             std::optional<bool> oracle_match, uint64_t elapsed_ms);

/// The vertex-cut outcome on complete graphs: {"value":"none", ...}.
std::string no_cut_json(const Instance& inst, const std::string& problem, uint64_t seed,
                        std::optional<bool> oracle_match, uint64_t elapsed_ms);

/// Bundle for the isolate command: per-terminal cuts under "cuts".
std::string isolate_json(const Instance& inst, const std::map<int, CutCertificate>& cuts,
                         const std::vector<int>& terminals, uint64_t seed, long oracle_calls,
                         std::optional<bool> oracle_match, uint64_t elapsed_ms);

std::string verify_json(bool valid, const std::string& diagnostic, uint64_t elapsed_ms);

/// Parse a single certificate back from its JSON rendering. The "no cut"
/// outcome returns nullopt. Throws InvalidArgument on malformed input.
std::optional<CutCertificate> certificate_from_json(const Instance& inst,
                                                    const std::string& json_text);

}  // namespace conncut
