#pragma once

#include <iosfwd>
#include <string>

#include "conncut/instance.hpp"

namespace conncut {

enum class ParseKind { auto_detect, graph, hypergraph, element };

struct ParseResult {
    Instance instance;
    LoadReport report;
};

/// Parse an instance file. Decimal weights are scaled by `precision`
/// (exactness required: a weight with more fractional digits than the
/// precision admits is an error). Throws ParseError with a 1-based line
/// number on malformed input.
ParseResult parse_instance(const std::string& text, ParseKind kind, uint64_t precision = 1);

/// Canonical text form: header, then sorted t/v/e/h lines with descaled
/// weights. parse(serialize(parse(x))) == parse(x).
std::string serialize_instance(const Instance& inst);

/// Exact decimal rendering of an internal weight, descaled by precision.
std::string weight_to_decimal(Weight w, uint64_t precision);

}  // namespace conncut
