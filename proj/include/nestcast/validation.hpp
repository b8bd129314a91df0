#pragma once

#include "nestcast/hamilton.hpp"

#include <string>

namespace nestcast {

/// Outcome of an independent certificate check.
struct ValidationResult {
    bool ok = false;
    std::string message; ///< empty on success, first defect otherwise

    explicit operator bool() const { return ok; }
};

/// The validators below re-derive adjacency from scratch (disjoint
/// supports for the odd graph, subset-of-reverse for the middle-levels
/// graph) and consume serialized certificates, so they share no code
/// path with the constructors.

/// Checks a nestcast.two_factor.v1 document: schema and field sanity,
/// C_k cycles of the right length (2k+1, or 2(2k+1) for the lifted
/// factor), consecutive rows adjacent, every vertex of the graph in
/// exactly one cycle.
ValidationResult validate_two_factor(const std::string& json_text);

/// Checks a nestcast.hamilton.v1 document: schema and field sanity,
/// every vertex exactly once, consecutive vertices (and the wrap-around
/// pair) adjacent.
ValidationResult validate_hamilton(const std::string& json_text);

/// Checks a spanning structure against its weight: sum of (|e| - 1)
/// over hyperedges equals C_k - 1, every hyperedge member resolves to a
/// distinct flippable tuple, union-find over list ranks merges without
/// cycles and ends connected, and edges meeting at a list use distinct
/// flip positions there.
ValidationResult validate_spanning_tree(const SpanningTree& t);

} // namespace nestcast
