#pragma once

#include "nestcast/hamilton.hpp"
#include "nestcast/two_factor.hpp"

#include <cstdint>
#include <string>

namespace nestcast {

/// Binary rendering of a vertex mask: character i is bit i (position 0,
/// the anchor slot, leftmost).
std::string mask_to_bits(Mask m, int n_positions);
Mask bits_to_mask(const std::string& bits);

/// nestcast.trgs.v1: the rank table of weight k with gamma, rho and h
/// columns (root row carries nulls).
std::string trgs_table_json(int k, const NestTable* table = nullptr);

/// nestcast.graph.v1 documents.  with_arcs adds the colored arc list.
std::string graph_json(const OddGraph& g, bool with_arcs);
std::string graph_json(const MiddleGraph& g);

/// Graphviz output.  with_arcs emits a digraph with color labels,
/// otherwise an undirected graph.
std::string graph_dot(const OddGraph& g, bool with_arcs);
std::string graph_dot(const MiddleGraph& g);

/// nestcast.two_factor.v1 documents.
std::string two_factor_json(const TwoFactor& f);
std::string two_factor_json(const LiftedTwoFactor& f);

/// nestcast.hamilton.v1 document.
std::string hamilton_json(const HamiltonCertificate& c);

} // namespace nestcast
