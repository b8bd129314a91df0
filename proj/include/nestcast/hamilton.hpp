#pragma once

#include "nestcast/two_factor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nestcast {

/// A pattern word with a marked position: the word is an unanchored
/// binary string of length 2k, phi is the 0-based offset of the mark
/// counted from the RIGHT end.  The flip position in the anchored
/// (2k+1)-letter frame is p = 2k - phi.
struct PatternWord {
    std::string word;
    int phi = 0;
};

/// A pattern hyperedge: 2 to 4 pattern words, all the same length.
using PatternEdge = std::vector<PatternWord>;

/// Named base pattern sets.  s1(w) takes an infix w inserted after the
/// leading 0.  Bars (reverse + complement, phi -> len-1-phi) and
/// affixes are applied via the helpers below.
PatternEdge pattern_s1(const std::string& infix);
PatternEdge pattern_s2();
PatternEdge pattern_s3();
PatternEdge pattern_s4();

PatternWord bar_word(const PatternWord& w);
PatternEdge bar_edge(const PatternEdge& e);
PatternEdge prepend_edge(const std::string& prefix, const PatternEdge& e);
PatternEdge append_edge(const PatternEdge& e, const std::string& suffix);
/// 0 | bar(e) | 1 | v  applied memberwise.
PatternEdge embed_edge(const PatternEdge& e, const std::string& v);

/// All Dyck words of semilength k (weight k), lexicographically sorted;
/// k = 0 yields the single empty word.
std::vector<std::string> dyck_words(int k);

/// A resolved hyperedge member: the rank whose weight-k word equals the
/// pattern word, and the flip position p = 2k - phi.
struct TupleRef {
    std::uint64_t n = 0;
    int position = 0;
};

using Hyperedge = std::vector<TupleRef>;

/// The spanning structure over the vertical lists of O_k (k >= 3):
/// hyperedges of flippable tuples such that replacing each hyperedge's
/// 2-factor edges by a flipping cycle merges all C_k cycles into one.
/// Sum over edges of (|e| - 1) equals C_k - 1; edges sharing a list do
/// so at distinct flip positions.
struct SpanningTree {
    int k = 0;
    std::vector<Hyperedge> edges;
};

SpanningTree spanning_tree(int k, const NestTable* table = nullptr);

/// The flipping cycle of a hyperedge: a cycle through the 2 x |e|
/// vertices of its flippable tuples, alternating 2-factor edges (the
/// tuples) and graph edges outside the 2-factor.  Found by exhausting
/// member orders and orientations; throws std::runtime_error if none
/// exists (does not happen for the constructed trees).
struct FlippingCycle {
    std::vector<Mask> vertices; ///< cyclic order, length 2 |e|
};

FlippingCycle flipping_cycle(const OddGraph& g, const TwoFactor& f,
                             const Hyperedge& e);

/// A Hamilton cycle certificate: the full cyclic vertex sequence.
struct HamiltonCertificate {
    int k = 0;
    std::string graph;          ///< "odd" or "middle"
    int n_positions = 0;        ///< 2k + 1
    std::vector<Mask> cycle;    ///< each vertex once
};

/// Hamilton cycle on O_k (k >= 3): symmetric difference of the uniform
/// 2-factor with all flipping cycles of the spanning tree, traced from
/// vertex 0.  Throws std::invalid_argument for k < 3 (O_2 is the
/// Petersen graph and has no Hamilton cycle).
HamiltonCertificate hamilton_odd(int k, const NestTable* table = nullptr);

/// Hamilton cycle on M_k (k >= 3).  M_k is the bipartite double cover
/// of O_k, so each vertical list (odd length) lifts to one doubled
/// cycle while each flipping cycle (even length) lifts to two disjoint
/// copies; applying exactly one copy per hyperedge merges the lifted
/// 2-factor into a single cycle of length 2 C(2k+1, k) for every
/// parity of C(2k+1, k).  Throws std::invalid_argument for k < 3.
HamiltonCertificate hamilton_middle(int k, const NestTable* table = nullptr);

} // namespace nestcast
