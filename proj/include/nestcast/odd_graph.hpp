#pragma once

#include "nestcast/castling.hpp"
#include "nestcast/dyck.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nestcast {

/// A vertex of the odd graph O_k or middle-levels graph M_k: a subset of
/// {0, ..., 2k} stored as a bitmask (bit p set = element p present).
using Mask = std::uint32_t;

/// Largest k for which graphs are materialised by default.  C(19, 9) =
/// 92378 vertices; beyond that memory and time grow steeply.
inline constexpr int odd_graph_max_k = 9;

int popcount_mask(Mask m);

/// Appearance profile of a rank-n nest at weight k: walk the anchored
/// word 0 F^k(n) left to right; first appearance of a pair label -> 0,
/// second appearance -> 1, the anchor itself -> 0.  The result is a
/// (2k+1)-bit mask of weight k with bit 0 (the anchor position) clear,
/// bit p = the p-th step (0-based, left to right).
Mask appearance_profile(const DyckNest& nest, int k);

/// The odd graph O_k.  Vertices are all C(2k+1, k) masks of weight k
/// over 2k+1 positions; two vertices are adjacent iff their supports
/// are disjoint.  Each vertex is reached by right-rotating the profile
/// of exactly one rank-class nest, which gives every vertex a pair
/// (class m, rotation jp) where jp is the position of the class's
/// anchor entry inside the vertex.
class OddGraph {
public:
    int k = 0;
    int n_positions = 0;                 ///< 2k + 1
    std::vector<Mask> vertices;          ///< index -> mask, sorted
    std::vector<std::uint64_t> vertex_class;  ///< index -> rank m < C_k
    std::vector<int> vertex_rotation;    ///< index -> jp in [0, 2k]
    std::vector<DyckNest> class_nests;   ///< rank m -> weight-k nest

    std::size_t index_of(Mask m) const;  ///< throws if absent
    bool has_vertex(Mask m) const;

    /// All k+1 neighbours of the vertex with the given mask: masks
    /// disjoint from it.
    std::vector<Mask> neighbors(Mask m) const;

    /// The nest string of a vertex: the class nest rendered with its
    /// anchor and right-rotated so the anchor lands at the stored
    /// rotation offset.
    std::string vertex_nest(std::size_t index) const;
};

/// A precomputed nest table for the same k avoids rebuilding one.
OddGraph build_odd(int k, const NestTable* table = nullptr);

/// Arc factorization of O_k: every ordered pair (u, w) of adjacent
/// vertices carries a color in [0, k].  From u, the arc at position p
/// (a 0 bit of u's profile view) leads to the complement of u within
/// 2k+1 positions with bit p cleared; its color is the nest digit at
/// position p (anchor = 0).  Colors of an arc and its reverse sum to k.
struct Arc {
    Mask from = 0;
    Mask to = 0;
    int position = 0; ///< 0-based position in the from-vertex's view
    int color = 0;
};

/// The arc leaving `index` at 0-based position `p` (which must carry a
/// 0 entry of the vertex's rotated nest view, i.e. a cleared mask bit
/// or the anchor slot -- precisely: a position not in the vertex's
/// support).  Throws std::invalid_argument otherwise.
Arc arc_at(const OddGraph& g, std::size_t index, int p);

/// All k+1 arcs leaving a vertex, ordered by position.
std::vector<Arc> arcs_of(const OddGraph& g, std::size_t index);

/// The middle-levels graph M_k: vertices are the weight-k and
/// weight-(k+1) subsets of {0, ..., 2k}; u ~ w iff the smaller is a
/// subset of the reverse of the larger.  reverse_complement_mask is
/// the pairing map between the levels: complement of the reversed
/// mask, an involution exchanging weights k and k+1.
struct MiddleGraph {
    int k = 0;
    int n_positions = 0;                 ///< 2k + 1
    std::vector<Mask> lower;             ///< weight k, sorted
    std::vector<Mask> upper;             ///< weight k+1, sorted

    bool adjacent(Mask u, Mask w) const; ///< one of each level
};

MiddleGraph build_middle(int k);

Mask reverse_mask(Mask m, int n_positions);

/// Complement of the reversed mask within n_positions bits.
Mask reverse_complement_mask(Mask m, int n_positions);

/// Lift of an O_k edge {x, y} to M_k: {x, reverse_complement_mask(y)}.
/// Defined (lands on an M_k edge) iff x and y are disjoint, which is
/// exactly O_k adjacency, so every O_k edge lifts two ways (via y or
/// via x).
Mask lift_partner(Mask y, int n_positions);

} // namespace nestcast
