#pragma once

#include "nestcast/odd_graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nestcast {

/// The column permutation of a rank-n, weight-k nest, built from the
/// parenthesisation of its anchored word: adjacent bits map to
/// separators (00 -> "(", 01 -> ",", 10 -> ")(", 11 -> ")"), bit
/// positions are numbered 1..2k left to right, and every bracket group
/// below the root line is digit-reversed level by level (comma pairs
/// swap when reached).  p is the resulting digit string, pi = p^{-1},
/// and rev_pi is pi reversed; rev_pi[1..2k] (0-based positions, anchor
/// = 0) is the arc-position schedule of the vertical list.
struct ColumnPermutation {
    int k = 0;
    std::vector<int> p;      ///< size 2k, values 1..2k
    std::vector<int> pi;     ///< inverse of p
    std::vector<int> rev_pi; ///< pi reversed
};

ColumnPermutation permutation_of(std::uint64_t n, int k,
                                 const NestTable* table = nullptr);

/// The vertical list L(n) of rank n at weight k: 2k + 1 rows starting
/// at the profile of 0 F^k(n), each row following the arc at the
/// scheduled position of the previous row; the final row's arc at
/// position 0 returns to the start.  Row i records its vertex and its
/// outgoing arc position j (the subindex).
struct VerticalList {
    std::uint64_t n = 0;     ///< defining rank
    int k = 0;
    std::vector<Mask> rows;          ///< 2k + 1 vertices
    std::vector<int> arc_pos;        ///< outgoing position per row
    std::vector<std::uint64_t> row_class;  ///< class rank per row
    std::vector<int> row_rotation;   ///< anchor offset per row
};

VerticalList vertical_list(const OddGraph& g, std::uint64_t n,
                           const NestTable* table = nullptr);

/// The uniform 2-factor of O_k: the C_k vertical lists, each a cycle
/// of length 2k + 1, partitioning all C(2k+1, k) vertices.
struct TwoFactor {
    int k = 0;
    std::vector<VerticalList> cycles;
};

TwoFactor uniform_two_factor(const OddGraph& g,
                             const NestTable* table = nullptr);

/// A flippable tuple FT(n, j): the consecutive row pair of list n whose
/// upper row has outgoing arc position j.  The two rows are an edge of
/// the 2-factor, and their nest digits at position j are
/// k-supplementary.
struct FlippableTuple {
    std::uint64_t n = 0;  ///< list rank
    int j = 0;            ///< flip position
    int upper_row = 0;    ///< row index in the list (lower = upper+1)
    Mask upper = 0;
    Mask lower = 0;
};

/// Throws std::invalid_argument if no row of list n other than the
/// last one has outgoing position j (the last row's j = 0 closes the
/// cycle and is not flippable).
FlippableTuple flippable_tuple(const VerticalList& list, int j);

/// Lift of the uniform 2-factor to M_k: each (2k+1)-cycle v_0 v_1 ...
/// becomes the 2(2k+1)-cycle v_0, rc(v_1), v_2, ..., alternating
/// levels (rc = reverse_complement_mask), because 2k + 1 is odd.
struct LiftedTwoFactor {
    int k = 0;
    std::vector<std::vector<Mask>> cycles; ///< each of length 2(2k+1)
};

LiftedTwoFactor lift_two_factor(const TwoFactor& f);

} // namespace nestcast
