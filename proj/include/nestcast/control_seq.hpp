#pragma once

#include "nestcast/castling.hpp"

#include <cstdint>
#include <vector>

namespace nestcast {

/// One symbol of a control string: a digit with a subindex, e.g. 2_3.
/// The root marker * is encoded as digit 0, sub 0.
struct XiSymbol {
    int digit = 0;
    int sub = 0;
};

/// The recursive control strings:
///   xi_1^1     = * | 1_1
///   xi_2^b     = 2_{b-1} | 1_1 | 1_2 | ... | 1_b
///   xi_a^b     = a_{b-a+1} | 1_1 | xi_2^2 | ... | xi_{a-1}^{a-1}
///                | xi_{a-1}^a | ... | xi_{a-1}^b        (a >= 3)
/// The digit sequence of the concatenation J = xi_1^1 | xi_2^2 | ...
/// is the gamma sequence of the ranks in order (with * at rank 0), and
/// |xi_a^b| equals the Catalan-triangle entry T(b+1, a-1).
std::vector<XiSymbol> xi_build(int a, int b);

/// Catalan triangle line for row n: T(n, 0..n) reversed, so the line
/// starts with C_n and ends with 1.  T(n, j) = T(n, j-1) + T(n-1, j),
/// T(n, 0) = 1, T(n, n) = C_n.
std::vector<std::uint64_t> triangle_line(int n);

/// Block structure of the rank prefix [0, C_k): the initial block
/// [0, C_{k-1}) followed by the length-(k-1) ranks grouped by maximal
/// staircase-prefix length s = 1..k-1.  The block sizes equal
/// triangle_line(k-1).
struct JPrefix {
    std::uint64_t total = 0;                ///< C_k
    std::vector<std::uint64_t> block_sizes; ///< k blocks
};

JPrefix j_prefix(int k);

/// Reconstruction of the h sequence for all ranks in [1, C_k) without
/// clone signatures: h = 0 at the root children 10...0 and thread end
/// vertices, and every other rank is reached from a smaller one by a
/// digit-bump or prepend/strip flip whose h transform is determined by
/// classify_flip.  Index [n] holds h(n); index [0] is 0 by convention.
std::vector<int> recreate_h(int k);

/// Direct h values via h_of, same indexing, for comparison.  A
/// precomputed nest table for the same k avoids rebuilding one.
std::vector<int> h_sequence(int k, const NestTable* table = nullptr);

} // namespace nestcast
