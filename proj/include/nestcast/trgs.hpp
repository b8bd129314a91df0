#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nestcast {

/// Tight restricted-growth strings (TRGS) over decimal digits, written
/// a_{k-1} a_{k-2} ... a_1 left to right.  A single digit is 0 or 1; a
/// longer string starts with a_{k-1} = 1 and every interior digit obeys
/// a_j <= a_{j+1} + 1 (indices decreasing rightwards).  Strings are
/// ordered shorter-first, lexicographically within a length, and ranked
/// globally from 0 ("0") so that length-l strings occupy the rank
/// interval [C_l, C_{l+1}).

/// True iff b is a valid TRGS.
bool is_trgs(std::string_view b);

/// Global rank of a valid TRGS.  Throws std::invalid_argument otherwise.
std::uint64_t trgs_rank(std::string_view b);

/// The TRGS of global rank n.  b(0) = "0", b(C_k) = "1" followed by
/// k-1 zeros.  Strings are decimal, so ranks are supported while every
/// digit stays in 0..9 (all of k <= 10 does); trgs_unrank and
/// trgs_successor throw std::out_of_range beyond that.
std::string trgs_unrank(std::uint64_t n);

/// Half-length of the tight Dyck nest of rank n: length(b(n)) + 1 for
/// n >= 1, and 1 for the root.
int tight_half_length(std::uint64_t n);

/// gamma(b): 1-based position, counted from the right, of the rightmost
/// nonzero digit.  Undefined (throws) for the root "0".
int gamma_of(std::string_view b);
int gamma_of(std::uint64_t n);

/// rho(b): decrement the digit at position gamma(b); a string of the
/// form 10...0 collapses to the root "0".  This is the parent map of
/// the castling tree.
std::string rho_of(std::string_view b);

/// Rank of the parent rho(b(n)).  Throws for n = 0.
std::uint64_t parent_of(std::uint64_t n);

/// Ranks of the children of b(n) among strings of length < k.  The root
/// has children 1, 10, 100, ... up to length k-1; any other vertex b
/// has children b + e_p for p in [1, gamma(b)], where p < gamma is
/// always valid and p = gamma is valid iff a_gamma <= a_{gamma+1}.
std::vector<std::uint64_t> children_of(std::uint64_t n, int k);

/// The next TRGS in rank order.
std::string trgs_successor(std::string_view b);

/// A maximal thread of the castling tree: the head vertex (whose gamma
/// exceeds 1, or the root) followed by edge_count consecutive ranks
/// with gamma = 1.
struct Thread {
    std::uint64_t head = 0;   ///< rank n_0 of the first vertex
    int edge_count = 0;       ///< s = number of edges (vertices - 1)
    int head_gamma = 0;       ///< gamma(head); 0 for the root thread
};

/// Partition of the ranks [0, C_k) into threads, in head order.  A new
/// thread starts at every n with rho(n) != n-1 (and at the root).
std::vector<Thread> thread_partition(int k);

} // namespace nestcast
