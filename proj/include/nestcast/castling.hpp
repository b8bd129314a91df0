#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nestcast/dyck.hpp"

namespace nestcast {

/// Castling: the tight Dyck nest F(n) of rank n is produced from the
/// parent nest F(rho(n)) by one castle step.  With g = gamma(b(n)) and
/// k = tight_half_length(n), the parent nest is blown up to weight k
/// and split (anchor excluded) as W | M | Z, where W holds the first
/// g-1 entries and Z the last g.  Inside M, with x = M[0], the block Y
/// starts at the first entry of value x+1 after position 0 and X is
/// everything before it; the child is W | Y | X | Z.
///
/// castle_step throws std::invalid_argument if M contains no entry of
/// value x+1 (the decomposition fails).
DyckNest castle_step(const DyckNest& parent, std::string_view b_child);

/// All tight nests F(0..C_k - 1), built by castling along ranks.
struct NestTable {
    int k = 0;                    ///< ranks cover half-lengths <= k
    std::vector<DyckNest> nests;  ///< nests[n] = F(n)
};

NestTable generate_table(int k);

/// F(n) alone, streaming along the root-to-n path (no full table).
DyckNest nest_of(std::uint64_t n);

/// Clone signature sigma(n) at weight k >= tight_half_length(n): entry
/// sigma_j = floor((pos(j_2) - pos(j_1)) / 2) over the k-blown nest,
/// j = 1..k-1.  Rendered sigma_{k-1} ... sigma_1 (sigma_1 rightmost).
using CloneSignature = std::vector<int>;

CloneSignature clone_of(std::uint64_t n, int k);
std::string render_clone(const CloneSignature& sigma);

/// Inverse of clone_of: rebuild the k-blown nest from its signature by
/// the greedy right-to-left placement (pairs i = 1..k-1 placed at the
/// rightmost admissible empty cells, i_1 exactly 2*sigma_i + 1 cells
/// left of i_2; the final two empty cells must be adjacent and take the
/// k-pair).  Throws std::invalid_argument if the signature is not
/// realisable.
DyckNest clone_decode(const CloneSignature& sigma, int k);

/// One castle step expressed purely on clone signatures: decode the
/// parent signature, castle, re-encode.  Postcondition (checked): the
/// result differs from the parent signature in exactly the
/// gamma(b(n))-th entry.
CloneSignature clone_update(const CloneSignature& parent_sigma, std::uint64_t n);

/// The two kinds of castle step producing rank n, distinguished by
/// whether the measured entry sigma_gamma(n) depends on the weight:
/// flavor X means the maximal pair of F(n) lies strictly between the
/// two occurrences of the value gamma(n), so blowing stretches that
/// span and sigma_gamma grows with k; flavor Y means it does not.
enum class CastleFlavor { X, Y };
CastleFlavor flavor_of(std::uint64_t n);
CastleFlavor flavor_of(std::string_view b, const DyckNest& parent_nest);

/// h(n), defined through the castle step at n with k = tight_half_length(n):
///   sigma_gamma(n) = k + h(n) with h < 0   for flavor X,
///   sigma_gamma(n) = h(n)     with h >= 0  for flavor Y.
/// The two-argument forms take b(n) and the tight parent nest, saving
/// the walk from the root when the caller already holds a table.
int h_of(std::uint64_t n);
int h_of(std::string_view b, const DyckNest& parent_nest);

/// Classification of the flip n -> r (two ranks related by a digit bump
/// or a prepend/strip of the leading 1 0...0 block).
enum class FlipKind { preserved, supplementary_x_to_y, supplementary_y_to_x };
FlipKind classify_flip(std::uint64_t n, std::uint64_t r);

/// Directory used for nest-table cache files: $NESTCAST_CACHE_DIR if
/// set, else $HOME/.cache/nestcast, else ./.nestcast_cache.
std::string default_cache_dir();

/// generate_table with a file cache.  The file
/// <dir>/nest_table_v1_k<k>.txt holds a header line and one rendered
/// nest per rank; a fresh run writes it, later runs parse it.  An empty
/// dir argument resolves to default_cache_dir().  A corrupt cache file
/// is regenerated.
NestTable load_or_generate_table(int k, const std::string& cache_dir = "");

} // namespace nestcast
