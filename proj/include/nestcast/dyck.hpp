#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nestcast {

/// A Dyck word of weight k: 2k bits, 0 = up-step, 1 = down-step, every
/// prefix having at least as many 0s as 1s and the total balanced.
bool validate_word(std::string_view f);

/// A Dyck nest: the 2k step positions of a Dyck word labelled with the
/// pair indices 1..k.  Within each horizontal layer [y, y+1], taken in
/// ascending y order, the steps alternate up, down and are paired
/// consecutively; pairs are then numbered per layer right to left (by
/// descending up-step position), continuing the count across layers.
using DyckNest = std::vector<int>;

/// Nest of a Dyck word.  Throws std::invalid_argument on invalid input.
DyckNest word_to_nest(std::string_view f);

/// Word of a nest: first occurrence of a label becomes 0, second 1.
std::string nest_to_word(const DyckNest& nest);

/// True iff nest is the labelling of some Dyck word.
bool validate_nest(const DyckNest& nest);

/// Blowing: insert the two entries (k+1)(k+1) between the unique
/// adjacent pair of maximal entries k k, raising the weight by one.
DyckNest blow_nest(const DyckNest& nest);

/// Single reduction step when the nest has the contiguous pattern
/// (k-1) k k (k-1); returns false if the nest is tight at its weight.
bool reduce_step(DyckNest& nest);

/// Fully reduce a nest to its tight core (weight never drops below 1).
DyckNest reduce_tight(DyckNest nest);

/// The involution on Dyck words: reverse the string and complement
/// every bit.  Preserves Dyck validity and weight.
std::string reversed_complement(std::string_view f);

/// Render a nest (optionally with the leading anchor 0) as contiguous
/// digits when every label is at most 9 and as comma-separated decimal
/// otherwise.
std::string render_nest(const DyckNest& nest, bool with_anchor = false);

/// Parse the output of render_nest (with or without anchor).
DyckNest parse_nest(std::string_view text);

} // namespace nestcast
