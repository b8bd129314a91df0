#pragma once

#include <cstdint>
#include <vector>

namespace nestcast {

/// Largest k for which C_k fits in an unsigned 64-bit integer.
inline constexpr int catalan_max_k = 36;

/// Catalan number C_k, computed once by the convolution recurrence
///   C_0 = 1,  C_{n+1} = sum_{i=0}^{n} C_i * C_{n-i}
/// and memoised.  Throws std::out_of_range for k < 0 or k > catalan_max_k.
std::uint64_t catalan(int k);

/// The full table C_0 .. C_{catalan_max_k}.
const std::vector<std::uint64_t>& catalan_table();

/// Independent cross-check of catalan(): the closed form
/// C_k = binom(2k, k) / (k + 1), evaluated in 128-bit arithmetic.
std::uint64_t catalan_closed_form(int k);

/// Ballot number N(m, v): the number of valid completions of a
/// restricted-growth string when m digits remain to be chosen and the
/// previously placed digit is v.  N(0, v) = 1 and
/// N(m, v) = sum_{d=0}^{v+1} N(m-1, d).  Used by rank/unrank.
std::uint64_t ballot_count(int m, int v);

} // namespace nestcast
