#include "nestcast/catalan.hpp"

#include <stdexcept>

namespace nestcast {

const std::vector<std::uint64_t>& catalan_table() {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> t(catalan_max_k + 1, 0);
        t[0] = 1;
        for (int n = 0; n < catalan_max_k; ++n) {
            std::uint64_t sum = 0;
            for (int i = 0; i <= n; ++i) sum += t[i] * t[n - i];
            t[n + 1] = sum;
        }
        return t;
    }();
    return table;
}

std::uint64_t catalan(int k) {
    if (k < 0 || k > catalan_max_k)
        throw std::out_of_range("catalan: k outside [0, 36]");
    return catalan_table()[static_cast<std::size_t>(k)];
}

std::uint64_t catalan_closed_form(int k) {
    if (k < 0 || k > catalan_max_k)
        throw std::out_of_range("catalan_closed_form: k outside [0, 36]");
    // binom(2k, k) incrementally: binom(2k, k) = prod_{i=1}^{k} (k+i)/i,
    // kept exact by multiplying first in 128 bits.
    unsigned __int128 binom = 1;
    for (int i = 1; i <= k; ++i) {
        binom = binom * static_cast<unsigned>(k + i);
        binom /= static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(binom / static_cast<unsigned>(k + 1));
}

namespace {

// ballot_count memo over the triangle m + v <= ballot_limit.  The
// diagonal maximum is N(limit, 0) = C_{limit+1}, so 35 is the largest
// limit that stays inside 64 bits (C_36 fits, C_37 does not).
constexpr int ballot_limit = 35;

const std::vector<std::vector<std::uint64_t>>& ballot_grid() {
    static const std::vector<std::vector<std::uint64_t>> grid = [] {
        std::vector<std::vector<std::uint64_t>> g(
            ballot_limit + 1, std::vector<std::uint64_t>(ballot_limit + 2, 0));
        for (int v = 0; v <= ballot_limit + 1; ++v) g[0][static_cast<std::size_t>(v)] = 1;
        for (int m = 1; m <= ballot_limit; ++m)
            for (int v = 0; v + m <= ballot_limit; ++v) {
                std::uint64_t sum = 0;
                for (int d = 0; d <= v + 1; ++d)
                    sum += g[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(d)];
                g[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)] = sum;
            }
        return g;
    }();
    return grid;
}

} // namespace

std::uint64_t ballot_count(int m, int v) {
    if (m < 0 || v < 0 || m + v > ballot_limit)
        throw std::out_of_range("ballot_count: arguments outside the supported triangle");
    return ballot_grid()[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)];
}

} // namespace nestcast
