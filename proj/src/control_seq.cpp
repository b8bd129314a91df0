#include "nestcast/control_seq.hpp"

#include "nestcast/catalan.hpp"
#include "nestcast/trgs.hpp"

#include <stdexcept>

namespace nestcast {

std::vector<XiSymbol> xi_build(int a, int b) {
    if (a < 1 || b < a) throw std::invalid_argument("xi_build: need 1 <= a <= b");
    std::vector<XiSymbol> out;
    if (a == 1) {
        if (b != 1) throw std::invalid_argument("xi_build: the level-1 string is xi_1^1 only");
        out.push_back(XiSymbol{0, 0}); // root marker
        out.push_back(XiSymbol{1, 1});
        return out;
    }
    if (a == 2) {
        out.push_back(XiSymbol{2, b - 1});
        for (int t = 1; t <= b; ++t) out.push_back(XiSymbol{1, t});
        return out;
    }
    out.push_back(XiSymbol{a, b - a + 1});
    out.push_back(XiSymbol{1, 1});
    for (int j = 2; j < a; ++j) {
        const std::vector<XiSymbol> part = xi_build(j, j);
        out.insert(out.end(), part.begin(), part.end());
    }
    for (int t = a; t <= b; ++t) {
        const std::vector<XiSymbol> part = xi_build(a - 1, t);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<std::uint64_t> triangle_line(int n) {
    if (n < 0 || n > catalan_max_k)
        throw std::out_of_range("triangle_line: n outside [0, 36]");
    std::vector<std::uint64_t> row{1};
    for (int r = 1; r <= n; ++r) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(r) + 1, 1);
        for (int j = 1; j < r; ++j)
            next[static_cast<std::size_t>(j)] =
                next[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
        next[static_cast<std::size_t>(r)] = next[static_cast<std::size_t>(r - 1)];
        row = std::move(next);
    }
    return {row.rbegin(), row.rend()};
}

JPrefix j_prefix(int k) {
    if (k < 1 || k > catalan_max_k)
        throw std::invalid_argument("j_prefix: k outside [1, 36]");
    JPrefix out;
    out.total = catalan(k);
    out.block_sizes.assign(static_cast<std::size_t>(k), 0);
    out.block_sizes[0] = catalan(k - 1);
    if (k == 1) return out;
    // Group the length-(k-1) strings by the length of their maximal
    // staircase prefix 1 2 3 ...
    std::string b = "1" + std::string(static_cast<std::size_t>(k) - 2, '0');
    for (std::uint64_t n = catalan(k - 1); n < out.total; ++n) {
        int s = 0;
        while (s < static_cast<int>(b.size()) && b[static_cast<std::size_t>(s)] == '1' + s)
            ++s;
        out.block_sizes[static_cast<std::size_t>(s)] += 1;
        b = trgs_successor(b);
    }
    return out;
}

std::vector<int> h_sequence(int k, const NestTable* table) {
    if (k < 1) throw std::invalid_argument("h_sequence: k must be positive");
    NestTable local;
    if (table == nullptr || table->k != k) {
        local = generate_table(k);
        table = &local;
    }
    const std::uint64_t total = catalan(k);
    std::vector<int> h(total, 0);
    std::string b = "1";
    for (std::uint64_t n = 1; n < total; ++n) {
        const std::uint64_t parent = trgs_rank(rho_of(b));
        h[n] = h_of(b, table->nests[parent]);
        b = trgs_successor(b);
    }
    return h;
}

std::vector<int> recreate_h(int k) {
    if (k < 1) throw std::invalid_argument("recreate_h: k must be positive");
    const std::uint64_t total = catalan(k);
    std::vector<int> h(total, 0);
    std::string b = "1";
    for (std::uint64_t r = 1; r < total; ++r, b = trgs_successor(b)) {
        const int len = static_cast<int>(b.size());
        if (b.find_first_not_of('0', 1) == std::string::npos) {
            h[r] = 0; // "1" and 1 0...0 start their weight class at zero
            continue;
        }
        std::uint64_t src;
        bool is_prepend;
        if (b[1] != '2') {
            // Leading 1 0^t stripped: the source is the shorter string it
            // was prepended to.
            const std::size_t at = b.find_first_not_of('0', 1);
            src = trgs_rank(b.substr(at));
            is_prepend = true;
        } else {
            // Digit bump at the end of the maximal staircase prefix
            // 1 2 ... s: the source decrements that digit.
            int s = 0;
            while (s < len && b[static_cast<std::size_t>(s)] == '1' + s) ++s;
            std::string source(b);
            --source[static_cast<std::size_t>(s) - 1];
            src = trgs_rank(source);
            is_prepend = false;
        }
        const int source_h = h[src];
        const int weight = len + 1; // lambda(r)
        switch (classify_flip(src, r)) {
        case FlipKind::preserved:
            h[r] = source_h;
            break;
        case FlipKind::supplementary_x_to_y:
            h[r] = is_prepend ? (weight - 1) + source_h : weight + source_h - 1;
            break;
        case FlipKind::supplementary_y_to_x:
            h[r] = is_prepend ? source_h - (weight - 1) : source_h + 1 - weight;
            break;
        }
    }
    // Thread end vertices must land on zero.
    for (const Thread& t : thread_partition(k)) {
        const std::uint64_t end = t.head + static_cast<std::uint64_t>(t.edge_count);
        if (end != 0 && h[end] != 0)
            throw std::logic_error("recreate_h: nonzero value at a thread end vertex");
    }
    return h;
}

} // namespace nestcast
