#include "nestcast/two_factor.hpp"

#include "nestcast/catalan.hpp"
#include "nestcast/trgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace nestcast {

namespace {

DyckNest blow_to(DyckNest nest, int k) {
    while (static_cast<int>(nest.size() / 2) < k) nest = blow_nest(nest);
    return nest;
}

DyckNest blown_nest_of(std::uint64_t n, int k, const NestTable* table) {
    if (table != nullptr && table->k == k && n < table->nests.size())
        return blow_to(table->nests[n], k);
    return blow_to(nest_of(n), k);
}

/// A parenthesized group of the column word: the contiguous span of
/// word positions [lo, hi] (1-based) it encloses, and its nesting depth.
struct Group {
    int lo = 0;
    int hi = 0;
    int depth = 0;
};

} // namespace

ColumnPermutation permutation_of(std::uint64_t n, int k, const NestTable* table) {
    if (k < 1) throw std::invalid_argument("permutation_of: k must be positive");
    const std::string word = nest_to_word(blown_nest_of(n, k, table));
    const int m = 2 * k;

    // Separators between adjacent bits: 00 opens a group, 11 closes
    // one, 10 closes and reopens, 01 separates a comma pair.  Together
    // with the outer wrapper this tiles the word with bracket groups.
    std::vector<Group> groups;
    std::vector<Group> stack;
    stack.push_back(Group{1, m, 0}); // outer wrapper, may close early
    auto open = [&](int at) { stack.push_back(Group{at, 0, static_cast<int>(stack.size())}); };
    auto close = [&](int at) {
        Group g = stack.back();
        stack.pop_back();
        g.hi = at;
        groups.push_back(g);
    };
    for (int i = 1; i < m; ++i) {
        const bool a = word[static_cast<std::size_t>(i - 1)] == '1';
        const bool b = word[static_cast<std::size_t>(i)] == '1';
        if (!a && !b) {
            open(i + 1);
        } else if (a && b) {
            close(i);
        } else if (a && !b) {
            close(i);
            open(i + 1);
        }
    }
    close(m);
    if (!stack.empty())
        throw std::logic_error("permutation_of: unbalanced column groups");

    // Reverse every group's digit span, outermost groups first.
    std::stable_sort(groups.begin(), groups.end(),
                     [](const Group& x, const Group& y) { return x.depth < y.depth; });
    std::vector<int> values(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) values[static_cast<std::size_t>(i)] = i + 1;
    for (const Group& g : groups)
        std::reverse(values.begin() + g.lo - 1, values.begin() + g.hi);

    ColumnPermutation out;
    out.k = k;
    out.p = values;
    out.pi.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        out.pi[static_cast<std::size_t>(out.p[static_cast<std::size_t>(i)] - 1)] = i + 1;
    out.rev_pi.assign(out.pi.rbegin(), out.pi.rend());
    return out;
}

VerticalList vertical_list(const OddGraph& g, std::uint64_t n, const NestTable* table) {
    if (n >= g.class_nests.size())
        throw std::invalid_argument("vertical_list: rank out of range");
    const int k = g.k;
    VerticalList list;
    list.n = n;
    list.k = k;
    const ColumnPermutation perm = permutation_of(n, k, table);
    const Mask start = appearance_profile(g.class_nests[n], k);
    std::size_t idx = g.index_of(start);
    list.rows.push_back(start);
    list.row_class.push_back(g.vertex_class[idx]);
    list.row_rotation.push_back(g.vertex_rotation[idx]);
    for (int i = 0; i < 2 * k; ++i) {
        const int p = perm.rev_pi[static_cast<std::size_t>(i)];
        const Arc a = arc_at(g, idx, p);
        list.arc_pos.push_back(p);
        idx = g.index_of(a.to);
        list.rows.push_back(a.to);
        list.row_class.push_back(g.vertex_class[idx]);
        list.row_rotation.push_back(g.vertex_rotation[idx]);
    }
    const Arc closing = arc_at(g, idx, 0);
    if (closing.to != start)
        throw std::runtime_error("vertical_list: closing arc does not return to the start");
    list.arc_pos.push_back(0);
    return list;
}

TwoFactor uniform_two_factor(const OddGraph& g, const NestTable* table) {
    TwoFactor f;
    f.k = g.k;
    const std::uint64_t classes = catalan(g.k);
    std::vector<bool> seen(g.vertices.size(), false);
    for (std::uint64_t n = 0; n < classes; ++n) {
        f.cycles.push_back(vertical_list(g, n, table));
        for (const Mask m : f.cycles.back().rows) {
            const std::size_t idx = g.index_of(m);
            if (seen[idx])
                throw std::logic_error("uniform_two_factor: vertex reached twice");
            seen[idx] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::logic_error("uniform_two_factor: vertex missed by every list");
    return f;
}

FlippableTuple flippable_tuple(const VerticalList& list, int j) {
    const int rows = 2 * list.k; // candidate upper rows; the last row closes
    for (int i = 0; i < rows; ++i) {
        if (list.arc_pos[static_cast<std::size_t>(i)] == j) {
            FlippableTuple t;
            t.n = list.n;
            t.j = j;
            t.upper_row = i;
            t.upper = list.rows[static_cast<std::size_t>(i)];
            t.lower = list.rows[static_cast<std::size_t>(i) + 1];
            return t;
        }
    }
    throw std::invalid_argument("flippable_tuple: no row leaves at that position");
}

LiftedTwoFactor lift_two_factor(const TwoFactor& f) {
    LiftedTwoFactor out;
    out.k = f.k;
    const int n = 2 * f.k + 1;
    for (const VerticalList& list : f.cycles) {
        std::vector<Mask> cycle;
        cycle.reserve(2 * static_cast<std::size_t>(n));
        for (int t = 0; t < 2 * n; ++t) {
            const Mask v = list.rows[static_cast<std::size_t>(t % n)];
            cycle.push_back(t % 2 == 0 ? v : reverse_complement_mask(v, n));
        }
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

} // namespace nestcast
