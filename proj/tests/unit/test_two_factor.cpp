#include "doctest.h"

#include "golden.hpp"
#include "test_config.hpp"

#include "nestcast/catalan.hpp"
#include "nestcast/hamilton.hpp"
#include "nestcast/two_factor.hpp"
#include "nestcast/trgs.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

using namespace nestcast;

namespace {

std::uint64_t rank_of_padded(const std::string& padded) {
    std::string b = padded;
    while (b.size() > 1 && b.front() == '0') b.erase(b.begin());
    return trgs_rank(b);
}

std::string join_digits(const std::vector<int>& v) {
    std::string s;
    for (const int d : v) s += static_cast<char>('0' + d);
    return s;
}

} // namespace

TEST_CASE("column permutations match the frozen cases") {
    const auto rows = testutil::golden_rows("permutations.txt");
    REQUIRE(rows.size() == 9);
    for (const auto& row : rows) {
        REQUIRE(row.size() == 4);
        const int k = std::stoi(row[0]);
        const std::uint64_t n = rank_of_padded(row[1]);
        const ColumnPermutation cp = permutation_of(n, k);
        CHECK(cp.k == k);
        CHECK(join_digits(cp.p) == row[2]);
        CHECK(join_digits(cp.pi) == row[3]);
    }
}

TEST_CASE("permutations invert and reverse consistently") {
    std::mt19937_64 rng(testcfg::seed);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 5);
        const std::uint64_t n = rng() % catalan(k);
        const ColumnPermutation cp = permutation_of(n, k);
        REQUIRE(cp.p.size() == static_cast<std::size_t>(2 * k));
        REQUIRE(cp.pi.size() == cp.p.size());
        REQUIRE(cp.rev_pi.size() == cp.p.size());
        std::vector<bool> seen(cp.p.size() + 1, false);
        for (std::size_t i = 0; i < cp.p.size(); ++i) {
            const int v = cp.p[i];
            REQUIRE(v >= 1);
            REQUIRE(v <= 2 * k);
            CHECK(!seen[static_cast<std::size_t>(v)]);
            seen[static_cast<std::size_t>(v)] = true;
            CHECK(cp.pi[static_cast<std::size_t>(v) - 1] == static_cast<int>(i) + 1);
            CHECK(cp.rev_pi[i] == cp.pi[cp.pi.size() - 1 - i]);
        }
    }
}

TEST_CASE("the k=1 and k=2 list rows reproduce with their arc positions") {
    for (const auto& [file, k] :
         {std::pair{"list_rows_k1.txt", 1}, std::pair{"list_rows_k2.txt", 2}}) {
        const OddGraph g = build_odd(k);
        const TwoFactor f = uniform_two_factor(g);
        for (const auto& row : testutil::golden_rows(file)) {
            REQUIRE(row.size() == 4);
            const std::size_t list = std::stoull(row[0]);
            const std::size_t r = std::stoull(row[1]);
            const VerticalList& l = f.cycles[list];
            CHECK(g.vertex_nest(g.index_of(l.rows[r])) == row[2]);
            CHECK(l.arc_pos[r] == std::stoi(row[3]));
        }
    }
}

TEST_CASE("the k=3 list rows carry the frozen classes and rotations") {
    const OddGraph g = build_odd(3);
    const TwoFactor f = uniform_two_factor(g);
    const auto rows = testutil::golden_rows("list_rows_k3.txt");
    REQUIRE(rows.size() == 35);
    for (const auto& row : rows) {
        REQUIRE(row.size() == 6);
        const std::size_t list = std::stoull(row[0]);
        const std::size_t r = std::stoull(row[1]);
        const VerticalList& l = f.cycles[list];
        CHECK(g.vertex_nest(g.index_of(l.rows[r])) == row[2]);
        CHECK(l.arc_pos[r] == std::stoi(row[3]));
        CHECK(l.row_class[r] == std::stoull(row[4]));
        CHECK(l.row_rotation[r] == std::stoi(row[5]));
    }
}

TEST_CASE("the first k=4 list follows the frozen arc-position schedule") {
    const OddGraph g = build_odd(4);
    const VerticalList l = vertical_list(g, 0);
    const auto rows = testutil::golden_rows("list0_arcpos_k4.txt");
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].size() == l.arc_pos.size());
    for (std::size_t i = 0; i < l.arc_pos.size(); ++i)
        CHECK(l.arc_pos[i] == std::stoi(rows[0][i]));
}

TEST_CASE("lists start at their class profile and close at position zero") {
    for (int k = 1; k <= 5; ++k) {
        const OddGraph g = build_odd(k);
        const TwoFactor f = uniform_two_factor(g);
        REQUIRE(f.cycles.size() == catalan(k));
        std::set<Mask> seen;
        for (std::uint64_t n = 0; n < f.cycles.size(); ++n) {
            const VerticalList& l = f.cycles[n];
            CHECK(l.n == n);
            CHECK(l.k == k);
            REQUIRE(l.rows.size() == static_cast<std::size_t>(2 * k + 1));
            REQUIRE(l.arc_pos.size() == l.rows.size());
            CHECK(l.rows[0] == appearance_profile(g.class_nests[n], k));
            CHECK(l.arc_pos.back() == 0);
            for (const Mask m : l.rows) CHECK(seen.insert(m).second);
        }
        CHECK(seen.size() == g.vertices.size());
    }
}

TEST_CASE("flippable tuples are the row pairs at their flip position") {
    const OddGraph g = build_odd(3);
    const TwoFactor f = uniform_two_factor(g);
    for (const auto& row : testutil::golden_rows("list_marks_k3.txt")) {
        REQUIRE(row.size() == 5);
        const std::size_t list = std::stoull(row[0]);
        const int lower_row = std::stoi(row[1]);
        const std::size_t z = std::stoull(row[2]);
        const VerticalList& l = f.cycles[list];
        const int j = l.arc_pos[static_cast<std::size_t>(lower_row) - 1];
        const FlippableTuple t = flippable_tuple(l, j);
        CHECK(t.n == list);
        CHECK(t.j == j);
        CHECK(t.upper_row == lower_row - 1);
        CHECK(t.upper == l.rows[static_cast<std::size_t>(lower_row) - 1]);
        CHECK(t.lower == l.rows[static_cast<std::size_t>(lower_row)]);
        // The marked pair belongs to hyperedge z of the spanning structure.
        const SpanningTree tree = spanning_tree(3);
        REQUIRE(z < tree.edges.size());
        bool found = false;
        for (const TupleRef& ref : tree.edges[z])
            if (ref.n == list && ref.position == j) found = true;
        CHECK(found);
    }
    // Position 0 belongs to the closing row only and is not flippable.
    CHECK_THROWS_AS(flippable_tuple(f.cycles[0], 0), std::invalid_argument);
}

TEST_CASE("the lifted factor doubles each cycle, alternating levels") {
    const int k = 3;
    const OddGraph g = build_odd(k);
    const MiddleGraph mg = build_middle(k);
    const TwoFactor f = uniform_two_factor(g);
    const LiftedTwoFactor lifted = lift_two_factor(f);
    CHECK(lifted.k == k);
    REQUIRE(lifted.cycles.size() == f.cycles.size());
    std::set<Mask> seen;
    for (std::size_t n = 0; n < lifted.cycles.size(); ++n) {
        const auto& cyc = lifted.cycles[n];
        REQUIRE(cyc.size() == static_cast<std::size_t>(2 * (2 * k + 1)));
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            CHECK(popcount_mask(cyc[t]) == (t % 2 == 0 ? k : k + 1));
            const Mask a = cyc[t];
            const Mask b = cyc[(t + 1) % cyc.size()];
            CHECK(mg.adjacent(t % 2 == 0 ? a : b, t % 2 == 0 ? b : a));
            CHECK(seen.insert(a).second);
        }
    }
    CHECK(seen.size() == 70);
}
