#include "doctest.h"

#include "golden.hpp"
#include "test_config.hpp"

#include "nestcast/catalan.hpp"
#include "nestcast/json_io.hpp"
#include "nestcast/odd_graph.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

using namespace nestcast;

namespace {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) /
                                      static_cast<std::uint64_t>(i);
    return r;
}

Mask rotate_left(Mask m, int by, int n) {
    Mask out = 0;
    for (int p = 0; p < n; ++p)
        if (m & (Mask{1} << p)) out |= Mask{1} << ((p - by % n + n) % n);
    return out;
}

} // namespace

TEST_CASE("profiles mark the second appearance of each pair") {
    const NestTable t = generate_table(4);
    const auto words = testutil::golden_lines("blown4_words.txt");
    for (std::size_t n = 0; n < words.size(); ++n) {
        DyckNest nest = t.nests[n];
        while (nest.size() < 8) nest = blow_nest(nest);
        const Mask profile = appearance_profile(t.nests[n], 4);
        CHECK(popcount_mask(profile) == 4);
        CHECK((profile & 1u) == 0); // anchor position clear
        const std::string anchored = "0" + words[n];
        Mask expected = 0;
        for (std::size_t p = 0; p < anchored.size(); ++p)
            if (anchored[p] == '1') expected |= Mask{1} << p;
        CHECK(profile == expected);
    }
}

TEST_CASE("vertices enumerate all weight-k masks with a unique class pair") {
    for (int k = 1; k <= 5; ++k) {
        const OddGraph g = build_odd(k);
        const int n = 2 * k + 1;
        CHECK(g.k == k);
        CHECK(g.n_positions == n);
        REQUIRE(g.vertices.size() == binom(n, k));
        REQUIRE(g.class_nests.size() == catalan(k));
        std::set<std::pair<std::uint64_t, int>> pairs;
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            const Mask m = g.vertices[i];
            CHECK(popcount_mask(m) == k);
            if (i > 0) CHECK(g.vertices[i - 1] < m);
            CHECK(g.index_of(m) == i);
            CHECK(g.has_vertex(m));
            CHECK(g.vertex_class[i] < catalan(k));
            CHECK(g.vertex_rotation[i] >= 0);
            CHECK(g.vertex_rotation[i] < n);
            CHECK(pairs.insert({g.vertex_class[i], g.vertex_rotation[i]}).second);
        }
        CHECK(!g.has_vertex(0));
    }
}

TEST_CASE("neighbors are exactly the disjoint masks") {
    const OddGraph g = build_odd(3);
    for (const Mask u : g.vertices) {
        const auto nb = g.neighbors(u);
        CHECK(nb.size() == 4); // k + 1
        for (const Mask w : nb) {
            CHECK((u & w) == 0);
            CHECK(g.has_vertex(w));
        }
    }
}

TEST_CASE("the rotation classes of the k=3 graph are the frozen orbits") {
    const OddGraph g = build_odd(3);
    const auto rows = testutil::golden_rows("rotation_classes_k3.txt");
    REQUIRE(rows.size() == 5);
    for (std::size_t m = 0; m < rows.size(); ++m) {
        REQUIRE(rows[m].size() == 7);
        const Mask profile = appearance_profile(g.class_nests[m], 3);
        CHECK(bits_to_mask(rows[m][0]) == profile);
        for (std::size_t j = 0; j < 7; ++j) {
            const Mask v = bits_to_mask(rows[m][j]);
            // Entry j is the profile shifted one more step each column.
            CHECK(v == rotate_left(profile, static_cast<int>(j), 7));
            const std::size_t idx = g.index_of(v);
            CHECK(g.vertex_class[idx] == m);
            CHECK(g.vertex_rotation[idx] == static_cast<int>((7 - j) % 7));
        }
    }
}

TEST_CASE("class vertices render their own nests at rotation zero") {
    const OddGraph g = build_odd(3);
    for (std::size_t m = 0; m < g.class_nests.size(); ++m) {
        const std::size_t idx = g.index_of(appearance_profile(g.class_nests[m], 3));
        CHECK(g.vertex_rotation[idx] == 0);
        CHECK(g.vertex_nest(idx) == render_nest(g.class_nests[m], true));
    }
}

TEST_CASE("arcs leave at free positions and land on the punctured complement") {
    const OddGraph g = build_odd(3);
    const Mask full = (Mask{1} << 7) - 1;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const Mask u = g.vertices[i];
        const auto arcs = arcs_of(g, i);
        CHECK(arcs.size() == 4);
        int prev_pos = -1;
        for (const Arc& a : arcs) {
            CHECK(a.from == u);
            CHECK(a.position > prev_pos);
            prev_pos = a.position;
            CHECK((u & (Mask{1} << a.position)) == 0);
            CHECK(a.to == ((~u & full) & ~(Mask{1} << a.position)));
            // The color is the nest digit at that position (anchor = 0).
            const std::string nest = g.vertex_nest(i);
            const char c = nest[static_cast<std::size_t>(a.position)];
            CHECK(a.color == c - '0');
        }
        // A position inside the support is not an arc.
        for (int p = 0; p < 7; ++p)
            if (u & (Mask{1} << p))
                CHECK_THROWS_AS(arc_at(g, i, p), std::invalid_argument);
    }
}

TEST_CASE("an arc and its reverse have colors summing to k") {
    for (int k : {3, 4}) {
        const OddGraph g = build_odd(k);
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            for (const Arc& a : arcs_of(g, i)) {
                const std::size_t j = g.index_of(a.to);
                bool found = false;
                for (const Arc& back : arcs_of(g, j)) {
                    if (back.to != a.from) continue;
                    found = true;
                    CHECK(a.color + back.color == k);
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("the twenty frozen k=3 adjacencies reproduce") {
    const OddGraph g = build_odd(3);
    const auto rows = testutil::golden_rows("arcs_k3.txt");
    REQUIRE(rows.size() == 20);
    for (const auto& row : rows) {
        REQUIRE(row.size() == 5);
        const std::uint64_t m = std::stoull(row[0]);
        const int p = std::stoi(row[1]);
        const std::size_t from = g.index_of(appearance_profile(g.class_nests[m], 3));
        const Arc a = arc_at(g, from, p);
        CHECK((g.vertices[from] & a.to) == 0); // disjoint supports
        const std::size_t to = g.index_of(a.to);
        CHECK(g.vertex_nest(to) == row[2]);
        CHECK(g.vertex_class[to] == std::stoull(row[3]));
        CHECK(g.vertex_rotation[to] == std::stoi(row[4]));
    }
}

TEST_CASE("mask reversal maps are involutions pairing the two levels") {
    const int n = 9;
    std::mt19937_64 rng(testcfg::seed);
    for (int trial = 0; trial < 200; ++trial) {
        const Mask m = static_cast<Mask>(rng()) & ((Mask{1} << n) - 1);
        CHECK(reverse_mask(reverse_mask(m, n), n) == m);
        CHECK(reverse_complement_mask(reverse_complement_mask(m, n), n) == m);
        CHECK(popcount_mask(reverse_complement_mask(m, n)) == n - popcount_mask(m));
    }
}

TEST_CASE("the middle-levels graph joins masks nested under reversal") {
    const MiddleGraph mg = build_middle(3);
    CHECK(mg.k == 3);
    CHECK(mg.n_positions == 7);
    CHECK(mg.lower.size() == 35);
    CHECK(mg.upper.size() == 35);
    for (const Mask u : mg.lower) CHECK(popcount_mask(u) == 3);
    for (const Mask w : mg.upper) CHECK(popcount_mask(w) == 4);
    // Adjacency is equivalent to the smaller fitting inside the reverse of
    // the larger.
    for (const Mask u : mg.lower)
        for (const Mask w : mg.upper) {
            const bool expected = (u & ~reverse_mask(w, 7)) == 0;
            CHECK(mg.adjacent(u, w) == expected);
        }
}

TEST_CASE("edge lifts of the odd graph land on middle-levels edges") {
    const OddGraph g = build_odd(3);
    const MiddleGraph mg = build_middle(3);
    for (const Mask u : g.vertices)
        for (const Mask w : g.neighbors(u)) {
            CHECK(mg.adjacent(u, lift_partner(w, 7)));
            CHECK(mg.adjacent(w, lift_partner(u, 7)));
        }
}
