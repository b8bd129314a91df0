#include "doctest.h"

#include "golden.hpp"
#include "test_config.hpp"

#include "nestcast/catalan.hpp"
#include "nestcast/hamilton.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace nestcast;

namespace {

using EdgeSet = std::set<std::vector<std::pair<std::uint64_t, int>>>;

EdgeSet normalized(const SpanningTree& t) {
    EdgeSet out;
    for (const Hyperedge& e : t.edges) {
        std::vector<std::pair<std::uint64_t, int>> members;
        for (const TupleRef& ref : e) members.emplace_back(ref.n, ref.position);
        std::sort(members.begin(), members.end());
        out.insert(members);
    }
    return out;
}

EdgeSet golden_tree(const std::string& file) {
    const auto rows = testutil::golden_rows(file);
    EdgeSet out;
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
        REQUIRE(rows[i][0] == "e");
        REQUIRE(rows[i + 1][0] == "p");
        REQUIRE(rows[i].size() == rows[i + 1].size());
        std::vector<std::pair<std::uint64_t, int>> members;
        for (std::size_t j = 1; j < rows[i].size(); ++j)
            members.emplace_back(std::stoull(rows[i][j]), std::stoi(rows[i + 1][j]));
        std::sort(members.begin(), members.end());
        out.insert(members);
    }
    return out;
}

} // namespace

TEST_CASE("the base pattern sets carry their defining words and marks") {
    const auto check = [](const PatternEdge& e,
                          const std::vector<std::pair<std::string, int>>& expected) {
        REQUIRE(e.size() == expected.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            CHECK(e[i].word == expected[i].first);
            CHECK(e[i].phi == expected[i].second);
        }
    };
    check(pattern_s1(""), {{"000111", 1}, {"001101", 4}, {"001011", 0}});
    check(pattern_s1("01"), {{"00100111", 1}, {"00101101", 4}, {"00101011", 0}});
    check(pattern_s2(), {{"00110011", 6}, {"00100111", 0}, {"00010111", 2}});
    check(pattern_s3(), {{"000111", 0}, {"010011", 1}, {"010101", 5}});
    check(pattern_s4(), {{"000111", 0}, {"001011", 1}, {"010011", 3}, {"010101", 5}});
}

TEST_CASE("barring reverses, complements and mirrors the mark") {
    const PatternWord w{"001101", 4};
    const PatternWord b = bar_word(w);
    CHECK(b.word == "010011");
    CHECK(b.phi == 1);
    const PatternWord bb = bar_word(b);
    CHECK(bb.word == w.word);
    CHECK(bb.phi == w.phi);
}

TEST_CASE("affix helpers shift marks by the appended length only") {
    const PatternEdge e = pattern_s3();
    const PatternEdge pre = prepend_edge("01", e);
    const PatternEdge app = append_edge(e, "0011");
    for (std::size_t i = 0; i < e.size(); ++i) {
        CHECK(pre[i].word == "01" + e[i].word);
        CHECK(pre[i].phi == e[i].phi);
        CHECK(app[i].word == e[i].word + "0011");
        CHECK(app[i].phi == e[i].phi + 4);
    }
    const PatternEdge emb = embed_edge(e, "01");
    for (std::size_t i = 0; i < e.size(); ++i) {
        const PatternWord b = bar_word(e[i]);
        CHECK(emb[i].word == "0" + b.word + "1" + "01");
        CHECK(emb[i].phi == b.phi + 1 + 2);
    }
}

TEST_CASE("dyck word enumeration is sorted and complete") {
    CHECK(dyck_words(0) == std::vector<std::string>{""});
    for (int k = 1; k <= 7; ++k) {
        const auto words = dyck_words(k);
        CHECK(words.size() == catalan(k));
        CHECK(std::is_sorted(words.begin(), words.end()));
    }
}

TEST_CASE("the k=3 spanning structure matches the frozen hyperedges") {
    CHECK(normalized(spanning_tree(3)) == golden_tree("spanning_k3.txt"));
}

TEST_CASE("the k=4 spanning structure matches the frozen hyperedges") {
    CHECK(normalized(spanning_tree(4)) == golden_tree("spanning_k4.txt"));
}

TEST_CASE("spanning structures join all lists with flippable members") {
    for (int k = 3; k <= 6; ++k) {
        const SpanningTree tree = spanning_tree(k);
        CHECK(tree.k == k);
        std::uint64_t join_count = 0;
        const OddGraph g = build_odd(k);
        const TwoFactor f = uniform_two_factor(g);
        for (const Hyperedge& e : tree.edges) {
            REQUIRE(e.size() >= 3);
            REQUIRE(e.size() <= 4);
            join_count += e.size() - 1;
            for (const TupleRef& ref : e) {
                REQUIRE(ref.n < catalan(k));
                CHECK(ref.position >= 1);
                CHECK(ref.position <= 2 * k);
                // Resolvable to a real row pair of that list.
                const FlippableTuple t =
                    flippable_tuple(f.cycles[ref.n], ref.position);
                CHECK(t.n == ref.n);
            }
        }
        CHECK(join_count == catalan(k) - 1);
    }
    CHECK_THROWS_AS(spanning_tree(2), std::invalid_argument);
}

TEST_CASE("flipping cycles alternate factor edges and free connectors") {
    const int k = 3;
    const OddGraph g = build_odd(k);
    const TwoFactor f = uniform_two_factor(g);
    std::set<std::pair<Mask, Mask>> factor;
    for (const VerticalList& l : f.cycles) {
        const std::size_t m = l.rows.size();
        for (std::size_t i = 0; i < m; ++i) {
            factor.insert({l.rows[i], l.rows[(i + 1) % m]});
            factor.insert({l.rows[(i + 1) % m], l.rows[i]});
        }
    }
    for (const Hyperedge& e : spanning_tree(k).edges) {
        const FlippingCycle fc = flipping_cycle(g, f, e);
        REQUIRE(fc.vertices.size() == 2 * e.size());
        std::set<Mask> distinct(fc.vertices.begin(), fc.vertices.end());
        CHECK(distinct.size() == fc.vertices.size());
        for (std::size_t t = 0; t < fc.vertices.size(); ++t) {
            const Mask a = fc.vertices[t];
            const Mask b = fc.vertices[(t + 1) % fc.vertices.size()];
            CHECK((a & b) == 0); // all cycle edges are graph edges
            if (t % 2 == 0)
                CHECK(factor.count({a, b}) == 1);
            else
                CHECK(factor.count({a, b}) == 0);
        }
    }
}

TEST_CASE("the odd-graph cycle visits every vertex once around") {
    for (int k : {3, 4}) {
        const OddGraph g = build_odd(k);
        const HamiltonCertificate c = hamilton_odd(k);
        CHECK(c.k == k);
        CHECK(c.graph == "odd");
        CHECK(c.n_positions == 2 * k + 1);
        REQUIRE(c.cycle.size() == g.vertices.size());
        CHECK(c.cycle[0] == g.vertices[0]);
        std::set<Mask> seen;
        for (std::size_t i = 0; i < c.cycle.size(); ++i) {
            CHECK(seen.insert(c.cycle[i]).second);
            CHECK((c.cycle[i] & c.cycle[(i + 1) % c.cycle.size()]) == 0);
        }
    }
}

TEST_CASE("the middle-levels cycle alternates levels and nests correctly") {
    for (int k : {3, 4}) {
        const MiddleGraph mg = build_middle(k);
        const HamiltonCertificate c = hamilton_middle(k);
        CHECK(c.graph == "middle");
        REQUIRE(c.cycle.size() == 2 * (mg.lower.size()));
        std::set<Mask> seen;
        for (std::size_t i = 0; i < c.cycle.size(); ++i) {
            CHECK(seen.insert(c.cycle[i]).second);
            const Mask a = c.cycle[i];
            const Mask b = c.cycle[(i + 1) % c.cycle.size()];
            CHECK(popcount_mask(a) == (i % 2 == 0 ? k : k + 1));
            CHECK(mg.adjacent(i % 2 == 0 ? a : b, i % 2 == 0 ? b : a));
        }
    }
}

TEST_CASE("small weights are rejected with the graph named") {
    CHECK_THROWS_WITH_AS(hamilton_odd(2),
                         doctest::Contains("Petersen"),
                         std::invalid_argument);
    CHECK_THROWS_AS(hamilton_middle(2), std::invalid_argument);
}
