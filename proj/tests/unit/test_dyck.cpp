#include "doctest.h"

#include "golden.hpp"
#include "test_config.hpp"

#include "nestcast/catalan.hpp"
#include "nestcast/dyck.hpp"
#include "nestcast/hamilton.hpp" // dyck_words

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

using namespace nestcast;

TEST_CASE("word validation accepts exactly the balanced words") {
    CHECK(validate_word("01"));
    CHECK(validate_word("001011"));
    CHECK(!validate_word(""));
    CHECK(!validate_word("10"));
    CHECK(!validate_word("0101x"));
    CHECK(!validate_word("011"));
    CHECK(!validate_word("0"));
}

TEST_CASE("nest labels pair layers bottom-up, right to left") {
    CHECK(render_nest(word_to_nest("01")) == "11");
    CHECK(render_nest(word_to_nest("0011")) == "1221");
    CHECK(render_nest(word_to_nest("0101")) == "2211");
    CHECK(render_nest(word_to_nest("001011")) == "133221");
    CHECK(render_nest(word_to_nest("000111")) == "123321");
    CHECK(render_nest(word_to_nest("001011"), true) == "0133221");
}

TEST_CASE("word and nest conversions are inverse for all words up to k=6") {
    for (int k = 1; k <= 6; ++k) {
        const auto words = dyck_words(k);
        CHECK(words.size() == catalan(k));
        for (const std::string& w : words) {
            CHECK(validate_word(w));
            const DyckNest nest = word_to_nest(w);
            CHECK(validate_nest(nest));
            CHECK(nest_to_word(nest) == w);
            const std::string rendered = render_nest(nest);
            CHECK(parse_nest(rendered) == nest);
            CHECK(parse_nest(render_nest(nest, true)) == nest);
        }
    }
}

TEST_CASE("blowing inserts the new maximal pair between the old one") {
    DyckNest nest = word_to_nest("01"); // 11
    nest = blow_nest(nest);
    CHECK(render_nest(nest) == "1221");
    nest = blow_nest(nest);
    CHECK(render_nest(nest) == "123321");
    nest = blow_nest(nest);
    CHECK(render_nest(nest) == "12344321");
    CHECK(render_nest(blow_nest(word_to_nest("0101"))) == "233211");
}

TEST_CASE("reduction undoes blowing and stops at tight nests") {
    const auto nests = testutil::golden_lines("tight_nests_14.txt");
    for (const std::string& line : nests) {
        DyckNest tight = parse_nest(line);
        // Tight nests admit no reduction step.
        DyckNest copy = tight;
        CHECK(!reduce_step(copy));
        CHECK(copy == tight);
        // Blowing twice and reducing returns to the tight core.
        DyckNest blown = blow_nest(blow_nest(tight));
        CHECK(reduce_tight(blown) == tight);
        DyckNest once = blow_nest(tight);
        CHECK(reduce_step(once));
        CHECK(once == tight);
    }
}

TEST_CASE("the tight nests and tight words describe the same objects") {
    const auto nests = testutil::golden_lines("tight_nests_14.txt");
    const auto words = testutil::golden_lines("tight_words_14.txt");
    REQUIRE(nests.size() == 14);
    REQUIRE(words.size() == 14);
    for (std::size_t i = 0; i < nests.size(); ++i) {
        CHECK(word_to_nest(words[i]) == parse_nest(nests[i]));
        CHECK(nest_to_word(parse_nest(nests[i])) == words[i]);
    }
}

TEST_CASE("reversal plus complement is a weight-preserving involution") {
    CHECK(reversed_complement("0011") == "0011");
    CHECK(reversed_complement("0101") == "0101");
    CHECK(reversed_complement("000111") == "000111");
    CHECK(reversed_complement("001011") == "001011");
    CHECK(reversed_complement("001101") == "010011");
    for (int k = 1; k <= 5; ++k)
        for (const std::string& w : dyck_words(k)) {
            const std::string r = reversed_complement(w);
            CHECK(validate_word(r));
            CHECK(reversed_complement(r) == w);
        }
}

TEST_CASE("rendering switches to comma form above digit nine") {
    DyckNest nest = word_to_nest("01");
    for (int i = 0; i < 9; ++i) nest = blow_nest(nest); // weight 10
    const std::string rendered = render_nest(nest);
    CHECK(rendered.find(',') != std::string::npos);
    CHECK(parse_nest(rendered) == nest);
    CHECK(parse_nest(render_nest(nest, true)) == nest);
}

TEST_CASE("random nests round-trip through text in both regimes") {
    std::mt19937_64 rng(testcfg::seed);
    for (int trial = 0; trial < 100; ++trial) {
        // A random word: shuffle a balanced multiset until valid.
        const int k = 1 + static_cast<int>(rng() % 12);
        std::string w(static_cast<std::size_t>(k), '0');
        w += std::string(static_cast<std::size_t>(k), '1');
        do {
            std::shuffle(w.begin(), w.end(), rng);
        } while (!validate_word(w));
        const DyckNest nest = word_to_nest(w);
        CHECK(validate_nest(nest));
        CHECK(nest_to_word(nest) == w);
        CHECK(parse_nest(render_nest(nest)) == nest);
    }
}
