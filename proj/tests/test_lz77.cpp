#include <doctest.h>

#include <random>

#include "rstar/lz77.hpp"
#include "rstar/oracle.hpp"
#include "support.hpp"

using namespace rstar;

TEST_CASE("parse examples") {
    const Text t = Text::from_content("abracadabra");
    const PhraseList expected{
        {1, 0, 0, 'a'}, {2, 0, 0, 'b'}, {3, 0, 0, 'r'}, {4, 1, 1, 'c'}, {6, 1, 1, 'd'}, {8, 4, 1, kSentinel},
    };
    CHECK(oracle::naive_parse(t) == expected);
    CHECK(parse(t) == expected);
    CHECK(boundaries(expected) == std::vector<std::size_t>{1, 2, 3, 5, 7});

    const PhraseList single{{1, 0, 0, 'a'}, {2, 0, 0, kSentinel}};
    CHECK(parse(Text::from_content("a")) == single);
    CHECK(boundaries(single) == std::vector<std::size_t>{1});

    CHECK(parse(Text()) == PhraseList{{1, 0, 0, kSentinel}});
    CHECK(boundaries(parse(Text())).empty());
}

TEST_CASE("parse copies from an overlapping source") {
    // Greedy: after the literal 'a', "aaa" copies from position 1 and the
    // sentinel is the explicit symbol.
    const Text t = Text::from_content("aaaa");
    const PhraseList expected{{1, 0, 0, 'a'}, {2, 3, 1, kSentinel}};
    CHECK(oracle::naive_parse(t) == expected);
    CHECK(parse(t) == expected);
    CHECK(boundaries(expected) == std::vector<std::size_t>{1});
    CHECK(decode(expected) == t);
}

TEST_CASE("decode round trips and rejects malformed phrases") {
    CHECK(decode(parse(Text::from_content("abracadabra"))).content() == "abracadabra");
    CHECK(decode(PhraseList{{1, 0, 0, kSentinel}}) == Text());

    CHECK_THROWS_AS(decode(PhraseList{{1, 0, 0, 'a'}, {3, 0, 0, kSentinel}}), std::invalid_argument);
    CHECK_THROWS_AS(decode(PhraseList{{1, 0, 0, 'a'}, {2, 1, 2, kSentinel}}), std::invalid_argument);
    CHECK_THROWS_AS(decode(PhraseList{{1, 0, 0, 'a'}, {2, 1, 0, kSentinel}}), std::invalid_argument);
    CHECK_THROWS_AS(decode(PhraseList{{1, 0, 0, 'a'}}), std::invalid_argument);
}

TEST_CASE("parse equals the brute-force parser and round trips") {
    std::mt19937_64 rng(21);
    for (std::size_t sigma : {2U, 4U, 26U}) {
        const auto letters = rstar::testing::alphabet(sigma);
        for (int trial = 0; trial < 80; ++trial) {
            std::string s = rstar::testing::random_text(rng, rstar::testing::uniform(rng, 0, 300), letters);
            if (trial % 4 == 0) {
                s = std::string(rstar::testing::uniform(rng, 1, 200), letters[0]) + s;
            }
            const Text t = Text::from_content(s);
            const PhraseList phrases = parse(t);
            REQUIRE(phrases == oracle::naive_parse(t));
            REQUIRE(decode(phrases) == t);
            for (const Phrase& ph : phrases) {
                if (ph.copy_len > 0) {
                    REQUIRE(ph.source_start < ph.start);
                }
            }
            REQUIRE(phrases.size() <= t.size());
        }
    }
}
