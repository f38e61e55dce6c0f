#include <doctest.h>

#include <random>

#include "rstar/oracle.hpp"
#include "rstar/rlbwt.hpp"
#include "rstar/suffix_structures.hpp"
#include "support.hpp"

using namespace rstar;
using rstar::testing::dollar;

namespace {

RunLengthBWT rlbwt_of(std::string_view content) {
    const Text t = Text::from_content(content);
    return RunLengthBWT(bwt_from_sa(t, build_suffix_array(t)));
}

}  // namespace

TEST_CASE("run decomposition examples") {
    const RunLengthBWT b(dollar("ard$rcaaaabb"));
    CHECK(b.run_count() == 8);
    CHECK(b.run_heads().size() == 8);
    CHECK(SymbolString(b.run_heads().begin(), b.run_heads().end()) == dollar("ard$rcab"));
    CHECK(b.run_starts() == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 11});
    CHECK(b.decompress() == dollar("ard$rcaaaabb"));

    CHECK(RunLengthBWT(dollar("aaaa")).run_count() == 1);
    CHECK(RunLengthBWT(dollar("ab$a")).run_count() == 4);
    CHECK(rlbwt_of("aba").run_count() == 4);
    CHECK(rlbwt_of("abracadabra").run_count() == 8);

    CHECK_THROWS_AS(RunLengthBWT(SymbolString{}), std::invalid_argument);
}

TEST_CASE("symbol rank examples") {
    const RunLengthBWT b(dollar("ard$rcaaaabb"));
    CHECK(b.rank('a', 0) == 0);
    CHECK(b.rank('a', 12) == 5);
    CHECK(b.rank('r', 6) == 2);
    CHECK(b.rank('z', 12) == 0);
    CHECK(b.count_before('a') == 1);
    CHECK(b.count_before('r') == 10);
    CHECK(b.alphabet_size() == 6);
}

TEST_CASE("backward step examples") {
    const RunLengthBWT b = rlbwt_of("abracadabra");
    const SaInterval a = b.backward_step(b.full_interval(), 'a');
    CHECK(a == SaInterval{2, 6});
    CHECK(b.backward_step(a, 'r') == SaInterval{11, 12});
    CHECK(b.backward_step(kEmptyInterval, 'a').empty());
    CHECK(b.backward_step(b.full_interval(), 'z').empty());
}

TEST_CASE("rank matches a naive scan") {
    std::mt19937_64 rng(5);
    for (std::size_t sigma : {2U, 4U, 26U}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::string s = rstar::testing::random_text(rng, rstar::testing::uniform(rng, 1, 400), rstar::testing::alphabet(sigma));
            if (trial % 2 == 0) {
                s += s + s;  // longer runs
            }
            const Text t = Text::from_content(s);
            const auto bwt = bwt_from_sa(t, build_suffix_array(t));
            const RunLengthBWT b(bwt);
            REQUIRE(b.decompress() == bwt);
            for (int q = 0; q < 500; ++q) {
                const auto c = static_cast<Symbol>(q % 7 == 0 ? 0 : rstar::testing::alphabet(sigma)[rstar::testing::uniform(rng, 0, sigma - 1)]);
                const std::size_t i = rstar::testing::uniform(rng, 0, bwt.size());
                const auto naive = static_cast<std::size_t>(std::count(bwt.begin(), bwt.begin() + static_cast<std::ptrdiff_t>(i), c));
                REQUIRE(b.rank(c, i) == naive);
                if (i > 0) {
                    REQUIRE(b.at(i) == bwt[i - 1]);
                }
            }
        }
    }
}

TEST_CASE("backward search interval length equals occurrence count") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const std::string s = rstar::testing::random_text(rng, rstar::testing::uniform(rng, 1, 300), "ab");
        const RunLengthBWT b = rlbwt_of(s);
        for (int q = 0; q < 30; ++q) {
            const std::string p = rstar::testing::random_text(rng, rstar::testing::uniform(rng, 1, 8), "ab");
            SaInterval iv = b.full_interval();
            for (auto it = p.rbegin(); it != p.rend(); ++it) {
                iv = b.backward_step(iv, static_cast<Symbol>(*it));
            }
            REQUIRE(iv.length() == oracle::naive_locate(s, p).size());
        }
    }
}

TEST_CASE("run-length BWT serialization") {
    const RunLengthBWT b = rlbwt_of("abracadabra");
    ByteWriter w;
    b.serialize(w);
    ByteReader r(w.bytes());
    const RunLengthBWT back = RunLengthBWT::deserialize(r);
    CHECK(back.decompress() == b.decompress());
    CHECK(back.rank('a', 12) == 5);

    // two sentinels
    const RunLengthBWT bad(dollar("a$b$"));
    ByteWriter wb;
    bad.serialize(wb);
    ByteReader rb(wb.bytes());
    CHECK_THROWS_AS(RunLengthBWT::deserialize(rb), FormatError);
}
