#include <doctest.h>

#include <random>

#include "rstar/index_file.hpp"
#include "rstar/oracle.hpp"
#include "support.hpp"

using namespace rstar;

TEST_CASE("container header layout") {
    const auto idx = RStarIndex::build("abracadabra");
    const auto bytes = serialize_index(idx);
    REQUIRE(bytes.size() > kIndexHeaderBytes);
    CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "RSX1");
    CHECK(bytes[4] == 1);  // version, little-endian
    CHECK(bytes[5] == 0);
    CHECK(bytes[6] == 12);  // n
    for (int k = 7; k < 14; ++k) {
        CHECK(bytes[k] == 0);
    }
    CHECK(bytes[14] == kFlagReverseHalf);
    CHECK(bytes[15] == 11);  // section count

    const auto layout = inspect_index(bytes);
    CHECK(layout.n == 12);
    CHECK(layout.sections.size() == 11);
    CHECK(layout.sections.front().tag == "META");
    CHECK(layout.total_bytes() == bytes.size());

    const auto fwd_only = serialize_index(RStarIndex::build("abracadabra", {.with_rightmost = false}));
    CHECK(fwd_only[14] == 0);
    CHECK(inspect_index(fwd_only).sections.size() == 7);
    CHECK(inspect_index(fwd_only).total_bytes() == fwd_only.size());
}

TEST_CASE("deserialized index answers like the original") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const std::string s = rstar::testing::random_text(rng, rstar::testing::uniform(rng, 1, 300), "abc");
        const auto idx = RStarIndex::build(s, {.with_rightmost = trial % 3 != 0});
        const auto back = deserialize_index(serialize_index(idx));
        CHECK(back.metadata().r == idx.metadata().r);
        CHECK(back.metadata().z == idx.metadata().z);
        CHECK(back.has_rightmost() == idx.has_rightmost());
        CHECK(serialize_index(back) == serialize_index(idx));
        for (int q = 0; q < 20; ++q) {
            const std::string p = rstar::testing::random_text(rng, rstar::testing::uniform(rng, 1, 5), "abc");
            REQUIRE(back.locate(p) == idx.locate(p));
            REQUIRE(back.leftmost(p) == idx.leftmost(p));
            if (idx.has_rightmost()) {
                REQUIRE(back.rightmost(p) == idx.rightmost(p));
            }
        }
    }
}

TEST_CASE("malformed files are rejected") {
    const auto good = serialize_index(RStarIndex::build("mississippi"));

    auto bad_magic = good;
    bad_magic[0] = 'X';
    CHECK_THROWS_AS(deserialize_index(bad_magic), FormatError);

    auto bad_version = good;
    bad_version[4] = 2;
    CHECK_THROWS_AS(deserialize_index(bad_version), FormatError);

    auto bad_flags = good;
    bad_flags[14] = 0x80;
    CHECK_THROWS_AS(deserialize_index(bad_flags), FormatError);

    auto trailing = good;
    trailing.push_back(0);
    CHECK_THROWS_AS(deserialize_index(trailing), FormatError);

    // every proper prefix is rejected
    for (std::size_t len = 0; len < good.size(); ++len) {
        CHECK_THROWS_AS(deserialize_index(std::span(good).first(len)), FormatError);
    }

    auto bad_n = good;
    bad_n[6] = 13;
    CHECK_THROWS_AS(deserialize_index(bad_n), FormatError);
}
