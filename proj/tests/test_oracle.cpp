#include <doctest.h>

#include "rstar/oracle.hpp"

using namespace rstar;
using Positions = std::vector<std::size_t>;

TEST_CASE("naive locate") {
    CHECK(oracle::naive_locate("abracadabra", "abra") == Positions{1, 8});
    CHECK(oracle::naive_locate("ab", "abc").empty());
    CHECK(oracle::naive_locate("aaaa", "aa") == Positions{1, 2, 3});
    CHECK(oracle::naive_locate("aaaa", "").empty());
}

TEST_CASE("naive filters") {
    CHECK(oracle::naive_rect_filter({}, Rect{1, 5, 1, 5}).empty());
    CHECK(oracle::naive_dominance_filter({}, 1, 1).empty());
    const std::vector<GridPoint> pts{{1, 4, 1}, {2, 5, 2}, {5, 2, 3}, {3, 3, 5}, {4, 1, 7}};
    CHECK(oracle::naive_rect_filter(pts, Rect{1, 5, 1, 5}).size() == 5);
    CHECK(oracle::naive_rect_filter(pts, Rect{1, 1, 4, 4}) == std::vector<GridPoint>{{1, 4, 1}});
    CHECK(oracle::naive_dominance_filter(pts, 2, 5) == std::vector<GridPoint>{{2, 5, 2}});
}

TEST_CASE("naive parse of the worked example") {
    const PhraseList expected{
        {1, 0, 0, 'a'}, {2, 0, 0, 'b'}, {3, 0, 0, 'r'}, {4, 1, 1, 'c'}, {6, 1, 1, 'd'}, {8, 4, 1, kSentinel},
    };
    CHECK(oracle::naive_parse(Text::from_content("abracadabra")) == expected);
}
