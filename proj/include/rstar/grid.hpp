#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rstar/byte_io.hpp"

namespace rstar {

struct GridPoint {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t sat = 0;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Inclusive rectangle [x1, x2] x [y1, y2]; empty when x1 > x2 or y1 > y2.
struct Rect {
    std::size_t x1 = 1;
    std::size_t x2 = 0;
    std::size_t y1 = 1;
    std::size_t y2 = 0;

    [[nodiscard]] bool empty() const { return x1 > x2 || y1 > y2; }
    [[nodiscard]] bool contains(const GridPoint& p) const {
        return x1 <= p.x && p.x <= x2 && y1 <= p.y && p.y <= y2;
    }
};

// Orthogonal range reporting and range-minimum over satellites.
//
// Points are sorted by x and their y ranks stored in a wavelet matrix. Each
// level also keeps the satellites in that level's order with a blocked
// sparse table, so a fully covered wavelet node answers its minimum in O(1)
// plus a short scan. Reporting costs O(log P) per point.
class ReportGrid {
  public:
    ReportGrid() = default;
    explicit ReportGrid(std::vector<GridPoint> points);

    [[nodiscard]] std::size_t size() const { return points_by_x_.size(); }

    // Points inside r, ordered by y. visited, when given, is incremented
    // once per wavelet node touched.
    [[nodiscard]] std::vector<GridPoint> report_rect(const Rect& r, std::size_t* visited = nullptr) const;

    [[nodiscard]] std::optional<std::size_t> range_min_rect(const Rect& r, std::size_t* visited = nullptr) const;

    // Points sorted by (x, y, sat).
    [[nodiscard]] const std::vector<GridPoint>& points() const { return points_by_x_; }

    // Bytes held by the derived query tables (not serialized).
    [[nodiscard]] std::size_t aux_memory_bytes() const;

    void serialize(ByteWriter& out) const;
    static ReportGrid deserialize(ByteReader& in);

  private:
    // Blocked sparse table for range minimum over one level's satellites.
    class LevelMin {
      public:
        LevelMin() = default;
        explicit LevelMin(std::vector<std::size_t> values);
        // Minimum over [b, e), b < e.
        [[nodiscard]] std::size_t min(std::size_t b, std::size_t e) const;
        [[nodiscard]] std::size_t memory_bytes() const;

      private:
        static constexpr std::size_t kBlock = 16;
        std::vector<std::size_t> values_;
        std::vector<std::vector<std::size_t>> table_;  // table_[j][b]: min of blocks b..b+2^j-1
    };

    struct Level {
        std::vector<std::uint32_t> ones_before;  // ones in bits [0, k)
        std::size_t zeros = 0;
    };

    struct Query {
        std::size_t lo;  // y-rank range [lo, hi]
        std::size_t hi;
        std::size_t* visited;
    };

    void report_node(unsigned depth, std::size_t b, std::size_t e, std::size_t value_lo, const Query& q,
                     std::vector<GridPoint>& out) const;
    void min_node(unsigned depth, std::size_t b, std::size_t e, std::size_t value_lo, const Query& q,
                  std::optional<std::size_t>& best) const;

    // Maps r to an index range over points_by_x_ and a y-rank range; false if empty.
    bool resolve(const Rect& r, std::size_t& b, std::size_t& e, Query& q) const;

    std::vector<GridPoint> points_by_x_;
    std::vector<std::size_t> xs_;          // sorted x of points_by_x_
    std::vector<std::size_t> ys_;          // y values sorted, index = y rank
    std::vector<std::size_t> by_y_rank_;   // y rank -> index into points_by_x_
    unsigned height_ = 0;
    std::vector<Level> levels_;
    std::vector<LevelMin> level_min_;      // height_ + 1 arrangements
};

// Two-sided dominance reporting: points with x <= s and y >= e.
//
// Points sorted by x under a max-tree on y; a query descends only into
// subtrees of the x-prefix whose maximum y reaches e.
class DominanceGrid {
  public:
    DominanceGrid() = default;
    explicit DominanceGrid(std::vector<GridPoint> points);

    [[nodiscard]] std::size_t size() const { return points_.size(); }

    [[nodiscard]] std::vector<GridPoint> report_dominating(std::size_t s, std::size_t e,
                                                           std::size_t* visited = nullptr) const;

    [[nodiscard]] const std::vector<GridPoint>& points() const { return points_; }

    void serialize(ByteWriter& out) const;
    static DominanceGrid deserialize(ByteReader& in);

  private:
    void collect(std::size_t node, std::size_t node_lo, std::size_t node_hi, std::size_t prefix, std::size_t e,
                 std::vector<GridPoint>& out, std::size_t* visited) const;

    std::vector<GridPoint> points_;  // sorted by (x, y, sat)
    std::size_t leaves_ = 0;
    std::vector<std::size_t> max_y_;
};

}  // namespace rstar
