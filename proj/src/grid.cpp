#include "rstar/grid.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rstar {

ReportGrid::LevelMin::LevelMin(std::vector<std::size_t> values) : values_(std::move(values)) {
    const std::size_t blocks = (values_.size() + kBlock - 1) / kBlock;
    if (blocks == 0) {
        return;
    }
    std::vector<std::size_t> row(blocks, std::numeric_limits<std::size_t>::max());
    for (std::size_t k = 0; k < values_.size(); ++k) {
        row[k / kBlock] = std::min(row[k / kBlock], values_[k]);
    }
    table_.push_back(std::move(row));
    for (std::size_t span = 2; span <= blocks; span *= 2) {
        const auto& prev = table_.back();
        std::vector<std::size_t> next(blocks - span + 1);
        for (std::size_t b = 0; b < next.size(); ++b) {
            next[b] = std::min(prev[b], prev[b + span / 2]);
        }
        table_.push_back(std::move(next));
    }
}

std::size_t ReportGrid::LevelMin::min(std::size_t b, std::size_t e) const {
    const std::size_t first_block = b / kBlock;
    const std::size_t last_block = (e - 1) / kBlock;
    if (last_block - first_block <= 1) {
        return *std::min_element(values_.begin() + static_cast<std::ptrdiff_t>(b),
                                 values_.begin() + static_cast<std::ptrdiff_t>(e));
    }
    std::size_t best = *std::min_element(values_.begin() + static_cast<std::ptrdiff_t>(b),
                                         values_.begin() + static_cast<std::ptrdiff_t>((first_block + 1) * kBlock));
    best = std::min(best, *std::min_element(values_.begin() + static_cast<std::ptrdiff_t>(last_block * kBlock),
                                            values_.begin() + static_cast<std::ptrdiff_t>(e)));
    const std::size_t lo = first_block + 1;
    const std::size_t count = last_block - lo;
    const auto j = static_cast<std::size_t>(std::bit_width(count) - 1);
    best = std::min({best, table_[j][lo], table_[j][last_block - (std::size_t{1} << j)]});
    return best;
}

std::size_t ReportGrid::LevelMin::memory_bytes() const {
    std::size_t bytes = values_.size() * sizeof(std::size_t);
    for (const auto& row : table_) {
        bytes += row.size() * sizeof(std::size_t);
    }
    return bytes;
}

ReportGrid::ReportGrid(std::vector<GridPoint> points) : points_by_x_(std::move(points)) {
    std::sort(points_by_x_.begin(), points_by_x_.end());
    const std::size_t count = points_by_x_.size();
    if (count >= std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("too many grid points");
    }
    xs_.reserve(count);
    for (const auto& p : points_by_x_) {
        xs_.push_back(p.x);
    }

    by_y_rank_.resize(count);
    std::iota(by_y_rank_.begin(), by_y_rank_.end(), std::size_t{0});
    std::stable_sort(by_y_rank_.begin(), by_y_rank_.end(),
                     [&](std::size_t a, std::size_t b) { return points_by_x_[a].y < points_by_x_[b].y; });
    std::vector<std::size_t> rank_of(count);
    ys_.resize(count);
    for (std::size_t r = 0; r < count; ++r) {
        rank_of[by_y_rank_[r]] = r;
        ys_[r] = points_by_x_[by_y_rank_[r]].y;
    }

    height_ = count > 1 ? static_cast<unsigned>(std::bit_width(count - 1)) : 0;
    std::vector<std::size_t> values = rank_of;
    std::vector<std::size_t> sats(count);
    for (std::size_t k = 0; k < count; ++k) {
        sats[k] = points_by_x_[k].sat;
    }
    levels_.resize(height_);
    for (unsigned d = 0; d < height_; ++d) {
        const unsigned shift = height_ - 1 - d;
        Level& level = levels_[d];
        level.ones_before.assign(count + 1, 0);
        std::vector<std::size_t> next_values;
        std::vector<std::size_t> next_sats;
        next_values.reserve(count);
        next_sats.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            const bool bit = (values[k] >> shift) & 1U;
            level.ones_before[k + 1] = level.ones_before[k] + (bit ? 1 : 0);
            if (!bit) {
                next_values.push_back(values[k]);
                next_sats.push_back(sats[k]);
            }
        }
        level.zeros = next_values.size();
        for (std::size_t k = 0; k < count; ++k) {
            if ((values[k] >> shift) & 1U) {
                next_values.push_back(values[k]);
                next_sats.push_back(sats[k]);
            }
        }
        level_min_.emplace_back(std::move(sats));
        values = std::move(next_values);
        sats = std::move(next_sats);
    }
    level_min_.emplace_back(std::move(sats));
}

bool ReportGrid::resolve(const Rect& r, std::size_t& b, std::size_t& e, Query& q) const {
    if (r.empty() || points_by_x_.empty()) {
        return false;
    }
    b = static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), r.x1) - xs_.begin());
    e = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), r.x2) - xs_.begin());
    const auto ylo = static_cast<std::size_t>(std::lower_bound(ys_.begin(), ys_.end(), r.y1) - ys_.begin());
    const auto yend = static_cast<std::size_t>(std::upper_bound(ys_.begin(), ys_.end(), r.y2) - ys_.begin());
    if (b >= e || ylo >= yend) {
        return false;
    }
    q.lo = ylo;
    q.hi = yend - 1;
    return true;
}

void ReportGrid::report_node(unsigned depth, std::size_t b, std::size_t e, std::size_t value_lo, const Query& q,
                             std::vector<GridPoint>& out) const {
    if (b >= e) {
        return;
    }
    if (q.visited != nullptr) {
        ++*q.visited;
    }
    const std::size_t width = std::size_t{1} << (height_ - depth);
    if (value_lo + width - 1 < q.lo || value_lo > q.hi) {
        return;
    }
    if (depth == height_) {
        // y ranks are distinct, so a leaf holds exactly one point
        out.push_back(points_by_x_[by_y_rank_[value_lo]]);
        return;
    }
    const Level& level = levels_[depth];
    const std::size_t ob = level.ones_before[b];
    const std::size_t oe = level.ones_before[e];
    report_node(depth + 1, b - ob, e - oe, value_lo, q, out);
    report_node(depth + 1, level.zeros + ob, level.zeros + oe, value_lo + width / 2, q, out);
}

void ReportGrid::min_node(unsigned depth, std::size_t b, std::size_t e, std::size_t value_lo, const Query& q,
                          std::optional<std::size_t>& best) const {
    if (b >= e) {
        return;
    }
    if (q.visited != nullptr) {
        ++*q.visited;
    }
    const std::size_t width = std::size_t{1} << (height_ - depth);
    const std::size_t value_hi = value_lo + width - 1;
    if (value_hi < q.lo || value_lo > q.hi) {
        return;
    }
    if (q.lo <= value_lo && value_hi <= q.hi) {
        const std::size_t m = level_min_[depth].min(b, e);
        best = best ? std::min(*best, m) : m;
        return;
    }
    const Level& level = levels_[depth];
    const std::size_t ob = level.ones_before[b];
    const std::size_t oe = level.ones_before[e];
    min_node(depth + 1, b - ob, e - oe, value_lo, q, best);
    min_node(depth + 1, level.zeros + ob, level.zeros + oe, value_lo + width / 2, q, best);
}

std::vector<GridPoint> ReportGrid::report_rect(const Rect& r, std::size_t* visited) const {
    std::vector<GridPoint> out;
    std::size_t b = 0;
    std::size_t e = 0;
    Query q{0, 0, visited};
    if (resolve(r, b, e, q)) {
        report_node(0, b, e, 0, q, out);
    }
    return out;
}

std::optional<std::size_t> ReportGrid::range_min_rect(const Rect& r, std::size_t* visited) const {
    std::optional<std::size_t> best;
    std::size_t b = 0;
    std::size_t e = 0;
    Query q{0, 0, visited};
    if (resolve(r, b, e, q)) {
        min_node(0, b, e, 0, q, best);
    }
    return best;
}

std::size_t ReportGrid::aux_memory_bytes() const {
    std::size_t bytes = (xs_.size() + ys_.size() + by_y_rank_.size()) * sizeof(std::size_t);
    for (const auto& level : levels_) {
        bytes += level.ones_before.size() * sizeof(std::uint32_t);
    }
    for (const auto& lm : level_min_) {
        bytes += lm.memory_bytes();
    }
    return bytes;
}

namespace {

void write_points(ByteWriter& out, const std::vector<GridPoint>& points) {
    out.put_varint(points.size());
    for (const auto& p : points) {
        out.put_varint(p.x);
        out.put_varint(p.y);
        out.put_varint(p.sat);
    }
}

std::vector<GridPoint> read_points(ByteReader& in) {
    const std::size_t count = in.get_count(3);
    std::vector<GridPoint> points(count);
    for (auto& p : points) {
        p.x = in.get_varint();
        p.y = in.get_varint();
        p.sat = in.get_varint();
    }
    return points;
}

}  // namespace

void ReportGrid::serialize(ByteWriter& out) const { write_points(out, points_by_x_); }

ReportGrid ReportGrid::deserialize(ByteReader& in) { return ReportGrid(read_points(in)); }

DominanceGrid::DominanceGrid(std::vector<GridPoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    leaves_ = std::bit_ceil(std::max<std::size_t>(points_.size(), 1));
    max_y_.assign(2 * leaves_, 0);
    for (std::size_t k = 0; k < points_.size(); ++k) {
        max_y_[leaves_ + k] = points_[k].y;
    }
    for (std::size_t v = leaves_ - 1; v >= 1; --v) {
        max_y_[v] = std::max(max_y_[2 * v], max_y_[2 * v + 1]);
    }
}

void DominanceGrid::collect(std::size_t node, std::size_t node_lo, std::size_t node_hi, std::size_t prefix,
                            std::size_t e, std::vector<GridPoint>& out, std::size_t* visited) const {
    if (node_lo >= prefix) {
        return;
    }
    if (visited != nullptr) {
        ++*visited;
    }
    if (max_y_[node] < e) {
        return;
    }
    if (node_hi - node_lo == 1) {
        out.push_back(points_[node_lo]);
        return;
    }
    const std::size_t mid = (node_lo + node_hi) / 2;
    collect(2 * node, node_lo, mid, prefix, e, out, visited);
    collect(2 * node + 1, mid, node_hi, prefix, e, out, visited);
}

std::vector<GridPoint> DominanceGrid::report_dominating(std::size_t s, std::size_t e, std::size_t* visited) const {
    std::vector<GridPoint> out;
    const auto prefix = static_cast<std::size_t>(
        std::upper_bound(points_.begin(), points_.end(), s, [](std::size_t v, const GridPoint& p) { return v < p.x; }) -
        points_.begin());
    collect(1, 0, leaves_, prefix, e, out, visited);
    return out;
}

void DominanceGrid::serialize(ByteWriter& out) const { write_points(out, points_); }

DominanceGrid DominanceGrid::deserialize(ByteReader& in) { return DominanceGrid(read_points(in)); }

}  // namespace rstar
