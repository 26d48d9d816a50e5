#pragma once

#include "racdraw/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace racdraw {

struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct RatPoint {
    Rat x;
    Rat y;
    RatPoint() = default;
    RatPoint(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    RatPoint(const GridPoint& p) : x(p.x), y(p.y) {}
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

struct Segment {
    RatPoint a;
    RatPoint b;
};

enum class Orientation { Left, Right, Collinear };

// Exact sign of the cross product (b-a) x (c-a). Grid coordinates stay well
// below 2^62, so the 128-bit fast path never overflows.
inline Orientation orientation(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
    __int128 cross = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                     static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    if (cross > 0) return Orientation::Left;
    if (cross < 0) return Orientation::Right;
    return Orientation::Collinear;
}

inline Rat cross(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Orientation orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    Rat cr = cross(a, b, c);
    if (cr > 0) return Orientation::Left;
    if (cr < 0) return Orientation::Right;
    return Orientation::Collinear;
}

enum class IntersectKind { None, Point, Overlap };

struct Intersection {
    IntersectKind kind = IntersectKind::None;
    RatPoint point; // valid when kind == Point
};

namespace detail {

inline bool in_box(const RatPoint& p, const Segment& s) {
    auto [lox, hix] = std::minmax(s.a.x, s.b.x);
    auto [loy, hiy] = std::minmax(s.a.y, s.b.y);
    return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

} // namespace detail

// Exact classification of the intersection of two closed segments. Proper and
// improper (touching) intersections both report the rational point; collinear
// segments sharing more than one point report Overlap.
inline Intersection segment_intersection(const Segment& s, const Segment& t) {
    Rat d1 = cross(t.a, t.b, s.a);
    Rat d2 = cross(t.a, t.b, s.b);
    Rat d3 = cross(s.a, s.b, t.a);
    Rat d4 = cross(s.a, s.b, t.b);

    if (d1 == 0 && d2 == 0) { // collinear (or s degenerate on line t)
        Rat lo = std::min(s.a.x, s.b.x), hi = std::max(s.a.x, s.b.x);
        Rat lo2 = std::min(t.a.x, t.b.x), hi2 = std::max(t.a.x, t.b.x);
        Rat loy = std::min(s.a.y, s.b.y), hiy = std::max(s.a.y, s.b.y);
        Rat loy2 = std::min(t.a.y, t.b.y), hiy2 = std::max(t.a.y, t.b.y);
        if (hi < lo2 || hi2 < lo || hiy < loy2 || hiy2 < loy) return {};
        Rat ox_lo = std::max(lo, lo2), ox_hi = std::min(hi, hi2);
        Rat oy_lo = std::max(loy, loy2), oy_hi = std::min(hiy, hiy2);
        if (ox_lo == ox_hi && oy_lo == oy_hi)
            return {IntersectKind::Point, RatPoint(ox_lo, oy_lo)};
        // Vertical overlap needs the y-extents compared on the shared line.
        if (ox_lo == ox_hi) {
            if (oy_lo > oy_hi) return {};
            if (oy_lo == oy_hi) return {IntersectKind::Point, RatPoint(ox_lo, oy_lo)};
        }
        return {IntersectKind::Overlap, {}};
    }
    if ((d1 > 0 && d2 > 0) || (d1 < 0 && d2 < 0)) return {};
    if ((d3 > 0 && d4 > 0) || (d3 < 0 && d4 < 0)) return {};

    // Line intersection; d1 != d2 here.
    Rat u = d1 / (d1 - d2);
    RatPoint p(s.a.x + u * (s.b.x - s.a.x), s.a.y + u * (s.b.y - s.a.y));
    if (!detail::in_box(p, s) || !detail::in_box(p, t)) return {};
    return {IntersectKind::Point, p};
}

// True proper crossing: the intersection point is interior to both segments.
inline bool proper_crossing(const Segment& s, const Segment& t, RatPoint* out = nullptr) {
    Rat d1 = cross(t.a, t.b, s.a);
    Rat d2 = cross(t.a, t.b, s.b);
    Rat d3 = cross(s.a, s.b, t.a);
    Rat d4 = cross(s.a, s.b, t.b);
    bool proper = ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
                  ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
    if (proper && out) {
        Rat u = d1 / (d1 - d2);
        *out = RatPoint(s.a.x + u * (s.b.x - s.a.x), s.a.y + u * (s.b.y - s.a.y));
    }
    return proper;
}

enum class Axis { Horizontal, Vertical };

// Integer points strictly inside an axis-parallel segment, ordered from
// endpoint a towards endpoint b. Pipelines pass a = c so that the first entry
// is the grid point nearest the crossing vertex.
inline std::vector<GridPoint> grid_points_on_open_segment(const Segment& s, Axis axis) {
    std::vector<GridPoint> out;
    if (axis == Axis::Vertical) {
        if (s.a.x != s.b.x) throw std::invalid_argument("segment not vertical");
        if (!is_integer(s.a.x)) return out;
        std::int64_t x = to_int64(rat_num(s.a.x));
        const Rat &y0 = s.a.y, &y1 = s.b.y;
        Rat lo = std::min(y0, y1), hi = std::max(y0, y1);
        BigInt from = floor_rat(lo) + 1;
        BigInt to = ceil_rat(hi) - 1;
        if (is_integer(lo)) from = rat_num(lo) + 1; // open interval
        if (is_integer(hi)) to = rat_num(hi) - 1;
        for (BigInt y = from; y <= to; ++y) out.push_back({x, to_int64(y)});
        if (y0 > y1) std::reverse(out.begin(), out.end());
    } else {
        if (s.a.y != s.b.y) throw std::invalid_argument("segment not horizontal");
        if (!is_integer(s.a.y)) return out;
        std::int64_t y = to_int64(rat_num(s.a.y));
        const Rat &x0 = s.a.x, &x1 = s.b.x;
        Rat lo = std::min(x0, x1), hi = std::max(x0, x1);
        BigInt from = floor_rat(lo) + 1;
        BigInt to = ceil_rat(hi) - 1;
        if (is_integer(lo)) from = rat_num(lo) + 1;
        if (is_integer(hi)) to = rat_num(hi) - 1;
        for (BigInt x = from; x <= to; ++x) out.push_back({to_int64(x), y});
        if (x0 > x1) std::reverse(out.begin(), out.end());
    }
    return out;
}

struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Farey sequence of the given order: all reduced fractions in [0,1] with
// denominator <= order, ascending. Consecutive members a/b < c/d satisfy
// b*c - a*d = 1.
inline std::vector<Fraction> farey_sequence(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("farey order must be >= 1");
    std::vector<Fraction> seq;
    std::int64_t a = 0, b = 1, c = 1, d = order;
    seq.push_back({a, b});
    while (c <= order) {
        std::int64_t k = (order + b) / d;
        std::int64_t a2 = k * c - a, b2 = k * d - b;
        a = c; b = d; c = a2; d = b2;
        seq.push_back({a, b});
    }
    return seq;
}

} // namespace racdraw
