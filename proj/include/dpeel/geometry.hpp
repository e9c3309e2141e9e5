#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpeel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Doubled areas are carried exactly; integer for lattice polygons, rational otherwise.
using Area2 = Rational;

// Inputs are constrained so that cross products of coordinate differences fit
// in 128-bit signed arithmetic with room to spare.
inline constexpr std::int64_t kCoordBound = std::int64_t{1} << 30;

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct RationalPoint {
    Rational x;
    Rational y;

    RationalPoint() = default;
    RationalPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    RationalPoint(const LatticePoint& p) : x(p.x), y(p.y) {}

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

inline __int128 cross128(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
    return static_cast<__int128>(ax) * by - static_cast<__int128>(ay) * bx;
}

// Sign of the signed area of (a, b, c): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);
int orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c);

// Twice the signed area of triangle (a, b, c).
__int128 twice_signed_area(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);
Rational twice_signed_area(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c);

// Twice the absolute area of an ordered (simple) polygon; fewer than 3 points is an error.
Area2 twice_area(const std::vector<LatticePoint>& poly);
Area2 twice_area(const std::vector<RationalPoint>& poly);

enum class SegCross {
    None,        // closed segments do not meet
    Proper,      // open segments cross in a single interior point
    Degenerate,  // collinear overlap or contact only at an endpoint
};

struct SegmentIntersection {
    SegCross kind = SegCross::None;
    std::optional<RationalPoint> point;  // set only for Proper
};

SegmentIntersection segment_intersection(const LatticePoint& a, const LatticePoint& b,
                                         const LatticePoint& c, const LatticePoint& d);

struct LatticeHull {
    enum class Kind { Empty, Point, Segment, Polygon };
    Kind kind = Kind::Empty;
    // Polygon: strict hull vertices, counterclockwise, starting at the
    // lexicographically smallest. Segment: its two endpoints. Point: one entry.
    std::vector<LatticePoint> verts;
};

LatticeHull convex_hull(std::vector<LatticePoint> pts);

// Convex polygon with exact rational vertices, counterclockwise.
struct ConvexPolygon {
    std::vector<RationalPoint> verts;
};

ConvexPolygon to_polygon(const LatticeHull& hull);

// Twice the area of the intersection of two convex polygons (0 for degenerate overlap).
Area2 convex_clip_area(const ConvexPolygon& p, const ConvexPolygon& q);

// Simple polygon with optional holes; the region is the closed outer polygon
// minus the open holes, so hole boundaries belong to the region.
struct PolygonWithHoles {
    std::vector<RationalPoint> outer;
    std::vector<std::vector<RationalPoint>> holes;
};

struct PolygonQuery {
    bool inside = false;
    Rational boundary_linf;  // exact L-infinity distance to the nearest boundary edge
};

PolygonQuery polygon_query(const PolygonWithHoles& poly, const RationalPoint& q);

// Exact L-infinity distance from q to the closed segment [a, b].
Rational linf_segment_distance(const RationalPoint& q, const RationalPoint& a,
                               const RationalPoint& b);

std::string rational_to_string(const Rational& r);
// Accepts "p", "-p", "p/q"; throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

std::string int128_to_string(__int128 v);

inline void check_coord_bound(std::int64_t v) {
    if (v > kCoordBound || v < -kCoordBound)
        throw std::invalid_argument("coordinate exceeds bound 2^30");
}

}  // namespace dpeel
