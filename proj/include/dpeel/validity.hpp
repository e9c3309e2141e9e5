#pragma once

#include <optional>
#include <vector>

#include "dpeel/lattice_count.hpp"
#include "dpeel/point_set.hpp"
#include "dpeel/range_count.hpp"

namespace dpeel {

// Validity of a triangle means its closed region traps nothing illegal:
//  - digital mode: every lattice point of the triangle belongs to S,
//  - island mode: the triangle avoids an explicit forbidden set.
class ValidityContext {
public:
    enum class Mode { digital, island };

    static ValidityContext digital(PointSet s);
    static ValidityContext island(PointSet s, PointSet forbidden);

    Mode mode() const { return mode_; }
    const PointSet& points() const { return points_; }
    const PointSet& forbidden() const { return forbidden_; }
    // Anchors = S, targets = S: membership counting for weights and for
    // digital validity.
    const RangeCounter& point_counter() const { return rc_points_; }
    // Anchors = S, targets = forbidden set (island mode only).
    const RangeCounter& forbidden_counter() const { return *rc_forbidden_; }

private:
    ValidityContext(Mode mode, PointSet s, PointSet forbidden);

    Mode mode_;
    PointSet points_;
    PointSet forbidden_;
    RangeCounter rc_points_;
    std::optional<RangeCounter> rc_forbidden_;
};

// Vertices of t must be members of S. Collinear triangles are judged on their
// covering segment.
bool is_valid_lattice(const ValidityContext& ctx, const Triangle& t);

// Lattice vertices of t must be members of S; the apex may be any rational
// point.
bool is_valid_apex(const ValidityContext& ctx, const ApexTriangle& t);

// All non-degenerate valid triangles with vertices in S, each counterclockwise
// and rotated to start at its lexicographically smallest vertex; ordered by
// vertex index triples, no duplicates.
std::vector<Triangle> enumerate_valid(const ValidityContext& ctx);

}  // namespace dpeel
