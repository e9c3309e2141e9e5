#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dpeel/geometry.hpp"
#include "dpeel/lattice_count.hpp"
#include "dpeel/point_set.hpp"

namespace dpeel {

// |closed t ∩ S| by direct scan; exact for a rational apex. Collinear
// triangles count the S-points on the covering segment.
std::uint64_t query_apex(const PointSet& s, const ApexTriangle& t);

// Angular range counting over a fixed target set, queried from a fixed set of
// anchor points. Build is O(A * T * log T); each query is O(log T).
//
// Triangle queries use inclusion-exclusion over the three outer half-planes of
// a triangle: targets outside a ccw triangle (a, b, c) are those strictly
// right of one of its directed edges, corrected by the three outer vertex
// wedges that get subtracted twice.
class RangeCounter {
public:
    RangeCounter(const std::vector<LatticePoint>& anchors,
                 const std::vector<LatticePoint>& targets);

    std::uint64_t total_targets() const { return total_; }

    // Targets strictly right of the directed line u -> v. u must be an anchor.
    std::uint64_t count_strict_right(const LatticePoint& u, const LatticePoint& v) const;

    // Targets in the closed triangle (a, b, c), any orientation; all three
    // vertices must be anchors. Collinear vertices are rejected — callers
    // handle those through count_on_closed_segment.
    std::uint64_t count_closed_triangle(const LatticePoint& a, const LatticePoint& b,
                                        const LatticePoint& c) const;

    // Targets on the closed segment [u, v]. u must be an anchor.
    std::uint64_t count_on_closed_segment(const LatticePoint& u, const LatticePoint& v) const;

private:
    struct Entry {
        std::int64_t dx, dy;
        std::uint64_t dist2;
    };
    struct AnchorData {
        std::vector<Entry> entries;  // angular order, ties by distance
        std::uint64_t coincident = 0;
    };

    static int half(std::int64_t dx, std::int64_t dy) {
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    }
    // Strict angular order on nonzero direction vectors over [0, 2*pi).
    static bool dir_less(std::int64_t ux, std::int64_t uy, std::int64_t vx, std::int64_t vy) {
        const int hu = half(ux, uy), hv = half(vx, vy);
        if (hu != hv) return hu < hv;
        return cross128(ux, uy, vx, vy) > 0;
    }

    const AnchorData& data_for(const LatticePoint& u) const;
    std::size_t first_at_or_after(const AnchorData& d, std::int64_t dx, std::int64_t dy) const;
    std::size_t first_after(const AnchorData& d, std::int64_t dx, std::int64_t dy) const;
    // Targets with direction strictly inside the open ccw arc (f, t); f and t
    // must be distinct directions.
    std::uint64_t count_strict_between(const AnchorData& d, std::int64_t fx, std::int64_t fy,
                                       std::int64_t tx, std::int64_t ty) const;

    std::vector<AnchorData> data_;
    std::unordered_map<std::uint64_t, std::size_t> anchor_index_;
    std::uint64_t total_ = 0;
};

}  // namespace dpeel
