#pragma once

#include <cstdint>

#include "dpeel/geometry.hpp"

namespace dpeel {

struct Triangle {
    LatticePoint a, b, c;
};

// Apex may be rational; the two base vertices stay on the lattice.
struct ApexTriangle {
    RationalPoint apex;
    LatticePoint p, q;
};

// Number of lattice points on the closed segment [a, b]: gcd(|dx|, |dy|) + 1.
std::uint64_t lattice_on_segment(const LatticePoint& a, const LatticePoint& b);

// |closed triangle ∩ Z^2|; degenerate triangles count the covering segment.
std::uint64_t count_lattice_triangle(const Triangle& t);

std::uint64_t count_apex_triangle(const ApexTriangle& t);

// Same count with an early exit: any value > limit is reported as limit + 1.
std::uint64_t count_apex_triangle_limited(const ApexTriangle& t, std::uint64_t limit);

// |hull ∩ Z^2| via a fan of triangle counts with shared-edge corrections.
std::uint64_t count_convex_polygon(const LatticeHull& hull);

// Lattice points on the closed segment between two exact rational endpoints.
std::uint64_t lattice_on_rational_segment(const RationalPoint& a, const RationalPoint& b);

}  // namespace dpeel
