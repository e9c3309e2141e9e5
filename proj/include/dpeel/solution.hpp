#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpeel/geometry.hpp"

namespace dpeel {

enum class Objective { area, count };

// One digital convex subset with its hull and exact measures.
struct Solution {
    std::vector<LatticePoint> points;  // members of K, lexicographic order
    LatticeHull hull;
    Area2 twice_area = 0;
    std::uint64_t count = 0;
};

// A pair of digital convex subsets and the exact measure of their union.
struct PairSolution {
    enum class Kind { disjoint, intersecting, single };
    std::vector<LatticePoint> points1, points2;  // each lexicographic
    LatticeHull hull1, hull2;
    Area2 union_twice_area = 0;
    std::uint64_t union_count = 0;  // |K1 ∪ K2|
    Kind kind = Kind::single;
};

inline const char* kind_name(PairSolution::Kind k) {
    switch (k) {
        case PairSolution::Kind::disjoint:
            return "disjoint";
        case PairSolution::Kind::intersecting:
            return "intersecting";
        case PairSolution::Kind::single:
            return "single";
    }
    return "single";
}

// Shared tie-break: larger primary, then larger secondary, then
// lexicographically smaller point list(s). Returns true if lhs is strictly
// better than rhs.
bool solution_better(const Solution& lhs, const Solution& rhs, Objective obj);
bool pair_solution_better(const PairSolution& lhs, const PairSolution& rhs);

}  // namespace dpeel
