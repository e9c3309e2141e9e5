#pragma once

#include <unordered_map>
#include <vector>

#include "dpeel/geometry.hpp"

namespace dpeel {

// Deduplicated, bound-checked set of lattice points kept in lexicographic order.
class PointSet {
  public:
    PointSet() = default;
    explicit PointSet(std::vector<LatticePoint> pts);

    const std::vector<LatticePoint>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    bool contains(const LatticePoint& p) const { return index_.count(key(p)) != 0; }
    const LatticePoint& operator[](std::size_t i) const { return pts_[i]; }

    // Collision-free for |coordinates| <= 2^30.
    static std::uint64_t key(const LatticePoint& p) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
    }

  private:
    std::vector<LatticePoint> pts_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace dpeel
