#include "dpeel/point_set.hpp"

#include <algorithm>

namespace dpeel {

PointSet::PointSet(std::vector<LatticePoint> pts) : pts_(std::move(pts)) {
    for (const auto& p : pts_) {
        check_coord_bound(p.x);
        check_coord_bound(p.y);
    }
    std::sort(pts_.begin(), pts_.end());
    if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
        throw std::invalid_argument("duplicate point");
    index_.reserve(pts_.size() * 2);
    for (std::size_t i = 0; i < pts_.size(); ++i) index_.emplace(key(pts_[i]), i);
}

}  // namespace dpeel
