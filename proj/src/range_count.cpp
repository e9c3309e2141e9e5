#include "dpeel/range_count.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "dpeel/point_set.hpp"

namespace dpeel {

RangeCounter::RangeCounter(const std::vector<LatticePoint>& anchors,
                           const std::vector<LatticePoint>& targets) {
    total_ = targets.size();
    data_.resize(anchors.size());
    anchor_index_.reserve(anchors.size() * 2);
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        anchor_index_.emplace(PointSet::key(anchors[i]), i);
        AnchorData& d = data_[i];
        d.entries.reserve(targets.size());
        for (const LatticePoint& t : targets) {
            const std::int64_t dx = t.x - anchors[i].x;
            const std::int64_t dy = t.y - anchors[i].y;
            if (dx == 0 && dy == 0) {
                ++d.coincident;
                continue;
            }
            const std::uint64_t ax = static_cast<std::uint64_t>(dx < 0 ? -dx : dx);
            const std::uint64_t ay = static_cast<std::uint64_t>(dy < 0 ? -dy : dy);
            d.entries.push_back({dx, dy, ax * ax + ay * ay});
        }
        std::sort(d.entries.begin(), d.entries.end(), [](const Entry& u, const Entry& v) {
            if (dir_less(u.dx, u.dy, v.dx, v.dy)) return true;
            if (dir_less(v.dx, v.dy, u.dx, u.dy)) return false;
            return u.dist2 < v.dist2;
        });
    }
}

const RangeCounter::AnchorData& RangeCounter::data_for(const LatticePoint& u) const {
    auto it = anchor_index_.find(PointSet::key(u));
    if (it == anchor_index_.end()) throw std::logic_error("query point is not an anchor");
    return data_[it->second];
}

std::size_t RangeCounter::first_at_or_after(const AnchorData& d, std::int64_t dx,
                                            std::int64_t dy) const {
    auto it = std::lower_bound(d.entries.begin(), d.entries.end(), Entry{dx, dy, 0},
                               [](const Entry& e, const Entry& q) {
                                   return dir_less(e.dx, e.dy, q.dx, q.dy);
                               });
    return static_cast<std::size_t>(it - d.entries.begin());
}

std::size_t RangeCounter::first_after(const AnchorData& d, std::int64_t dx,
                                      std::int64_t dy) const {
    auto it = std::upper_bound(d.entries.begin(), d.entries.end(), Entry{dx, dy, 0},
                               [](const Entry& q, const Entry& e) {
                                   return dir_less(q.dx, q.dy, e.dx, e.dy);
                               });
    return static_cast<std::size_t>(it - d.entries.begin());
}

std::uint64_t RangeCounter::count_strict_between(const AnchorData& d, std::int64_t fx,
                                                 std::int64_t fy, std::int64_t tx,
                                                 std::int64_t ty) const {
    assert(dir_less(fx, fy, tx, ty) || dir_less(tx, ty, fx, fy));
    if (dir_less(fx, fy, tx, ty)) {
        return first_at_or_after(d, tx, ty) - first_after(d, fx, fy);
    }
    return (d.entries.size() - first_after(d, fx, fy)) + first_at_or_after(d, tx, ty);
}

std::uint64_t RangeCounter::count_strict_right(const LatticePoint& u,
                                               const LatticePoint& v) const {
    const std::int64_t dx = v.x - u.x, dy = v.y - u.y;
    if (dx == 0 && dy == 0) throw std::logic_error("degenerate direction");
    return count_strict_between(data_for(u), -dx, -dy, dx, dy);
}

std::uint64_t RangeCounter::count_closed_triangle(const LatticePoint& a, const LatticePoint& b,
                                                  const LatticePoint& c) const {
    LatticePoint p = a, q = b, r = c;
    int orient = orientation(p, q, r);
    if (orient == 0) throw std::invalid_argument("degenerate query");
    if (orient < 0) std::swap(q, r);

    // Complement of the closed triangle as three open right half-planes; the
    // pairwise intersections are the outer wedges at the vertices.
    const std::uint64_t right_pq = count_strict_between(data_for(p), p.x - q.x, p.y - q.y,
                                                        q.x - p.x, q.y - p.y);
    const std::uint64_t right_qr = count_strict_between(data_for(q), q.x - r.x, q.y - r.y,
                                                        r.x - q.x, r.y - q.y);
    const std::uint64_t right_rp = count_strict_between(data_for(r), r.x - p.x, r.y - p.y,
                                                        p.x - r.x, p.y - r.y);
    const std::uint64_t wedge_p = count_strict_between(data_for(p), p.x - q.x, p.y - q.y,
                                                       p.x - r.x, p.y - r.y);
    const std::uint64_t wedge_q = count_strict_between(data_for(q), q.x - r.x, q.y - r.y,
                                                       q.x - p.x, q.y - p.y);
    const std::uint64_t wedge_r = count_strict_between(data_for(r), r.x - p.x, r.y - p.y,
                                                       r.x - q.x, r.y - q.y);
    return total_ - right_pq - right_qr - right_rp + wedge_p + wedge_q + wedge_r;
}

namespace {

template <class I, class W>
std::uint64_t scan_apex_members(I ax, I ay, I px, I py, I qx, I qy, I d,
                                const std::vector<LatticePoint>& pts) {
    auto cr = [](W ux, W uy, W vx, W vy) { return ux * vy - uy * vx; };
    std::uint64_t count = 0;
    for (const LatticePoint& z : pts) {
        const W zx = W(z.x) * W(d), zy = W(z.y) * W(d);
        if (cr(W(px) - W(ax), W(py) - W(ay), zx - W(ax), zy - W(ay)) < 0) continue;
        if (cr(W(qx) - W(px), W(qy) - W(py), zx - W(px), zy - W(py)) < 0) continue;
        if (cr(W(ax) - W(qx), W(ay) - W(qy), zx - W(qx), zy - W(qy)) < 0) continue;
        ++count;
    }
    return count;
}

}  // namespace

std::uint64_t query_apex(const PointSet& s, const ApexTriangle& t) {
    RationalPoint rp(t.p), rq(t.q);
    if (orientation(t.apex, rp, rq) == 0) {
        RationalPoint pts[3] = {t.apex, rp, rq};
        std::sort(pts, pts + 3, [](const RationalPoint& u, const RationalPoint& v) {
            return u.x != v.x ? u.x < v.x : u.y < v.y;
        });
        const Rational dx = pts[2].x - pts[0].x, dy = pts[2].y - pts[0].y;
        const Rational len2 = dx * dx + dy * dy;
        std::uint64_t count = 0;
        for (const LatticePoint& p : s.points()) {
            const RationalPoint z(p);
            if (orientation(pts[0], pts[2], z) != 0) continue;
            const Rational t0 = (z.x - pts[0].x) * dx + (z.y - pts[0].y) * dy;
            if (t0 < 0 || t0 > len2) continue;
            ++count;
        }
        return count;
    }

    LatticePoint p = t.p, q = t.q;
    if (orientation(t.apex, rp, rq) < 0) std::swap(p, q);
    const BigInt dax = denominator(t.apex.x), day = denominator(t.apex.y);
    const BigInt d = dax / gcd(dax, day) * day;
    const BigInt sax = numerator(t.apex.x) * (d / dax);
    const BigInt say = numerator(t.apex.y) * (d / day);

    const BigInt cap = BigInt(1) << 60;
    if (d <= (BigInt(1) << 30) && abs(sax) <= cap && abs(say) <= cap) {
        auto cv = [](const BigInt& v) { return v.convert_to<long long>(); };
        const std::int64_t dd = cv(d);
        return scan_apex_members<std::int64_t, __int128>(cv(sax), cv(say), p.x * dd, p.y * dd,
                                                         q.x * dd, q.y * dd, dd, s.points());
    }
    return scan_apex_members<BigInt, BigInt>(sax, say, BigInt(p.x) * d, BigInt(p.y) * d,
                                             BigInt(q.x) * d, BigInt(q.y) * d, d, s.points());
}

std::uint64_t RangeCounter::count_on_closed_segment(const LatticePoint& u,
                                                    const LatticePoint& v) const {
    const AnchorData& d = data_for(u);
    if (u == v) return d.coincident;
    const std::int64_t dx = v.x - u.x, dy = v.y - u.y;
    const std::uint64_t ax = static_cast<std::uint64_t>(dx < 0 ? -dx : dx);
    const std::uint64_t ay = static_cast<std::uint64_t>(dy < 0 ? -dy : dy);
    const std::uint64_t len2 = ax * ax + ay * ay;
    const std::size_t lo = first_at_or_after(d, dx, dy);
    const std::size_t hi = first_after(d, dx, dy);
    auto it = std::upper_bound(d.entries.begin() + lo, d.entries.begin() + hi, len2,
                               [](std::uint64_t l, const Entry& e) { return l < e.dist2; });
    return d.coincident + static_cast<std::uint64_t>(it - (d.entries.begin() + lo));
}

}  // namespace dpeel
