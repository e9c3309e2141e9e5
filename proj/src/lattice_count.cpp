#include "dpeel/lattice_count.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <type_traits>

namespace dpeel {

namespace {

template <class T>
T floor_div(const T& a, const T& b) {  // b > 0
    T q = a / b;
    if (q * b > a) --q;
    return q;
}

template <class T>
T ceil_div(const T& a, const T& b) {  // b > 0
    T q = a / b;
    if (q * b < a) ++q;
    return q;
}

template <class W>
std::uint64_t wide_to_u64(const W& v) {
    if constexpr (std::is_same_v<W, BigInt>) {
        return v.template convert_to<std::uint64_t>();
    } else {
        return static_cast<std::uint64_t>(v);
    }
}

// Counts points of (d Z)^2 inside the closed triangle with integer vertices
// (ax, ay), (px, py), (qx, qy); coordinates arrive pre-scaled by d. Rows are
// swept bottom to top with exact interval arithmetic; any count above `limit`
// exits early as limit + 1.
template <class I, class W>
std::uint64_t scan_scaled_triangle(I ax, I ay, I px, I py, I qx, I qy, I d, std::uint64_t limit) {
    I vx[3] = {ax, px, qx};
    I vy[3] = {ay, py, qy};
    const W area2 = W(px - ax) * W(qy - ay) - W(py - ay) * W(qx - ax);
    if (area2 < 0) {
        std::swap(vx[1], vx[2]);
        std::swap(vy[1], vy[2]);
    }

    const I ymin = std::min({vy[0], vy[1], vy[2]});
    const I ymax = std::max({vy[0], vy[1], vy[2]});
    const W wd(d);
    const W klo = ceil_div(W(ymin), wd);
    const W khi = floor_div(W(ymax), wd);

    const W limit_plus(limit >= std::numeric_limits<std::uint64_t>::max()
                           ? std::numeric_limits<std::uint64_t>::max()
                           : limit + 1);

    std::uint64_t count = 0;
    for (W k = klo; k <= khi; ++k) {
        const W y = k * wd;
        bool has_lo = false, has_hi = false, empty = false;
        W lo_num(0), lo_den(1), hi_num(0), hi_den(1);
        for (int e = 0; e < 3 && !empty; ++e) {
            const int f = (e + 1) % 3;
            const W dxe = W(vx[f]) - W(vx[e]);
            const W dye = W(vy[f]) - W(vy[e]);
            const W rhs = dxe * (y - W(vy[e])) + dye * W(vx[e]);
            if (dye > 0) {
                if (!has_hi || rhs * hi_den < hi_num * dye) {
                    hi_num = rhs;
                    hi_den = dye;
                }
                has_hi = true;
            } else if (dye < 0) {
                const W num = -rhs, den = -dye;
                if (!has_lo || num * lo_den > lo_num * den) {
                    lo_num = num;
                    lo_den = den;
                }
                has_lo = true;
            } else if (dxe * (y - W(vy[e])) < 0) {
                empty = true;
            }
        }
        if (empty || !has_lo || !has_hi) continue;
        const W kx_lo = ceil_div(lo_num, lo_den * wd);
        const W kx_hi = floor_div(hi_num, hi_den * wd);
        if (kx_hi < kx_lo) continue;
        const W row = kx_hi - kx_lo + 1;
        if (row >= limit_plus - W(count)) return limit + 1;
        count += wide_to_u64(row);
        if (count > limit) return limit + 1;
    }
    return count;
}

BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return abs(a);
    }
    BigInt x1, y1;
    BigInt g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

std::uint64_t lattice_on_segment(const LatticePoint& a, const LatticePoint& b) {
    const std::uint64_t dx = static_cast<std::uint64_t>(a.x > b.x ? a.x - b.x : b.x - a.x);
    const std::uint64_t dy = static_cast<std::uint64_t>(a.y > b.y ? a.y - b.y : b.y - a.y);
    return std::gcd(dx, dy) + 1;
}

std::uint64_t count_lattice_triangle(const Triangle& t) {
    __int128 area2 = twice_signed_area(t.a, t.b, t.c);
    if (area2 < 0) area2 = -area2;
    if (area2 == 0) {
        LatticePoint lo = std::min({t.a, t.b, t.c});
        LatticePoint hi = std::max({t.a, t.b, t.c});
        return lattice_on_segment(lo, hi);
    }
    const std::uint64_t boundary = (lattice_on_segment(t.a, t.b) - 1) +
                                   (lattice_on_segment(t.b, t.c) - 1) +
                                   (lattice_on_segment(t.c, t.a) - 1);
    // Interior + boundary via Pick: area + boundary/2 + 1, always integral.
    return static_cast<std::uint64_t>((area2 + boundary) / 2) + 1;
}

std::uint64_t lattice_on_rational_segment(const RationalPoint& a, const RationalPoint& b) {
    if (a == b) {
        return (denominator(a.x) == 1 && denominator(a.y) == 1) ? 1 : 0;
    }
    const Rational dx = b.x - a.x;
    const Rational dy = b.y - a.y;
    BigInt nx = numerator(dx) * denominator(dy);
    BigInt ny = numerator(dy) * denominator(dx);
    BigInt g = gcd(abs(nx), abs(ny));
    nx /= g;
    ny /= g;  // primitive lattice direction along the line

    // Lattice points (X, Y) on the line satisfy nx*Y - ny*X = c with integer c.
    const Rational c = Rational(nx) * a.y - Rational(ny) * a.x;
    if (denominator(c) != 1) return 0;
    BigInt u, v;
    egcd(nx, -ny, u, v);  // nx*u + (-ny)*v = 1 for a primitive direction
    const BigInt yc = numerator(c);
    const BigInt anchor_y = u * yc;
    const BigInt anchor_x = v * yc;

    // Position along the direction; lattice points sit at stride nx^2 + ny^2.
    const BigInt stride = nx * nx + ny * ny;
    const Rational pos_anchor = Rational(nx) * (Rational(anchor_x) - a.x) +
                                Rational(ny) * (Rational(anchor_y) - a.y);
    const Rational pos_b = Rational(nx) * dx + Rational(ny) * dy;
    Rational lo(0), hi = pos_b;
    if (hi < lo) std::swap(lo, hi);

    const Rational klo_r = (lo - pos_anchor) / stride;
    const Rational khi_r = (hi - pos_anchor) / stride;
    const BigInt klo = ceil_div(numerator(klo_r), denominator(klo_r));
    const BigInt khi = floor_div(numerator(khi_r), denominator(khi_r));
    if (khi < klo) return 0;
    return (khi - klo + 1).convert_to<std::uint64_t>();
}

namespace {

std::uint64_t apex_count(const ApexTriangle& t, std::uint64_t limit) {
    const Rational ax = t.apex.x, ay = t.apex.y;
    const RationalPoint rp(t.p), rq(t.q);
    if (twice_signed_area(t.apex, rp, rq) == 0) {
        RationalPoint pts[3] = {t.apex, rp, rq};
        std::sort(pts, pts + 3, [](const RationalPoint& u, const RationalPoint& v) {
            return u.x != v.x ? u.x < v.x : u.y < v.y;
        });
        const std::uint64_t n = lattice_on_rational_segment(pts[0], pts[2]);
        return n > limit ? limit + 1 : n;
    }

    const BigInt dax = denominator(ax), day = denominator(ay);
    const BigInt d = dax / gcd(dax, day) * day;
    const BigInt sax = numerator(ax) * (d / dax);
    const BigInt say = numerator(ay) * (d / day);
    const BigInt spx = BigInt(t.p.x) * d, spy = BigInt(t.p.y) * d;
    const BigInt sqx = BigInt(t.q.x) * d, sqy = BigInt(t.q.y) * d;

    const BigInt cap = BigInt(1) << 60;
    const bool small = abs(sax) <= cap && abs(say) <= cap && abs(spx) <= cap &&
                       abs(spy) <= cap && abs(sqx) <= cap && abs(sqy) <= cap;
    if (small) {
        auto cv = [](const BigInt& v) { return v.convert_to<long long>(); };
        return scan_scaled_triangle<std::int64_t, __int128>(cv(sax), cv(say), cv(spx), cv(spy),
                                                            cv(sqx), cv(sqy), cv(d), limit);
    }
    return scan_scaled_triangle<BigInt, BigInt>(sax, say, spx, spy, sqx, sqy, d, limit);
}

}  // namespace

std::uint64_t count_apex_triangle(const ApexTriangle& t) {
    return apex_count(t, std::numeric_limits<std::uint64_t>::max() - 1);
}

std::uint64_t count_apex_triangle_limited(const ApexTriangle& t, std::uint64_t limit) {
    return apex_count(t, limit);
}

std::uint64_t count_convex_polygon(const LatticeHull& hull) {
    switch (hull.kind) {
        case LatticeHull::Kind::Empty:
            return 0;
        case LatticeHull::Kind::Point:
            return 1;
        case LatticeHull::Kind::Segment:
            return lattice_on_segment(hull.verts[0], hull.verts[1]);
        case LatticeHull::Kind::Polygon:
            break;
    }
    const auto& v = hull.verts;
    std::uint64_t total = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        total += count_lattice_triangle({v[0], v[i], v[i + 1]});
        if (i + 2 < v.size()) total -= lattice_on_segment(v[0], v[i + 1]);
    }
    return total;
}

}  // namespace dpeel
