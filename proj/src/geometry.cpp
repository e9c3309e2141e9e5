#include "dpeel/geometry.hpp"

#include <algorithm>
#include <cctype>

namespace dpeel {

namespace {

int sign_of(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sign_of(const Rational& v) {
    int s = v.sign();
    return s;
}

Rational rcross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_closed_segment(const RationalPoint& q, const RationalPoint& a, const RationalPoint& b) {
    if (rcross(a, b, q) != 0) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

}  // namespace

int orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return sign_of(twice_signed_area(a, b, c));
}

int orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
    return sign_of(twice_signed_area(a, b, c));
}

__int128 twice_signed_area(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return cross128(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
}

Rational twice_signed_area(const RationalPoint& a, const RationalPoint& b,
                           const RationalPoint& c) {
    return rcross(a, b, c);
}

Area2 twice_area(const std::vector<LatticePoint>& poly) {
    if (poly.size() < 3) throw std::invalid_argument("degenerate polygon");
    __int128 sum = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        sum += cross128(p.x, p.y, q.x, q.y);
    }
    if (sum < 0) sum = -sum;
    return Rational(BigInt(int128_to_string(sum)));
}

Area2 twice_area(const std::vector<RationalPoint>& poly) {
    if (poly.size() < 3) throw std::invalid_argument("degenerate polygon");
    Rational sum = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        sum += p.x * q.y - q.x * p.y;
    }
    if (sum < 0) sum = -sum;
    return sum;
}

SegmentIntersection segment_intersection(const LatticePoint& a, const LatticePoint& b,
                                         const LatticePoint& c, const LatticePoint& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);

    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        // Proper crossing of the open segments: a + t(b-a) with t in (0,1).
        const __int128 num = cross128(c.x - a.x, c.y - a.y, d.x - c.x, d.y - c.y);
        const __int128 den = cross128(b.x - a.x, b.y - a.y, d.x - c.x, d.y - c.y);
        Rational t(BigInt(int128_to_string(num)), BigInt(int128_to_string(den)));
        RationalPoint pt(Rational(a.x) + t * (Rational(b.x) - a.x),
                         Rational(a.y) + t * (Rational(b.y) - a.y));
        return {SegCross::Proper, pt};
    }

    auto touches = [&](const LatticePoint& p, const LatticePoint& u, const LatticePoint& v) {
        return on_closed_segment(RationalPoint(p), RationalPoint(u), RationalPoint(v));
    };
    const bool any = touches(c, a, b) || touches(d, a, b) || touches(a, c, d) || touches(b, c, d);
    if (any) return {SegCross::Degenerate, std::nullopt};
    return {SegCross::None, std::nullopt};
}

LatticeHull convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticeHull hull;
    if (pts.empty()) return hull;
    if (pts.size() == 1) {
        hull.kind = LatticeHull::Kind::Point;
        hull.verts = pts;
        return hull;
    }

    const std::size_t n = pts.size();
    std::vector<LatticePoint> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);

    if (h.size() == 2) {
        hull.kind = LatticeHull::Kind::Segment;
        hull.verts = {h[0], h[1]};
        return hull;
    }
    hull.kind = LatticeHull::Kind::Polygon;
    hull.verts = std::move(h);  // monotone chain starts at the lexicographic minimum
    return hull;
}

ConvexPolygon to_polygon(const LatticeHull& hull) {
    ConvexPolygon poly;
    poly.verts.reserve(hull.verts.size());
    for (const auto& p : hull.verts) poly.verts.emplace_back(p);
    return poly;
}

Area2 convex_clip_area(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (p.verts.size() < 3 || q.verts.size() < 3) return Area2(0);
    std::vector<RationalPoint> cur = p.verts;
    for (std::size_t i = 0; i < q.verts.size() && !cur.empty(); ++i) {
        const RationalPoint& e0 = q.verts[i];
        const RationalPoint& e1 = q.verts[(i + 1) % q.verts.size()];
        std::vector<RationalPoint> next;
        next.reserve(cur.size() + 2);
        for (std::size_t j = 0; j < cur.size(); ++j) {
            const RationalPoint& s = cur[j];
            const RationalPoint& t = cur[(j + 1) % cur.size()];
            const int ss = sign_of(rcross(e0, e1, s));
            const int st = sign_of(rcross(e0, e1, t));
            auto cross_point = [&]() {
                Rational num = rcross(e0, e1, s);
                Rational den = num - rcross(e0, e1, t);
                Rational u = num / den;  // den != 0 because signs differ strictly
                return RationalPoint(s.x + u * (t.x - s.x), s.y + u * (t.y - s.y));
            };
            if (ss >= 0) next.push_back(s);
            if ((ss > 0 && st < 0) || (ss < 0 && st > 0)) next.push_back(cross_point());
        }
        cur = std::move(next);
    }
    if (cur.size() < 3) return Area2(0);
    Rational sum = 0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
        const auto& a = cur[i];
        const auto& b = cur[(i + 1) % cur.size()];
        sum += a.x * b.y - b.x * a.y;
    }
    if (sum < 0) sum = -sum;
    return sum;
}

Rational linf_segment_distance(const RationalPoint& q, const RationalPoint& a,
                               const RationalPoint& b) {
    const Rational dx = b.x - a.x;
    const Rational dy = b.y - a.y;
    const Rational ax = q.x - a.x;
    const Rational ay = q.y - a.y;

    // f(t) = max(|ax - t dx|, |ay - t dy|) is convex piecewise linear on [0, 1];
    // its minimum sits at an endpoint, at a zero of either term, or where the
    // terms balance (u = v or u = -v).
    std::vector<Rational> cand = {Rational(0), Rational(1)};
    if (dx != 0) cand.push_back(ax / dx);
    if (dy != 0) cand.push_back(ay / dy);
    if (dx - dy != 0) cand.push_back((ax - ay) / (dx - dy));
    if (dx + dy != 0) cand.push_back((ax + ay) / (dx + dy));

    std::optional<Rational> best;
    for (Rational t : cand) {
        if (t < 0) t = 0;
        if (t > 1) t = 1;
        Rational u = ax - t * dx;
        if (u < 0) u = -u;
        Rational v = ay - t * dy;
        if (v < 0) v = -v;
        Rational f = std::max(u, v);
        if (!best || f < *best) best = f;
    }
    return *best;
}

namespace {

bool point_on_ring(const std::vector<RationalPoint>& ring, const RationalPoint& q) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (on_closed_segment(q, ring[i], ring[(i + 1) % ring.size()])) return true;
    }
    return false;
}

// Strict interior test by crossing parity; q must not lie on the ring.
bool point_in_ring(const std::vector<RationalPoint>& ring, const RationalPoint& q) {
    bool in = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const RationalPoint& a = ring[i];
        const RationalPoint& b = ring[(i + 1) % ring.size()];
        const bool up = a.y <= q.y && q.y < b.y;
        const bool down = b.y <= q.y && q.y < a.y;
        if (!up && !down) continue;
        const int side = sign_of(rcross(a, b, q));
        if ((up && side > 0) || (down && side < 0)) in = !in;
    }
    return in;
}

}  // namespace

PolygonQuery polygon_query(const PolygonWithHoles& poly, const RationalPoint& q) {
    if (poly.outer.size() < 3) throw std::invalid_argument("degenerate polygon");

    std::optional<Rational> dist;
    auto feed = [&](const std::vector<RationalPoint>& ring) {
        for (std::size_t i = 0; i < ring.size(); ++i) {
            Rational d = linf_segment_distance(q, ring[i], ring[(i + 1) % ring.size()]);
            if (!dist || d < *dist) dist = d;
        }
    };
    feed(poly.outer);
    for (const auto& h : poly.holes) feed(h);

    PolygonQuery out;
    out.boundary_linf = *dist;

    if (point_on_ring(poly.outer, q)) {
        out.inside = true;
        return out;
    }
    if (!point_in_ring(poly.outer, q)) {
        out.inside = false;
        return out;
    }
    for (const auto& h : poly.holes) {
        if (point_on_ring(h, q)) {
            out.inside = true;  // hole boundaries stay in the closed region
            return out;
        }
        if (point_in_ring(h, q)) {
            out.inside = false;
            return out;
        }
    }
    out.inside = true;
    return out;
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw std::invalid_argument("malformed rational: " + s);
        return Rational(BigInt(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw std::invalid_argument("malformed rational: " + s);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(BigInt(num), d);
}

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace dpeel
