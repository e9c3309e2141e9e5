#include "dpeel/validity.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dpeel {

ValidityContext::ValidityContext(Mode mode, PointSet s, PointSet forbidden)
    : mode_(mode),
      points_(std::move(s)),
      forbidden_(std::move(forbidden)),
      rc_points_(points_.points(), points_.points()) {
    if (mode_ == Mode::island) {
        for (const LatticePoint& p : forbidden_.points()) {
            if (points_.contains(p)) throw std::invalid_argument("forbidden point also in input");
        }
        rc_forbidden_.emplace(points_.points(), forbidden_.points());
    }
}

ValidityContext ValidityContext::digital(PointSet s) {
    return ValidityContext(Mode::digital, std::move(s), PointSet());
}

ValidityContext ValidityContext::island(PointSet s, PointSet forbidden) {
    return ValidityContext(Mode::island, std::move(s), std::move(forbidden));
}

bool is_valid_lattice(const ValidityContext& ctx, const Triangle& t) {
    if (orientation(t.a, t.b, t.c) == 0) {
        const LatticePoint lo = std::min({t.a, t.b, t.c});
        const LatticePoint hi = std::max({t.a, t.b, t.c});
        if (ctx.mode() == ValidityContext::Mode::island) {
            return ctx.forbidden_counter().count_on_closed_segment(lo, hi) == 0;
        }
        return ctx.point_counter().count_on_closed_segment(lo, hi) == lattice_on_segment(lo, hi);
    }
    if (ctx.mode() == ValidityContext::Mode::island) {
        return ctx.forbidden_counter().count_closed_triangle(t.a, t.b, t.c) == 0;
    }
    return ctx.point_counter().count_closed_triangle(t.a, t.b, t.c) == count_lattice_triangle(t);
}

bool is_valid_apex(const ValidityContext& ctx, const ApexTriangle& t) {
    if (ctx.mode() == ValidityContext::Mode::island) {
        return query_apex(ctx.forbidden(), t) == 0;
    }
    const std::uint64_t members = query_apex(ctx.points(), t);
    return count_apex_triangle_limited(t, members) == members;
}

std::vector<Triangle> enumerate_valid(const ValidityContext& ctx) {
    const auto& pts = ctx.points().points();
    std::vector<Triangle> out;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const int o = orientation(pts[i], pts[j], pts[k]);
                if (o == 0) continue;
                Triangle t{pts[i], pts[j], pts[k]};  // pts[i] is the lex minimum
                if (o < 0) std::swap(t.b, t.c);
                if (is_valid_lattice(ctx, t)) out.push_back(t);
            }
        }
    }
    return out;
}

}  // namespace dpeel
