#include "lgcp/geometry.hpp"

#include <algorithm>
#include <limits>

namespace lgcp {

double polygon_signed_area(const Polygon& poly) {
    double twice = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        twice += a.cross(b);
    }
    return 0.5 * twice;
}

bool point_in_polygon(const Vec2& p, const Polygon& poly) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x_cross) inside = !inside;
        }
    }
    return inside;
}

namespace {

bool segments_properly_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    double d1 = orient2d(c, d, a);
    double d2 = orient2d(c, d, b);
    double d3 = orient2d(a, b, c);
    double d4 = orient2d(a, b, d);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}

bool polygon_is_simple(const Polygon& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t i2 = (i + 1) % n;
        if ((poly[i] - poly[i2]).norm() == 0.0) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t j2 = (j + 1) % n;
            if (i == j || i2 == j || i == j2) continue;  // adjacent edges share a vertex
            if (segments_properly_intersect(poly[i], poly[i2], poly[j], poly[j2])) return false;
        }
    }
    return true;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b, double* t_out) {
    Vec2 ab = b - a;
    double len2 = ab.squared_norm();
    double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    if (t_out) *t_out = t;
    return (p - (a + ab * t)).norm();
}

double point_polyline_distance(const Vec2& p, const std::vector<Vec2>& waypoints, Vec2* nearest_out) {
    double best = std::numeric_limits<double>::infinity();
    Vec2 best_pt;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
        double t;
        double d = point_segment_distance(p, waypoints[i], waypoints[i + 1], &t);
        if (d < best) {
            best = d;
            best_pt = waypoints[i] + (waypoints[i + 1] - waypoints[i]) * t;
        }
    }
    if (nearest_out) *nearest_out = best_pt;
    return best;
}

double polyline_length(const std::vector<Vec2>& waypoints) {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
        len += (waypoints[i + 1] - waypoints[i]).norm();
    return len;
}

Polygon clip_polygon_convex(const Polygon& subject, const Polygon& convex_clip) {
    Polygon output = subject;
    const std::size_t m = convex_clip.size();
    for (std::size_t e = 0; e < m && !output.empty(); ++e) {
        const Vec2& ca = convex_clip[e];
        const Vec2& cb = convex_clip[(e + 1) % m];
        Polygon input;
        input.swap(output);
        const std::size_t n = input.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& cur = input[i];
            const Vec2& nxt = input[(i + 1) % n];
            double side_cur = orient2d(ca, cb, cur);
            double side_nxt = orient2d(ca, cb, nxt);
            bool in_cur = side_cur >= 0.0;
            bool in_nxt = side_nxt >= 0.0;
            if (in_cur) output.push_back(cur);
            if (in_cur != in_nxt) {
                double t = side_cur / (side_cur - side_nxt);
                output.push_back(cur + (nxt - cur) * t);
            }
        }
    }
    return output;
}

BBox bounding_box(const Polygon& pts) {
    BBox box;
    if (pts.empty()) return box;
    box.xmin = box.xmax = pts[0].x;
    box.ymin = box.ymax = pts[0].y;
    for (const Vec2& p : pts) {
        box.xmin = std::min(box.xmin, p.x);
        box.xmax = std::max(box.xmax, p.x);
        box.ymin = std::min(box.ymin, p.y);
        box.ymax = std::max(box.ymax, p.y);
    }
    return box;
}

}
