#pragma once

#include <cmath>
#include <vector>

namespace lgcp {

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double squared_norm() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

using Polygon = std::vector<Vec2>;

// Twice the signed area of triangle (a, b, c); positive when counterclockwise.
inline double orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
    long double acx = static_cast<long double>(a.x) - c.x;
    long double acy = static_cast<long double>(a.y) - c.y;
    long double bcx = static_cast<long double>(b.x) - c.x;
    long double bcy = static_cast<long double>(b.y) - c.y;
    return static_cast<double>(acx * bcy - acy * bcx);
}

inline double triangle_area(const Vec2& a, const Vec2& b, const Vec2& c) {
    return 0.5 * orient2d(a, b, c);
}

// Shoelace formula; positive for counterclockwise orientation.
double polygon_signed_area(const Polygon& poly);

// Crossing-number test; points on the boundary may land on either side.
bool point_in_polygon(const Vec2& p, const Polygon& poly);

bool polygon_is_simple(const Polygon& poly);

// Distance from p to segment [a, b]; t_out receives the projection parameter
// clamped to [0, 1].
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b, double* t_out = nullptr);

// Distance from p to a polyline, with the closest point returned via nearest_out.
double point_polyline_distance(const Vec2& p, const std::vector<Vec2>& waypoints, Vec2* nearest_out = nullptr);

double polyline_length(const std::vector<Vec2>& waypoints);

// Sutherland-Hodgman clip of a simple subject polygon against a convex clip
// polygon given in counterclockwise order. Concave subjects may come back with
// zero-width bridges, which do not affect the signed area.
Polygon clip_polygon_convex(const Polygon& subject, const Polygon& convex_clip);

struct BBox {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
    double diameter() const { return std::hypot(xmax - xmin, ymax - ymin); }
};

BBox bounding_box(const Polygon& pts);

}
