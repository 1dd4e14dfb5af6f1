#pragma once

#include <cmath>

namespace jdet {

// 2D point / vector in meters. All geometry in this library is planar.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Point2() = default;
    constexpr Point2(double px, double py) : x(px), y(py) {}

    constexpr Point2 operator+(const Point2& r) const { return {x + r.x, y + r.y}; }
    constexpr Point2 operator-(const Point2& r) const { return {x - r.x, y - r.y}; }
    constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Point2 operator*(double s, const Point2& v) { return {v.x * s, v.y * s}; }

    constexpr double dot(const Point2& r) const { return x * r.x + y * r.y; }
    // z-component of the 3D cross product; sign tells left/right of this vector.
    constexpr double cross(const Point2& r) const { return x * r.y - y * r.x; }
    double norm() const { return std::hypot(x, y); }
    constexpr double squared_norm() const { return x * x + y * y; }

    Point2 rotated(double angle_rad) const {
        const double c = std::cos(angle_rad);
        const double s = std::sin(angle_rad);
        return {x * c - y * s, x * s + y * c};
    }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }

    constexpr bool operator==(const Point2&) const = default;
};

inline double squared_distance(const Point2& a, const Point2& b) {
    return (a - b).squared_norm();
}

inline double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }

}  // namespace jdet
