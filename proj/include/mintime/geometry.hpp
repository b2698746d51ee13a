#pragma once

#include <cmath>

namespace mintime {

/// Plain 2D vector (double precision). Used for positions, velocities and
/// accelerations alike; the unit is whatever the surrounding context says.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
    /// z-component of the 3D cross product; zero iff parallel.
    constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }
    double norm() const { return std::hypot(x, y); }
    constexpr double norm_sq() const { return x * x + y * y; }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// Planar rotation by a fixed angle (radians, counterclockwise).
struct Rot2 {
    double angle = 0.0;

    Vec2 apply(const Vec2& p) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * p.x - s * p.y, s * p.x + c * p.y};
    }
    /// Rotation by -angle; exact inverse of apply().
    Vec2 apply_inverse(const Vec2& p) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * p.x + s * p.y, -s * p.x + c * p.y};
    }
};

/// diag(sigma, 1) reflection across the y-axis when sigma = -1.
inline constexpr Vec2 reflect_x(const Vec2& p, double sigma) { return {sigma * p.x, p.y}; }

/// diag(1, eta) reflection across the x-axis when eta = -1.
inline constexpr Vec2 reflect_y(const Vec2& p, double eta) { return {p.x, eta * p.y}; }

}  // namespace mintime
