#pragma once

#include <cmath>

namespace lune {

/// Plain 3-vector in E^3. Carries no unit-norm guarantee; see SpherePoint
/// for points of S^2.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Component of v orthogonal to the unit vector n, computed as (n x v) x n.
/// Algebraically equal to v - (v.n)n, but the double cross keeps full
/// absolute accuracy when v is nearly parallel to n, where the subtraction
/// form cancels catastrophically.
inline Vec3 reject(const Vec3& v, const Vec3& n) { return cross(cross(n, v), n); }

}  // namespace lune
