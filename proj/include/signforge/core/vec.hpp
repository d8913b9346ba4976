// Copyright (c) signforge contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace signforge {

struct Vec3 {
    float x = 0.0f, y = 0.0f, z = 0.0f;

    constexpr Vec3() = default;
    constexpr Vec3(float x_, float y_, float z_) : x(x_), y(y_), z(z_) {}
    explicit constexpr Vec3(float s) : x(s), y(s), z(s) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(const Vec3& o) const { return {x * o.x, y * o.y, z * o.z}; }
    constexpr Vec3 operator*(float s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(float s) const { return {x / s, y / s, z / s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator*=(const Vec3& o) { x *= o.x; y *= o.y; z *= o.z; return *this; }
    Vec3& operator*=(float s) { x *= s; y *= s; z *= s; return *this; }

    constexpr float operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline constexpr Vec3 operator*(float s, const Vec3& v) { return v * s; }

inline constexpr float dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline float length(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalize(const Vec3& v) { return v / length(v); }
inline constexpr float max_component(const Vec3& v) { return v.x > v.y ? (v.x > v.z ? v.x : v.z) : (v.y > v.z ? v.y : v.z); }

/// Column-major 3x3 rotation/linear map; m[c] is column c.
struct Mat3 {
    Vec3 col[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    Vec3 operator*(const Vec3& v) const { return col[0] * v.x + col[1] * v.y + col[2] * v.z; }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int c = 0; c < 3; ++c) r.col[c] = (*this) * o.col[c];
        return r;
    }
    Mat3 transposed() const {
        Mat3 r;
        r.col[0] = {col[0].x, col[1].x, col[2].x};
        r.col[1] = {col[0].y, col[1].y, col[2].y};
        r.col[2] = {col[0].z, col[1].z, col[2].z};
        return r;
    }

    static Mat3 rotation_x(float a) {
        const float c = std::cos(a), s = std::sin(a);
        Mat3 r;
        r.col[0] = {1, 0, 0};
        r.col[1] = {0, c, s};
        r.col[2] = {0, -s, c};
        return r;
    }
    static Mat3 rotation_y(float a) {
        const float c = std::cos(a), s = std::sin(a);
        Mat3 r;
        r.col[0] = {c, 0, -s};
        r.col[1] = {0, 1, 0};
        r.col[2] = {s, 0, c};
        return r;
    }
    static Mat3 rotation_z(float a) {
        const float c = std::cos(a), s = std::sin(a);
        Mat3 r;
        r.col[0] = {c, s, 0};
        r.col[1] = {-s, c, 0};
        r.col[2] = {0, 0, 1};
        return r;
    }
    /// Rotation by angle a around an arbitrary unit axis (Rodrigues).
    static Mat3 rotation_axis(const Vec3& u, float a) {
        const float c = std::cos(a), s = std::sin(a), t = 1.0f - c;
        Mat3 r;
        r.col[0] = {c + u.x * u.x * t, u.y * u.x * t + u.z * s, u.z * u.x * t - u.y * s};
        r.col[1] = {u.x * u.y * t - u.z * s, c + u.y * u.y * t, u.z * u.y * t + u.x * s};
        r.col[2] = {u.x * u.z * t + u.y * s, u.y * u.z * t - u.x * s, c + u.z * u.z * t};
        return r;
    }
};

constexpr float kPi = 3.14159265358979323846f;
constexpr float kTwoPi = 6.28318530717958647692f;

inline constexpr float radians(float deg) { return deg * (kPi / 180.0f); }
inline constexpr float degrees(float rad) { return rad * (180.0f / kPi); }

}  // namespace signforge
