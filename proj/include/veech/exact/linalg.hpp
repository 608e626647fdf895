#pragma once

#include <string>

#include "veech/core/error.hpp"
#include "veech/exact/field.hpp"

namespace veech {

struct Vec2 {
    Field x, y;

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Field& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

inline Field cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Field dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// 2×2 matrix [[a, b], [c, d]].
struct Mat2 {
    Field a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Field det() const { return a * d - b * c; }
    Field trace() const { return a + d; }

    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend Mat2 operator*(const Field& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
    friend bool operator==(const Mat2& m, const Mat2& n) { return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d; }
    friend bool operator!=(const Mat2& m, const Mat2& n) { return !(m == n); }

    Mat2 inverse() const {
        Field dt = det();
        if (dt.is_zero()) throw SingularMatrix();
        Field k = dt.inverse();
        return {k * d, -(k * b), -(k * c), k * a};
    }

    Mat2 transpose() const { return {a, c, b, d}; }

    std::string to_string() const {
        return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
    }
};

inline Vec2 mat_apply(const Mat2& m, const Vec2& v) { return m * v; }
inline Mat2 mat_mul(const Mat2& m, const Mat2& n) { return m * n; }
inline Mat2 mat_inv(const Mat2& m) { return m.inverse(); }

/// s·shape with s = √scale_sq > 0; only s² is ever stored.
struct ScaledMatrix {
    Mat2 shape = Mat2::identity();
    Field scale_sq = 1;

    ScaledMatrix() = default;
    ScaledMatrix(Mat2 m, Field s2 = 1) : shape(std::move(m)), scale_sq(std::move(s2)) {
        if (scale_sq.sign() <= 0) throw DomainError("scale_sq must be positive");
    }

    friend ScaledMatrix operator*(const ScaledMatrix& m, const ScaledMatrix& n) {
        return {m.shape * n.shape, m.scale_sq * n.scale_sq};
    }
    Field det() const { return scale_sq * shape.det(); }
    ScaledMatrix inverse() const { return {shape.inverse(), scale_sq.inverse()}; }

    /// Applies the shape only; callers needing the true image scale by s themselves.
    Vec2 apply_shape(const Vec2& v) const { return shape * v; }
};

}  // namespace veech
