#pragma once

#include <cmath>

namespace quatsp {

// Quaternion w + x*i + y*j + z*k over doubles. Multiplication is the Hamilton
// product (i*j = k, j*i = -k); reals embed as (w, 0, 0, 0) and commute with
// everything, general quaternions do not.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    constexpr Quaternion(double real) : w(real) {}  // NOLINT: implicit like std::complex

    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) { return *this *= 1.0 / s; }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}
constexpr bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

inline double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }

// Multiplicative inverse. Undefined (inf/nan components) for q == 0.
constexpr Quaternion inverse(const Quaternion& q) {
    const double n2 = norm2(q);
    return {q.w / n2, -q.x / n2, -q.y / n2, -q.z / n2};
}

// q / |q|, or 1 when q == 0; used wherever a unit phase factor is needed.
inline Quaternion phase_or_one(const Quaternion& q) {
    const double a = abs(q);
    return a == 0.0 ? Quaternion(1.0) : q / a;
}

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

}  // namespace quatsp
