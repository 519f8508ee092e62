#pragma once

// Quaternion algebra over 64-bit reals.
//
//   q = w + x i + y j + z k,   i^2 = j^2 = k^2 = ijk = -1
//
// Multiplication is non-commutative; every transform in this library is
// sensitive to factor order, so products are always written out explicitly.

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>
#include <utility>

namespace qfourier {

struct Quaternion {
    double w = 0.0;  // scalar part
    double x = 0.0;  // i
    double y = 0.0;  // j
    double z = 0.0;  // k

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w{w_}, x{x_}, y{y_}, z{z_} {}

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) {
        w /= s; x /= s; y /= s; z /= s;
        return *this;
    }
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

// Throws std::domain_error for the zero quaternion.
Quaternion inverse(const Quaternion& q);

constexpr double scalar_part(const Quaternion& q) { return q.w; }
constexpr Quaternion vector_part(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

// Euclidean dot product of the coefficient 4-vectors, equal to Sc(p conj(q)).
constexpr double dot(const Quaternion& p, const Quaternion& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// An element a + b*mu of the commutative plane spanned by {1, mu}. The
/// imaginary part of the std::complex is the coefficient of the plane's axis.
using PlaneComplex = std::complex<double>;

/// Coefficients of a quaternion in the orthonormal frame {1, mu1, mu2, mu1*mu2}.
struct FrameComponents {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    constexpr bool operator==(const FrameComponents&) const = default;
};

/// Ordered pair of perpendicular unit pure-imaginary quaternions selecting the
/// two transform axes. mu3 = mu1*mu2 completes the frame. The default pair is (i, j).
///
/// Construction validates to within kTolerance and never renormalizes.
class AxisPair {
public:
    static constexpr double kTolerance = 1e-9;

    AxisPair() = default;

    /// Throws std::invalid_argument if either axis is not unit pure imaginary
    /// or the two are not perpendicular.
    AxisPair(const Quaternion& mu1, const Quaternion& mu2);

    static AxisPair standard() { return {}; }

    const Quaternion& mu1() const { return mu1_; }
    const Quaternion& mu2() const { return mu2_; }
    const Quaternion& mu3() const { return mu3_; }

    /// a + b*mu1 for z = a + b*iota.
    Quaternion embed(PlaneComplex z) const { return {z.real() * kOne + z.imag() * mu1_}; }

    /// c1 + c2*mu2 with c1, c2 in the mu1-plane.
    Quaternion compose(PlaneComplex c1, PlaneComplex c2) const;

    Quaternion from_frame(const FrameComponents& c) const {
        return c.a * kOne + c.b * mu1_ + c.c * mu2_ + c.d * mu3_;
    }

    bool operator==(const AxisPair& o) const { return mu1_ == o.mu1_ && mu2_ == o.mu2_; }

private:
    Quaternion mu1_ = kI;
    Quaternion mu2_ = kJ;
    Quaternion mu3_ = kK;
};

/// True when q is a unit pure-imaginary quaternion within tol.
bool is_unit_pure(const Quaternion& q, double tol = AxisPair::kTolerance);

/// a = Sc(q), b = -Sc(q mu1), c = -Sc(q mu2), d = -Sc(q mu3).
FrameComponents component_in_frame(const Quaternion& q, const AxisPair& axes);

/// q = c1 + c2*mu2 with c1, c2 in the plane {1, mu1}. For (i, j) this is the
/// familiar q = (a + b i) + (c + d i) j.
std::pair<PlaneComplex, PlaneComplex> symplectic_split(const Quaternion& q, const AxisPair& axes);

/// True when q lies in the plane {1, mu} within tol (relative to max(1, |q|)).
bool in_plane(const Quaternion& q, const Quaternion& mu, double tol = 1e-12);

}  // namespace qfourier
