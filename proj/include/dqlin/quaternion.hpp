#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include "dqlin/dual.hpp"
#include "dqlin/errors.hpp"

namespace dqlin {

/// Hamilton quaternion w + x*i + y*j + z*k.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0, double y_ = 0, double z_ = 0)
        : w(w_), x(x_), y(y_), z(z_) {}

    /// Complex-pair form q = p1 + p2*j with p1 = w + x*i, p2 = y + z*i.
    std::complex<double> p1() const { return {w, x}; }
    std::complex<double> p2() const { return {y, z}; }
    static Quaternion from_pair(std::complex<double> p1, std::complex<double> p2) {
        return {p1.real(), p1.imag(), p2.real(), p2.imag()};
    }

    constexpr bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    /// Scalar part sc(q) = (q + q*)/2, returned as the plain real it always is.
    constexpr double scalar_part() const { return w; }

    double norm_squared() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_squared()); }

    friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    friend constexpr Quaternion operator*(double s, const Quaternion& q) {
        return {s * q.w, s * q.x, s * q.y, s * q.z};
    }
    friend constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

    // Hamilton product [p0 q0 - p.q, p0*qv + q0*pv + pv x qv]
    friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
    }

    Quaternion inverse() const {
        const double n2 = norm_squared();
        if (n2 == 0.0) throw ZeroQuaternion("quaternion inverse: zero quaternion");
        return (1.0 / n2) * conj();
    }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << "[" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << "]";
    }
};

/// Dual quaternion st + du*eps.
struct DualQuaternion {
    Quaternion st;
    Quaternion du;

    constexpr DualQuaternion() = default;
    constexpr DualQuaternion(const Quaternion& s, const Quaternion& d = {}) : st(s), du(d) {}

    static constexpr DualQuaternion one() { return {{1, 0, 0, 0}, {}}; }

    constexpr bool appreciable() const { return !st.is_zero(); }
    constexpr bool is_zero() const { return st.is_zero() && du.is_zero(); }

    constexpr DualQuaternion conj() const { return {st.conj(), du.conj()}; }

    friend constexpr DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) {
        return {a.st + b.st, a.du + b.du};
    }
    friend constexpr DualQuaternion operator-(const DualQuaternion& a, const DualQuaternion& b) {
        return {a.st - b.st, a.du - b.du};
    }
    constexpr DualQuaternion operator-() const { return {-st, -du}; }
    friend constexpr DualQuaternion operator*(const DualQuaternion& p, const DualQuaternion& q) {
        return {p.st * q.st, p.st * q.du + p.du * q.st};
    }
    friend constexpr DualQuaternion operator*(double s, const DualQuaternion& q) {
        return {s * q.st, s * q.du};
    }
    friend constexpr DualQuaternion operator*(const DualQuaternion& q, double s) { return s * q; }
    /// Dual numbers commute with dual quaternions, so one overload suffices.
    friend constexpr DualQuaternion operator*(const DualQuaternion& q, DualNumber a) {
        return {a.st * q.st, a.st * q.du + a.du * q.st};
    }
    friend constexpr DualQuaternion operator*(DualNumber a, const DualQuaternion& q) {
        return q * a;
    }

    friend bool operator==(const DualQuaternion& a, const DualQuaternion& b) {
        return a.st == b.st && a.du == b.du;
    }

    /// Absolute value per the dual-number convention:
    /// |p| = |p_st| + sc(p_st^* p_I)/|p_st| * eps when appreciable, else |p_I| * eps.
    DualNumber abs() const {
        if (appreciable()) {
            const double n = st.norm();
            return {n, (st.conj() * du).scalar_part() / n};
        }
        return {0.0, du.norm()};
    }

    /// Magnitude sqrt(|p_st|^2 + |p_I|^2).
    double magnitude() const { return std::sqrt(st.norm_squared() + du.norm_squared()); }

    bool is_unit(double atol = 1e-10) const { return approx_eq(abs(), {1.0, 0.0}, atol); }

    /// p^{-1} = p_st^{-1} - p_st^{-1} p_I p_st^{-1} eps; requires an appreciable p.
    DualQuaternion inverse() const {
        if (!appreciable()) throw NonAppreciable("dual quaternion inverse: non-appreciable");
        const Quaternion si = st.inverse();
        return {si, -1.0 * (si * du * si)};
    }

    friend std::ostream& operator<<(std::ostream& os, const DualQuaternion& q) {
        return os << q.st << " + " << q.du << "*eps";
    }
};

/// Divide by a dual number (appreciable denominator).
inline DualQuaternion operator/(const DualQuaternion& q, DualNumber a) {
    if (a.st == 0.0) throw DivisionByNonAppreciable("dual quaternion / dual number: denominator non-appreciable");
    return {(1.0 / a.st) * q.st, (1.0 / a.st) * q.du - (a.du / (a.st * a.st)) * q.st};
}

/// Nearest unit dual quaternion (projection onto the unit set).
/// Degenerate case (zero standard part) uses the zero free constant.
inline DualQuaternion unit_project(const DualQuaternion& q) {
    if (q.appreciable()) {
        const double a = q.st.norm();
        const Quaternion ust = (1.0 / a) * q.st;
        const double s = (ust.conj() * ((1.0 / a) * q.du)).scalar_part();
        return {ust, (1.0 / a) * q.du - s * ust};
    }
    if (q.du.is_zero()) throw ZeroInput("unit_project: zero dual quaternion");
    return {(1.0 / q.du.norm()) * q.du, Quaternion{}};
}

}  // namespace dqlin
