#pragma once

#include <cmath>
#include <complex>
#include <compare>
#include <ostream>

#include "dqlin/errors.hpp"

namespace dqlin {

/// Dual number a = st + du*eps with eps^2 = 0. Both parts real.
struct DualNumber {
    double st = 0.0;
    double du = 0.0;

    constexpr DualNumber() = default;
    constexpr DualNumber(double s, double d = 0.0) : st(s), du(d) {}

    constexpr bool appreciable() const { return st != 0.0; }

    friend constexpr DualNumber operator+(DualNumber a, DualNumber b) {
        return {a.st + b.st, a.du + b.du};
    }
    friend constexpr DualNumber operator-(DualNumber a, DualNumber b) {
        return {a.st - b.st, a.du - b.du};
    }
    constexpr DualNumber operator-() const { return {-st, -du}; }
    friend constexpr DualNumber operator*(DualNumber a, DualNumber b) {
        return {a.st * b.st, a.st * b.du + a.du * b.st};
    }
    friend constexpr DualNumber operator*(double s, DualNumber a) { return {s * a.st, s * a.du}; }
    friend constexpr DualNumber operator*(DualNumber a, double s) { return s * a; }

    friend DualNumber operator/(DualNumber a, DualNumber b) {
        if (b.st != 0.0)
            return {a.st / b.st, a.du / b.st - a.st * b.du / (b.st * b.st)};
        if (a.st != 0.0 || b.du == 0.0)
            throw DivisionByNonAppreciable("dual division: denominator non-appreciable");
        return {a.du / b.du, 0.0};  // free constant fixed to 0
    }

    friend constexpr bool operator==(DualNumber a, DualNumber b) {
        return a.st == b.st && a.du == b.du;
    }
    // Lexicographic total order on (st, du); exact float comparison.
    friend constexpr std::strong_ordering operator<=>(DualNumber a, DualNumber b) {
        if (a.st < b.st) return std::strong_ordering::less;
        if (a.st > b.st) return std::strong_ordering::greater;
        if (a.du < b.du) return std::strong_ordering::less;
        if (a.du > b.du) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, DualNumber a) {
        return os << a.st << (a.du < 0 ? " - " : " + ") << std::abs(a.du) << "*eps";
    }
};

/// |a| = |st| + sgn(st)*du*eps when appreciable, else |du|*eps.
inline DualNumber abs(DualNumber a) {
    if (a.st != 0.0) return {std::abs(a.st), (a.st > 0 ? a.du : -a.du)};
    return {0.0, std::abs(a.du)};
}

/// sqrt of an appreciable non-negative dual number.
inline DualNumber sqrt(DualNumber a) {
    if (a.st <= 0.0) throw Error("dual sqrt: standard part must be positive");
    const double r = std::sqrt(a.st);
    return {r, a.du / (2.0 * r)};
}

inline bool approx_eq(DualNumber a, DualNumber b, double atol) {
    return std::abs(a.st - b.st) <= atol && std::abs(a.du - b.du) <= atol;
}

/// Dual complex number; same algebra with complex parts.
struct DualComplex {
    std::complex<double> st{0.0, 0.0};
    std::complex<double> du{0.0, 0.0};

    DualComplex() = default;
    DualComplex(std::complex<double> s, std::complex<double> d = {}) : st(s), du(d) {}
    DualComplex(DualNumber a) : st(a.st), du(a.du) {}

    bool appreciable() const { return st != std::complex<double>(0.0, 0.0); }

    DualComplex conj() const { return {std::conj(st), std::conj(du)}; }

    friend DualComplex operator+(const DualComplex& a, const DualComplex& b) {
        return {a.st + b.st, a.du + b.du};
    }
    friend DualComplex operator-(const DualComplex& a, const DualComplex& b) {
        return {a.st - b.st, a.du - b.du};
    }
    DualComplex operator-() const { return {-st, -du}; }
    friend DualComplex operator*(const DualComplex& a, const DualComplex& b) {
        return {a.st * b.st, a.st * b.du + a.du * b.st};
    }
    friend DualComplex operator/(const DualComplex& a, const DualComplex& b) {
        if (b.st != std::complex<double>(0.0, 0.0))
            return {a.st / b.st, a.du / b.st - a.st * b.du / (b.st * b.st)};
        if (a.st != std::complex<double>(0.0, 0.0) || b.du == std::complex<double>(0.0, 0.0))
            throw DivisionByNonAppreciable("dual complex division: denominator non-appreciable");
        return {a.du / b.du, 0.0};
    }
    friend bool operator==(const DualComplex& a, const DualComplex& b) {
        return a.st == b.st && a.du == b.du;
    }
};

}  // namespace dqlin
