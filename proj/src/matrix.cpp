#include "dqlin/matrix.hpp"

#include "dqlin/errors.hpp"

namespace dqlin {

namespace {

// Quaternion-matrix product in complex-pair form:
// (A1 + A2 j)(B1 + B2 j) = (A1 B1 - A2 conj(B2)) + (A1 B2 + A2 conj(B1)) j.
inline void qmat_mul(const CMat& a1, const CMat& a2, const CMat& b1, const CMat& b2, CMat& r1,
                     CMat& r2) {
    r1 = a1 * b1 - a2 * b2.conjugate();
    r2 = a1 * b2 + a2 * b1.conjugate();
}

inline void qmat_vec(const CMat& a1, const CMat& a2, const CVec& x1, const CVec& x2, CVec& y1,
                     CVec& y2) {
    y1 = a1 * x1 - a2 * x2.conjugate();
    y2 = a1 * x2 + a2 * x1.conjugate();
}

// Sum_k (a1k + a2k j)^* (b1k + b2k j) as a complex pair.
inline void qdot(const CVec& a1, const CVec& a2, const CVec& b1, const CVec& b2,
                 std::complex<double>& z1, std::complex<double>& z2) {
    z1 = a1.dot(b1) + b2.dot(a2);
    z2 = a1.dot(b2) - b1.dot(a2);
}

// a b^* for quaternion vectors in complex-pair form:
// (a1 + a2 j)(b1 + b2 j)^* with (b1 + b2 j)^* taken entrywise.
// Row form of the conjugate is b1^H - b2^T j, so the product is
// (a1 b1^H + a2 b2^T) + (-a1 b2^T + a2 b1^T) j ... derived via qmat_mul below.
inline void qouter(const CVec& a1, const CVec& a2, const CVec& b1, const CVec& b2, CMat& r1,
                   CMat& r2) {
    // Treat b^* as the 1 x n quaternion matrix (b1^H, -b2^T).
    const CMat c1 = b1.adjoint();
    const CMat c2 = -b2.transpose();
    qmat_mul(a1, a2, c1, c2, r1, r2);
}

}  // namespace

DQMatrix matmul(const DQMatrix& a, const DQMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions disagree");
    CMat s1, s2, t1, t2, u1, u2;
    qmat_mul(a.b1(), a.b2(), b.b1(), b.b2(), s1, s2);   // st = A_st B_st
    qmat_mul(a.b1(), a.b2(), b.b3(), b.b4(), t1, t2);   // A_st B_I
    qmat_mul(a.b3(), a.b4(), b.b1(), b.b2(), u1, u2);   // A_I B_st
    return {std::move(s1), std::move(s2), t1 + u1, t2 + u2};
}

DQVector matvec(const DQMatrix& a, const DQVector& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matvec: inner dimensions disagree");
    CVec s1, s2, t1, t2, u1, u2;
    qmat_vec(a.b1(), a.b2(), x.b1(), x.b2(), s1, s2);
    qmat_vec(a.b1(), a.b2(), x.b3(), x.b4(), t1, t2);
    qmat_vec(a.b3(), a.b4(), x.b1(), x.b2(), u1, u2);
    return {std::move(s1), std::move(s2), t1 + u1, t2 + u2};
}

DCVector matvec(const DCMatrix& a, const DCVector& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matvec: inner dimensions disagree");
    return {a.st * x.st, a.st * x.du + a.du * x.st};
}

DQMatrix outer(const DQVector& u, const DQVector& v) {
    CMat s1, s2, t1, t2, u1, u2;
    qouter(u.b1(), u.b2(), v.b1(), v.b2(), s1, s2);
    qouter(u.b1(), u.b2(), v.b3(), v.b4(), t1, t2);
    qouter(u.b3(), u.b4(), v.b1(), v.b2(), u1, u2);
    return {std::move(s1), std::move(s2), t1 + u1, t2 + u2};
}

DCMatrix outer(const DCVector& u, const DCVector& v) {
    return {u.st * v.st.adjoint(), u.st * v.du.adjoint() + u.du * v.st.adjoint()};
}

DualQuaternion inner(const DQVector& u, const DQVector& v) {
    if (u.size() != v.size()) throw DimensionMismatch("inner: length mismatch");
    std::complex<double> s1, s2, t1, t2, w1, w2;
    qdot(u.b1(), u.b2(), v.b1(), v.b2(), s1, s2);
    qdot(u.b1(), u.b2(), v.b3(), v.b4(), t1, t2);
    qdot(u.b3(), u.b4(), v.b1(), v.b2(), w1, w2);
    return {Quaternion::from_pair(s1, s2), Quaternion::from_pair(t1 + w1, t2 + w2)};
}

DualComplex inner(const DCVector& u, const DCVector& v) {
    if (u.size() != v.size()) throw DimensionMismatch("inner: length mismatch");
    return {u.st.dot(v.st), u.st.dot(v.du) + u.du.dot(v.st)};
}

namespace {
// Entrywise (a1k + a2k j)(s1 + s2 j) = (a1k s1 - a2k conj(s2)) + (a1k s2 + a2k conj(s1)) j.
inline void qscale_right(const CVec& a1, const CVec& a2, std::complex<double> s1,
                         std::complex<double> s2, CVec& r1, CVec& r2) {
    r1 = a1 * s1 - a2 * std::conj(s2);
    r2 = a1 * s2 + a2 * std::conj(s1);
}
}  // namespace

DQVector operator*(const DQVector& v, const DualQuaternion& s) {
    CVec s1, s2, t1, t2, u1, u2;
    qscale_right(v.b1(), v.b2(), s.st.p1(), s.st.p2(), s1, s2);
    qscale_right(v.b1(), v.b2(), s.du.p1(), s.du.p2(), t1, t2);
    qscale_right(v.b3(), v.b4(), s.st.p1(), s.st.p2(), u1, u2);
    return {std::move(s1), std::move(s2), t1 + u1, t2 + u2};
}

// ---- norms -----------------------------------------------------------------

DualNumber two_norm(const DQVector& x) {
    const double s2 = x.b1().squaredNorm() + x.b2().squaredNorm();
    if (s2 == 0.0) return {0.0, std::sqrt(x.b3().squaredNorm() + x.b4().squaredNorm())};
    const double s = std::sqrt(s2);
    const double cross = (x.b1().dot(x.b3()) + x.b4().dot(x.b2())).real();
    return {s, cross / s};
}

DualNumber two_norm(const DCVector& x) {
    const double s2 = x.st.squaredNorm();
    if (s2 == 0.0) return {0.0, x.du.norm()};
    const double s = std::sqrt(s2);
    return {s, x.st.dot(x.du).real() / s};
}

double two_r_norm(const DQVector& x) {
    return std::sqrt(x.b1().squaredNorm() + x.b2().squaredNorm() + x.b3().squaredNorm() +
                     x.b4().squaredNorm());
}

double two_r_norm(const DCVector& x) {
    return std::sqrt(x.st.squaredNorm() + x.du.squaredNorm());
}

namespace {
inline double re_inner(const CMat& a, const CMat& b) {
    return a.conjugate().cwiseProduct(b).sum().real();
}
}  // namespace

DualNumber f_norm(const DQMatrix& q) {
    const double s2 = q.b1().squaredNorm() + q.b2().squaredNorm();
    if (s2 == 0.0) return {0.0, std::sqrt(q.b3().squaredNorm() + q.b4().squaredNorm())};
    const double s = std::sqrt(s2);
    // sc(tr(Q_st^* Q_I)) = Re<B1,B3> + Re<B2,B4>
    const double cross = re_inner(q.b1(), q.b3()) + re_inner(q.b2(), q.b4());
    return {s, cross / s};
}

DualNumber f_norm(const DCMatrix& p) {
    const double s = p.st.norm();
    if (s == 0.0) return {0.0, p.du.norm()};
    return {s, re_inner(p.st, p.du) / s};
}

double fr_norm(const DQMatrix& q) {
    return std::sqrt(q.b1().squaredNorm() + q.b2().squaredNorm() + q.b3().squaredNorm() +
                     q.b4().squaredNorm());
}

double fr_norm(const DCMatrix& p) { return std::sqrt(p.st.squaredNorm() + p.du.squaredNorm()); }

DualNumber fstar_norm(const DQMatrix& q) {
    const double s = std::sqrt(q.b1().squaredNorm() + q.b2().squaredNorm());
    const double d2 = q.b3().squaredNorm() + q.b4().squaredNorm();
    if (s == 0.0) return {0.0, std::sqrt(d2)};
    return {s, d2 / (2.0 * s)};
}

DualNumber fstar_norm(const DCMatrix& p) {
    const double s = p.st.norm();
    const double d2 = p.du.squaredNorm();
    if (s == 0.0) return {0.0, std::sqrt(d2)};
    return {s, d2 / (2.0 * s)};
}

// ---- normalization -----------------------------------------------------------

DQVector normalize(const DQVector& x) {
    const double a2 = x.b1().squaredNorm() + x.b2().squaredNorm();
    if (a2 > 0.0) {
        const double a = std::sqrt(a2);
        // sc(x_st^* x_I) / a^2
        const double s = (x.b1().dot(x.b3()) + x.b4().dot(x.b2())).real() / a2;
        return {x.b1() / a, x.b2() / a, x.b3() / a - (s / a) * x.b1(),
                x.b4() / a - (s / a) * x.b2()};
    }
    const double d = std::sqrt(x.b3().squaredNorm() + x.b4().squaredNorm());
    if (d == 0.0) throw ZeroVector("normalize: zero vector");
    const Index n = x.size();
    return {x.b3() / d, x.b4() / d, CVec::Zero(n), CVec::Zero(n)};
}

DCVector normalize(const DCVector& x) {
    const double a = x.st.norm();
    if (a > 0.0) {
        const double s = x.st.dot(x.du).real() / (a * a);
        return {x.st / a, x.du / a - (s / a) * x.st};
    }
    const double d = x.du.norm();
    if (d == 0.0) throw ZeroVector("normalize: zero vector");
    return {x.du / d, CVec::Zero(x.size())};
}

// ---- structure checks ----------------------------------------------------------

bool is_hermitian(const DQMatrix& q, double tol) {
    if (q.rows() != q.cols()) throw NotSquare("is_hermitian: matrix not square");
    const double diff = fr_norm(q - q.conj_transpose());
    return diff <= tol * std::max(1.0, fr_norm(q));
}

bool is_hermitian(const DCMatrix& p, double tol) {
    if (p.rows() != p.cols()) throw NotSquare("is_hermitian: matrix not square");
    const double diff =
        std::sqrt((p.st - p.st.adjoint()).squaredNorm() + (p.du - p.du.adjoint()).squaredNorm());
    return diff <= tol * std::max(1.0, fr_norm(p));
}

DQMatrix hermitize(const DQMatrix& q) {
    const DQMatrix qh = q.conj_transpose();
    return {0.5 * (q.b1() + qh.b1()), 0.5 * (q.b2() + qh.b2()), 0.5 * (q.b3() + qh.b3()),
            0.5 * (q.b4() + qh.b4())};
}

}  // namespace dqlin
