#pragma once

#include <Eigen/Dense>

#include "dqlin/dual.hpp"
#include "dqlin/quaternion.hpp"

namespace dqlin {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Dense dual quaternion matrix stored as four complex blocks:
///   Q = B1 + B2*j + (B3 + B4*j)*eps,
/// i.e. B1, B2 carry the standard part and B3, B4 the dual part.
class DQMatrix {
  public:
    DQMatrix() = default;
    DQMatrix(Index rows, Index cols)
        : b1_(CMat::Zero(rows, cols)),
          b2_(CMat::Zero(rows, cols)),
          b3_(CMat::Zero(rows, cols)),
          b4_(CMat::Zero(rows, cols)) {}
    DQMatrix(CMat b1, CMat b2, CMat b3, CMat b4)
        : b1_(std::move(b1)), b2_(std::move(b2)), b3_(std::move(b3)), b4_(std::move(b4)) {}

    static DQMatrix identity(Index n) {
        DQMatrix m(n, n);
        m.b1_ = CMat::Identity(n, n);
        return m;
    }

    Index rows() const { return b1_.rows(); }
    Index cols() const { return b1_.cols(); }

    const CMat& b1() const { return b1_; }
    const CMat& b2() const { return b2_; }
    const CMat& b3() const { return b3_; }
    const CMat& b4() const { return b4_; }
    CMat& b1() { return b1_; }
    CMat& b2() { return b2_; }
    CMat& b3() { return b3_; }
    CMat& b4() { return b4_; }

    DualQuaternion operator()(Index i, Index j) const {
        return {Quaternion::from_pair(b1_(i, j), b2_(i, j)),
                Quaternion::from_pair(b3_(i, j), b4_(i, j))};
    }
    void set(Index i, Index j, const DualQuaternion& q) {
        b1_(i, j) = q.st.p1();
        b2_(i, j) = q.st.p2();
        b3_(i, j) = q.du.p1();
        b4_(i, j) = q.du.p2();
    }

    friend DQMatrix operator+(const DQMatrix& a, const DQMatrix& b) {
        return {a.b1_ + b.b1_, a.b2_ + b.b2_, a.b3_ + b.b3_, a.b4_ + b.b4_};
    }
    friend DQMatrix operator-(const DQMatrix& a, const DQMatrix& b) {
        return {a.b1_ - b.b1_, a.b2_ - b.b2_, a.b3_ - b.b3_, a.b4_ - b.b4_};
    }
    friend DQMatrix operator*(double s, const DQMatrix& a) {
        return {s * a.b1_, s * a.b2_, s * a.b3_, s * a.b4_};
    }
    /// Scale by a dual number (commutes with dual quaternion matrices).
    friend DQMatrix operator*(DualNumber s, const DQMatrix& a) {
        return {s.st * a.b1_, s.st * a.b2_, s.st * a.b3_ + s.du * a.b1_,
                s.st * a.b4_ + s.du * a.b2_};
    }

    /// Conjugate transpose: (B1 + B2 j)^* = B1^H - B2^T j, applied to both parts.
    DQMatrix conj_transpose() const {
        return {b1_.adjoint(), -b2_.transpose(), b3_.adjoint(), -b4_.transpose()};
    }

  private:
    CMat b1_, b2_, b3_, b4_;
};

/// Dual quaternion column vector in the same four-block layout.
class DQVector {
  public:
    DQVector() = default;
    explicit DQVector(Index n)
        : b1_(CVec::Zero(n)), b2_(CVec::Zero(n)), b3_(CVec::Zero(n)), b4_(CVec::Zero(n)) {}
    DQVector(CVec b1, CVec b2, CVec b3, CVec b4)
        : b1_(std::move(b1)), b2_(std::move(b2)), b3_(std::move(b3)), b4_(std::move(b4)) {}

    Index size() const { return b1_.size(); }

    const CVec& b1() const { return b1_; }
    const CVec& b2() const { return b2_; }
    const CVec& b3() const { return b3_; }
    const CVec& b4() const { return b4_; }
    CVec& b1() { return b1_; }
    CVec& b2() { return b2_; }
    CVec& b3() { return b3_; }
    CVec& b4() { return b4_; }

    DualQuaternion operator()(Index i) const {
        return {Quaternion::from_pair(b1_(i), b2_(i)), Quaternion::from_pair(b3_(i), b4_(i))};
    }
    void set(Index i, const DualQuaternion& q) {
        b1_(i) = q.st.p1();
        b2_(i) = q.st.p2();
        b3_(i) = q.du.p1();
        b4_(i) = q.du.p2();
    }

    bool appreciable() const { return b1_.squaredNorm() + b2_.squaredNorm() > 0.0; }
    bool is_zero() const {
        return !appreciable() && b3_.squaredNorm() + b4_.squaredNorm() == 0.0;
    }

    friend DQVector operator+(const DQVector& a, const DQVector& b) {
        return {a.b1_ + b.b1_, a.b2_ + b.b2_, a.b3_ + b.b3_, a.b4_ + b.b4_};
    }
    friend DQVector operator-(const DQVector& a, const DQVector& b) {
        return {a.b1_ - b.b1_, a.b2_ - b.b2_, a.b3_ - b.b3_, a.b4_ - b.b4_};
    }
    friend DQVector operator*(double s, const DQVector& a) {
        return {s * a.b1_, s * a.b2_, s * a.b3_, s * a.b4_};
    }
    friend DQVector operator*(DualNumber s, const DQVector& a) {
        return {s.st * a.b1_, s.st * a.b2_, s.st * a.b3_ + s.du * a.b1_,
                s.st * a.b4_ + s.du * a.b2_};
    }

  private:
    CVec b1_, b2_, b3_, b4_;
};

/// Dual complex matrix P = st + du*eps.
struct DCMatrix {
    CMat st, du;

    DCMatrix() = default;
    DCMatrix(Index rows, Index cols) : st(CMat::Zero(rows, cols)), du(CMat::Zero(rows, cols)) {}
    DCMatrix(CMat s, CMat d) : st(std::move(s)), du(std::move(d)) {}

    static DCMatrix identity(Index n) { return {CMat::Identity(n, n), CMat::Zero(n, n)}; }

    Index rows() const { return st.rows(); }
    Index cols() const { return st.cols(); }

    DCMatrix adjoint() const { return {st.adjoint(), du.adjoint()}; }

    friend DCMatrix operator+(const DCMatrix& a, const DCMatrix& b) {
        return {a.st + b.st, a.du + b.du};
    }
    friend DCMatrix operator-(const DCMatrix& a, const DCMatrix& b) {
        return {a.st - b.st, a.du - b.du};
    }
    friend DCMatrix operator*(const DCMatrix& a, const DCMatrix& b) {
        return {a.st * b.st, a.st * b.du + a.du * b.st};
    }
    friend DCMatrix operator*(DualNumber s, const DCMatrix& a) {
        return {s.st * a.st, s.st * a.du + s.du * a.st};
    }
};

/// Dual complex column vector.
struct DCVector {
    CVec st, du;

    DCVector() = default;
    explicit DCVector(Index n) : st(CVec::Zero(n)), du(CVec::Zero(n)) {}
    DCVector(CVec s, CVec d) : st(std::move(s)), du(std::move(d)) {}

    Index size() const { return st.size(); }
    bool appreciable() const { return st.squaredNorm() > 0.0; }

    friend DCVector operator+(const DCVector& a, const DCVector& b) {
        return {a.st + b.st, a.du + b.du};
    }
    friend DCVector operator-(const DCVector& a, const DCVector& b) {
        return {a.st - b.st, a.du - b.du};
    }
    friend DCVector operator*(DualNumber s, const DCVector& a) {
        return {s.st * a.st, s.st * a.du + s.du * a.st};
    }
    DCVector operator-() const { return {-st, -du}; }
};

// ---- products ---------------------------------------------------------

DQMatrix matmul(const DQMatrix& a, const DQMatrix& b);
DQVector matvec(const DQMatrix& a, const DQVector& x);
DCVector matvec(const DCMatrix& a, const DCVector& x);

/// u v^* as an n x m dual quaternion matrix.
DQMatrix outer(const DQVector& u, const DQVector& v);
/// u v^* as a dual complex matrix.
DCMatrix outer(const DCVector& u, const DCVector& v);

/// Inner product u^* v (a dual quaternion; a dual number when u = v).
DualQuaternion inner(const DQVector& u, const DQVector& v);
DualComplex inner(const DCVector& u, const DCVector& v);

/// Right scalar multiplication v * s, component by component (quaternions do
/// not commute, so the side matters).
DQVector operator*(const DQVector& v, const DualQuaternion& s);

// ---- norms -------------------------------------------------------------

/// 2-norm as a dual number (degenerate branch: ||x_I|| * eps).
DualNumber two_norm(const DQVector& x);
DualNumber two_norm(const DCVector& x);
/// 2^R-norm sqrt(||x_st||^2 + ||x_I||^2).
double two_r_norm(const DQVector& x);
double two_r_norm(const DCVector& x);

/// F-norm as a dual number; degenerate branch ||Q_I||_F * eps.
DualNumber f_norm(const DQMatrix& q);
DualNumber f_norm(const DCMatrix& p);
/// F^R-norm sqrt(||Q_st||_F^2 + ||Q_I||_F^2).
double fr_norm(const DQMatrix& q);
double fr_norm(const DCMatrix& p);
/// F*-norm sqrt(||Q_st||_F^2 + ||Q_I||_F^2 eps) as a dual number.
DualNumber fstar_norm(const DQMatrix& q);
DualNumber fstar_norm(const DCMatrix& p);

/// Projection onto the unit-2-norm dual quaternion vectors (normalization).
DQVector normalize(const DQVector& x);
DCVector normalize(const DCVector& x);

// ---- structure checks ----------------------------------------------------

bool is_hermitian(const DQMatrix& q, double tol = 1e-10);
bool is_hermitian(const DCMatrix& p, double tol = 1e-10);

/// Force exact Hermitian symmetry, (Q + Q^*)/2.
DQMatrix hermitize(const DQMatrix& q);

}  // namespace dqlin
