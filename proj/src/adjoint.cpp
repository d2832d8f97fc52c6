#include "dqlin/adjoint.hpp"

#include "dqlin/errors.hpp"

namespace dqlin {

namespace {

CMat assemble(const CMat& top_left, const CMat& top_right) {
    const Index m = top_left.rows(), n = top_left.cols();
    CMat out(2 * m, 2 * n);
    out.topLeftCorner(m, n) = top_left;
    out.topRightCorner(m, n) = top_right;
    out.bottomLeftCorner(m, n) = -top_right.conjugate();
    out.bottomRightCorner(m, n) = top_left.conjugate();
    return out;
}

}  // namespace

AdjointMatrix to_adjoint(const DQMatrix& q) {
    return {{assemble(q.b1(), q.b2()), assemble(q.b3(), q.b4())}, q.rows(), q.cols()};
}

DQMatrix from_adjoint(const DCMatrix& p, double tol) {
    if (p.rows() % 2 != 0 || p.cols() % 2 != 0)
        throw NotAdjointStructured("from_adjoint: dimensions must be even");
    const Index m = p.rows() / 2, n = p.cols() / 2;
    const double scale = std::max(1.0, fr_norm(p));
    double mismatch = 0.0;
    auto check = [&](const CMat& part) {
        mismatch += (part.bottomLeftCorner(m, n) + part.topRightCorner(m, n).conjugate())
                        .squaredNorm();
        mismatch += (part.bottomRightCorner(m, n) - part.topLeftCorner(m, n).conjugate())
                        .squaredNorm();
    };
    check(p.st);
    check(p.du);
    if (std::sqrt(mismatch) > tol * scale)
        throw NotAdjointStructured("from_adjoint: block symmetry violated");
    return {p.st.topLeftCorner(m, n), p.st.topRightCorner(m, n), p.du.topLeftCorner(m, n),
            p.du.topRightCorner(m, n)};
}

DCVector vec_to_adjoint(const DQVector& v) {
    const Index n = v.size();
    CVec st(2 * n), du(2 * n);
    st.head(n) = v.b1();
    st.tail(n) = -v.b2().conjugate();
    du.head(n) = v.b3();
    du.tail(n) = -v.b4().conjugate();
    return {std::move(st), std::move(du)};
}

DQVector vec_from_adjoint(const DCVector& u) {
    if (u.size() % 2 != 0) throw OddLength("vec_from_adjoint: odd length");
    const Index n = u.size() / 2;
    return {u.st.head(n), -u.st.tail(n).conjugate(), u.du.head(n), -u.du.tail(n).conjugate()};
}

DCVector swap_map(const DCVector& u) {
    if (u.size() % 2 != 0) throw OddLength("swap_map: odd length");
    const Index n = u.size() / 2;
    CVec st(2 * n), du(2 * n);
    st.head(n) = u.st.tail(n).conjugate();
    st.tail(n) = -u.st.head(n).conjugate();
    du.head(n) = u.du.tail(n).conjugate();
    du.tail(n) = -u.du.head(n).conjugate();
    return {std::move(st), std::move(du)};
}

}  // namespace dqlin
