#pragma once

#include "dqlin/matrix.hpp"

namespace dqlin {

/// Dual complex adjoint image of an m x n dual quaternion matrix: a 2m x 2n
/// dual complex matrix with block structure
///   [[A1, A2], [-conj(A2), conj(A1)]] + [[A3, A4], [-conj(A4), conj(A3)]] * eps.
/// The top block row holds the source blocks exactly, so round-trips are exact.
struct AdjointMatrix {
    DCMatrix dc;       // assembled 2m x 2n dual complex matrix
    Index src_rows = 0;
    Index src_cols = 0;

    auto a1() const { return dc.st.topLeftCorner(src_rows, src_cols); }
    auto a2() const { return dc.st.topRightCorner(src_rows, src_cols); }
    auto a3() const { return dc.du.topLeftCorner(src_rows, src_cols); }
    auto a4() const { return dc.du.topRightCorner(src_rows, src_cols); }
};

/// The bijection J from dual quaternion matrices onto dual complex adjoint matrices.
AdjointMatrix to_adjoint(const DQMatrix& q);

/// Inverse of J. The input must carry the adjoint block structure within
/// tol * ||P||_FR (eigensolvers introduce rounding, so exact symmetry is not required).
DQMatrix from_adjoint(const DCMatrix& p, double tol = 1e-10);
inline DQMatrix from_adjoint(const AdjointMatrix& p, double tol = 1e-10) {
    return from_adjoint(p.dc, tol);
}

/// The mapping F: stacks v = v1 + v2 j + (v3 + v4 j) eps as
/// (v1; -conj(v2)) + (v3; -conj(v4)) eps.
DCVector vec_to_adjoint(const DQVector& v);

/// Inverse of F: (u1; u2) + (u3; u4) eps -> u1 - conj(u2) j + (u3 - conj(u4) j) eps.
DQVector vec_from_adjoint(const DCVector& u);

/// The transformation H with H(F(v)) = F(v j) and H(H(u)) = -u.
DCVector swap_map(const DCVector& u);

}  // namespace dqlin
