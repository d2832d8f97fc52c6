#pragma once

#include "dqlin/eig.hpp"

namespace dqlin {

/// Rank-k approximation together with the eigenpairs that built it.
struct RankKApprox {
    DQMatrix approx;
    std::vector<DualEigenPair> used;
};

/// Optimal rank-k approximation under the F-norm: keep the top-k eigenpairs
/// of the full spectrum, ordered by |value| under the dual order.
RankKApprox rank_k_approx_F(const DQMatrix& q, Index k);

/// Optimal rank-1 approximation under the F-norm via power iteration on the
/// adjoint matrix.
RankKApprox rank1_approx_F(const DQMatrix& q, const PowerConfig& cfg = {});

/// Optimal rank-k approximation under the F*-norm. Only the standard part's
/// eigenvectors enter; the dual part is the projected-complement correction.
/// Requires a spectral gap between the k-th and (k+1)-th standard eigenvalue
/// magnitudes.
RankKApprox rank_k_approx_Fstar(const DQMatrix& q, Index k);

/// Optimal rank-1 approximation under the F*-norm: dominant eigenpair of the
/// adjoint standard part by power iteration, then the 2x2 projected dual
/// block supplies the dual correction. An optional warm start seeds the power
/// iteration (its standard part is used).
RankKApprox rank1_approx_Fstar(const DQMatrix& q, const PowerConfig& cfg = {},
                               const DQVector* warm_start = nullptr);

}  // namespace dqlin
