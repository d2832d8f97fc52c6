#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dqlin/adjoint.hpp"
#include "dqlin/matrix.hpp"

namespace dqlin {

/// One eigenpair of a dual quaternion Hermitian matrix: a dual-number
/// eigenvalue with a unit-2-norm dual quaternion eigenvector.
struct DualEigenPair {
    DualNumber value;
    DQVector vector;
};

/// Complete eigensystem, sorted descending by |value| under the dual order.
struct Spectrum {
    std::vector<DualEigenPair> pairs;

    std::size_t size() const { return pairs.size(); }
    const DualEigenPair& operator[](std::size_t i) const { return pairs[i]; }
};

/// Eigendecomposition U Sigma U^* of a dual complex Hermitian matrix.
struct DCEigenDecomposition {
    DCMatrix u;                      // unitary, both parts
    std::vector<DualNumber> sigma;   // diagonal entries, standard parts descending
};

struct ComplexEig {
    Eigen::VectorXd values;  // ascending
    CMat vectors;            // orthonormal columns
};

/// Configuration for the power iterations.
struct PowerConfig {
    int max_iters = 20000;
    double tol = 1e-10;
    /// Start-vector policy for the deflation sweeps, which pick their own
    /// start each stage. Seeded random (reproducible) is the default; the
    /// deterministic all-(1/sqrt(n)) start is exactly orthogonal to what is
    /// left of a repeated eigenvalue's eigenspace after its first deflation
    /// stage, so it cannot be used there.
    bool deterministic_start = false;
    std::uint64_t seed = 0;
};

/// Per-iteration diagnostics, filled when requested.
struct PowerTrace {
    std::vector<double> residuals;
    int iterations = 0;
};

/// Thrown when a power iteration hits max_iters above tolerance. Carries the
/// last iterate; deflation failures also carry the partial spectrum.
struct NoConvergence : Error {
    DualNumber last_value;
    DQVector last_vector;
    double residual = 0.0;
    int iterations = 0;
    int stage = 0;
    std::vector<DualEigenPair> partial;
    NoConvergence(const std::string& msg, DualNumber v, double r, int iters, int stage_ = 0)
        : Error(msg), last_value(v), residual(r), iterations(iters), stage(stage_) {}
};

/// Eigendecomposition of a complex Hermitian matrix (backend for everything
/// adjoint-based). Values ascending, vectors orthonormal.
ComplexEig hermitian_eig_complex(const CMat& a, double tol = 1e-10);

/// Eigendecomposition of a dual complex Hermitian matrix P = P1 + P2 eps:
/// eigendecompose P1, cluster equal eigenvalues, rediagonalize each projected
/// dual block, and couple clusters through the first-order correction term.
/// cluster_tol <= 0 selects the default 1e-8 * max(1, spectral radius of P1).
DCEigenDecomposition dc_hermitian_eig(const DCMatrix& p, double cluster_tol = 0.0);

/// Gram-Schmidt over dual quaternion arithmetic: keeps vectors whose residual
/// 2-norm standard part exceeds rank_tol; outputs pairwise orthogonal
/// unit-2-norm vectors spanning the same space.
/// rank_tol <= 0 selects 1e-8 * max(1, largest input 2^R-norm).
std::vector<DQVector> extract_orthogonal(const std::vector<DQVector>& vs, double rank_tol = 0.0);

/// All eigenpairs through the eigendecomposition of the dual complex adjoint
/// matrix. Tolerances <= 0 select the scaled defaults.
Spectrum all_eigenpairs(const DQMatrix& q, double cluster_tol = 0.0, double rank_tol = 0.0);

/// Power iteration for the strict dominant eigenpair, run directly in dual
/// quaternion arithmetic.
DualEigenPair power_method(const DQMatrix& q, const DQVector& v0, const PowerConfig& cfg,
                           PowerTrace* trace = nullptr);

/// Power iteration on the dual complex adjoint matrix; same contract.
DualEigenPair power_method_adjoint(const DQMatrix& q, const DQVector& v0, const PowerConfig& cfg,
                                   PowerTrace* trace = nullptr);

/// One deflation stage of the adjoint-based sweep.
struct DeflationStage {
    DualNumber value;
    double matrix_norm = 0.0;  // ||P_k||_FR before extraction
    double residual = 0.0;     // power-iteration residual at termination
    int iterations = 0;
    bool converged = false;
};

struct DeflationResult {
    Spectrum spectrum;
    std::vector<DeflationStage> stages;
    bool converged = true;
};

/// All eigenpairs by repeated dominant extraction and rank-two deflation of
/// the adjoint matrix. gamma <= 0 selects 1e-10 * ||J(Q)||_FR.
/// With allow_partial the sweep keeps deflating with the last iterate after a
/// stage fails to converge (the per-stage flags record which); otherwise a
/// failed stage throws NoConvergence carrying the partial spectrum.
DeflationResult all_eigenpairs_deflation(const DQMatrix& q, const PowerConfig& cfg,
                                         double gamma = 0.0, bool allow_partial = false);

/// All eigenpairs by power iteration and rank-one deflation carried out
/// directly in dual quaternion arithmetic.
DeflationResult all_eigenpairs_power(const DQMatrix& q, const PowerConfig& cfg,
                                     double gamma = 0.0, bool allow_partial = false);

/// Deterministic default start vector: every entry (1/sqrt(n)) * 1.
DQVector default_start_vector(Index n);
/// Seeded random unit-2-norm start vector.
DQVector random_start_vector(Index n, std::uint64_t seed);

/// Right-multiply by a unit quaternion so the entry of largest standard-part
/// magnitude has a positive real standard part. Residual norms are invariant.
DQVector canonicalize_eigenvector(const DQVector& v);

/// Sort eigenpairs descending by |value| under the dual order (stable).
void sort_spectrum(std::vector<DualEigenPair>& pairs);

}  // namespace dqlin
