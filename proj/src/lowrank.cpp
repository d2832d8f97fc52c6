#include "dqlin/lowrank.hpp"

#include <algorithm>
#include <cmath>

namespace dqlin {

namespace {

DQMatrix accumulate_pairs(Index n, const std::vector<DualEigenPair>& pairs) {
    DQMatrix z(n, n);
    for (const auto& p : pairs) z = z + p.value * outer(p.vector, p.vector);
    return hermitize(z);
}

}  // namespace

RankKApprox rank_k_approx_F(const DQMatrix& q, Index k) {
    if (!is_hermitian(q)) throw NotHermitian("rank_k_approx_F: input not Hermitian");
    if (k < 1 || k > q.rows()) throw BadRank("rank_k_approx_F: rank out of range");
    Spectrum spec = all_eigenpairs(q);
    std::vector<DualEigenPair> used(spec.pairs.begin(), spec.pairs.begin() + k);
    DQMatrix z = accumulate_pairs(q.rows(), used);
    return {std::move(z), std::move(used)};
}

RankKApprox rank1_approx_F(const DQMatrix& q, const PowerConfig& cfg) {
    if (!is_hermitian(q)) throw NotHermitian("rank1_approx_F: input not Hermitian");
    DualEigenPair top = power_method_adjoint(q, default_start_vector(q.rows()), cfg);
    std::vector<DualEigenPair> used{top};
    return {accumulate_pairs(q.rows(), used), std::move(used)};
}

RankKApprox rank_k_approx_Fstar(const DQMatrix& q, Index k) {
    if (!is_hermitian(q)) throw NotHermitian("rank_k_approx_Fstar: input not Hermitian");
    const Index n = q.rows();
    if (k < 1 || k > n) throw BadRank("rank_k_approx_Fstar: rank out of range");
    const DCMatrix p = to_adjoint(hermitize(q)).dc;
    const CMat p2h = 0.5 * (p.du + CMat(p.du.adjoint()));

    // quaternion eigenpairs of the standard part, from its complex adjoint
    const ComplexEig base = hermitian_eig_complex(p.st);
    const Index m = 2 * n;
    const double tol = 1e-8 * std::max(1.0, base.values.cwiseAbs().maxCoeff());

    // cluster equal eigenvalues (values ascending), then order clusters by |rep|
    std::vector<std::pair<Index, Index>> clusters;
    Index c0 = 0;
    for (Index i = 1; i <= m; ++i) {
        if (i == m || base.values(i) - base.values(i - 1) > tol) {
            clusters.emplace_back(c0, i);
            c0 = i;
        }
    }
    std::vector<double> reps(clusters.size());
    for (std::size_t c = 0; c < clusters.size(); ++c)
        reps[c] = base.values.segment(clusters[c].first, clusters[c].second - clusters[c].first)
                      .mean();
    std::vector<std::size_t> order(clusters.size());
    for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return std::abs(reps[a]) > std::abs(reps[b]); });

    std::vector<double> lambdas;            // |.| descending quaternion eigenvalues
    std::vector<DQVector> vectors;          // standard-part-only eigenvectors
    for (std::size_t c : order) {
        const auto [lo, hi] = clusters[c];
        std::vector<DQVector> vs;
        for (Index i = lo; i < hi; ++i) {
            DCVector col{base.vectors.col(i), CVec::Zero(m)};
            vs.push_back(vec_from_adjoint(col));
        }
        std::vector<DQVector> ws = extract_orthogonal(vs);
        if (2 * ws.size() != static_cast<std::size_t>(hi - lo))
            throw MultiplicityMismatch("rank_k_approx_Fstar: adjoint multiplicity not doubled");
        for (auto& w : ws) {
            lambdas.push_back(reps[c]);
            vectors.push_back(std::move(w));
        }
    }

    if (k < n && !(std::abs(lambdas[k - 1]) - std::abs(lambdas[k]) >
                   1e-10 * std::abs(lambdas[0])))
        throw SpectralGapViolation("rank_k_approx_Fstar: no gap after the k-th eigenvalue");

    // V = J(V~) for the n x k standard-part eigenvector matrix V~ = V1 + V2 j
    CMat v(2 * n, 2 * k);
    for (Index j = 0; j < k; ++j) {
        const DQVector& w = vectors[j];
        v.col(j).head(n) = w.b1();
        v.col(j).tail(n) = -w.b2().conjugate();
        v.col(k + j).head(n) = w.b2();
        v.col(k + j).tail(n) = w.b1().conjugate();
    }
    Eigen::VectorXd sig(2 * k);
    for (Index j = 0; j < k; ++j) sig(j) = sig(k + j) = lambdas[j];

    const CMat vst = v * sig.asDiagonal() * v.adjoint();
    const CMat proj = CMat::Identity(2 * n, 2 * n) - v * v.adjoint();
    const CMat vdu = p2h - proj * p2h * proj;

    std::vector<DualEigenPair> used;
    for (Index j = 0; j < k; ++j) used.push_back({DualNumber{lambdas[j], 0.0}, vectors[j]});
    return {from_adjoint(DCMatrix{vst, vdu}), std::move(used)};
}

RankKApprox rank1_approx_Fstar(const DQMatrix& q, const PowerConfig& cfg,
                               const DQVector* warm_start) {
    if (!is_hermitian(q)) throw NotHermitian("rank1_approx_Fstar: input not Hermitian");
    const Index n = q.rows();
    const DCMatrix p = to_adjoint(hermitize(q)).dc;
    const CMat p2h = 0.5 * (p.du + CMat(p.du.adjoint()));

    // dominant eigenpair of the standard part by plain power iteration
    const double denom = p.st.norm();
    CVec v = vec_to_adjoint(warm_start && warm_start->size() == n ? *warm_start
                                                                  : default_start_vector(n))
                 .st;
    const double vn0 = v.norm();
    if (vn0 == 0.0) throw ZeroInput("rank1_approx_Fstar: start vector not appreciable");
    v /= vn0;
    double lambda = 0.0;
    bool converged = false;
    int iters = 0;
    for (int k = 1; k <= cfg.max_iters; ++k) {
        const CVec y = p.st * v;
        lambda = v.dot(y).real();
        const double resid = (y - lambda * v).norm();
        iters = k;
        if (resid <= cfg.tol * denom) {
            converged = true;
            break;
        }
        const double yn = y.norm();
        if (yn == 0.0) throw ZeroDominant("rank1_approx_Fstar: dominant eigenvalue is zero");
        v = y / yn;
    }
    if (!converged)
        throw NoConvergence("rank1_approx_Fstar: power iteration on the standard part stalled",
                            DualNumber{lambda, 0.0}, 0.0, iters);
    if (lambda == 0.0) throw ZeroDominant("rank1_approx_Fstar: dominant eigenvalue is zero");

    // V = [v, -H(v)] pairs the eigenvector with its quaternion twin
    CMat vmat(2 * n, 2);
    vmat.col(0) = v;
    vmat.col(1).head(n) = -v.tail(n).conjugate();
    vmat.col(1).tail(n) = v.head(n).conjugate();

    CMat r = vmat.adjoint() * p2h * vmat;
    r = 0.5 * (r + CMat(r.adjoint()));
    Eigen::SelfAdjointEigenSolver<CMat> es(r);
    if (es.info() != Eigen::Success)
        throw ConvergenceFailure("rank1_approx_Fstar: 2x2 eigensolver failed");
    const int pick = std::abs(es.eigenvalues()(0)) > std::abs(es.eigenvalues()(1)) ? 0 : 1;
    const double mu = es.eigenvalues()(pick);
    const CVec u = es.eigenvectors().col(pick);

    CMat umat(2, 2);
    umat(0, 0) = u(0);
    umat(1, 0) = u(1);
    umat(0, 1) = -std::conj(u(1));
    umat(1, 1) = std::conj(u(0));

    const CMat w1 = vmat * umat;
    const CMat w2 = (p2h * w1 - mu * w1) / lambda;

    const DQVector uhat = vec_from_adjoint({w1.col(0), w2.col(0)});
    const DualNumber value{lambda, mu};
    std::vector<DualEigenPair> used{{value, uhat}};
    return {hermitize(value * outer(uhat, uhat)), std::move(used)};
}

}  // namespace dqlin
