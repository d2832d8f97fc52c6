#include "dqlin/eig.hpp"

#include <algorithm>
#include <cmath>

#include "dqlin/rng.hpp"

namespace dqlin {

ComplexEig hermitian_eig_complex(const CMat& a, double tol) {
    if (a.rows() != a.cols()) throw NotSquare("hermitian_eig_complex: matrix not square");
    const double scale = std::max(1.0, a.norm());
    if ((a - a.adjoint()).norm() > tol * scale)
        throw NotHermitian("hermitian_eig_complex: input not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (a + CMat(a.adjoint())));
    if (es.info() != Eigen::Success)
        throw ConvergenceFailure("hermitian_eig_complex: eigensolver failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

DCEigenDecomposition dc_hermitian_eig(const DCMatrix& p, double cluster_tol) {
    if (p.rows() != p.cols()) throw NotSquare("dc_hermitian_eig: matrix not square");
    if (!is_hermitian(p, 1e-10)) throw NotHermitian("dc_hermitian_eig: both parts must be Hermitian");
    const Index n = p.rows();
    const CMat p2h = 0.5 * (p.du + CMat(p.du.adjoint()));

    ComplexEig base = hermitian_eig_complex(p.st);
    // work in descending eigenvalue order
    Eigen::VectorXd vals(n);
    CMat u(n, n);
    for (Index i = 0; i < n; ++i) {
        vals(i) = base.values(n - 1 - i);
        u.col(i) = base.vectors.col(n - 1 - i);
    }
    const double tol =
        cluster_tol > 0.0 ? cluster_tol : 1e-8 * std::max(1.0, std::abs(vals.cwiseAbs().maxCoeff()));

    // cluster equal standard-part eigenvalues (adjacent gap rule)
    std::vector<Index> offsets{0};
    for (Index i = 1; i < n; ++i)
        if (vals(i - 1) - vals(i) > tol) offsets.push_back(i);
    offsets.push_back(n);
    const std::size_t t = offsets.size() - 1;

    std::vector<double> rep(t);
    for (std::size_t c = 0; c < t; ++c)
        rep[c] = vals.segment(offsets[c], offsets[c + 1] - offsets[c]).mean();
    for (std::size_t c = 0; c + 1 < t; ++c)
        if (std::abs(rep[c] - rep[c + 1]) < tol)
            throw DegenerateCluster("dc_hermitian_eig: cluster representatives too close");

    // rediagonalize the projected dual part inside each cluster
    CMat m = u.adjoint() * p2h * u;
    std::vector<DualNumber> sigma;
    sigma.reserve(n);
    for (std::size_t c = 0; c < t; ++c) {
        const Index o = offsets[c], nc = offsets[c + 1] - o;
        CMat block = m.block(o, o, nc, nc);
        block = 0.5 * (block + CMat(block.adjoint()));
        ComplexEig sub = hermitian_eig_complex(block);
        for (Index j = 0; j < nc; ++j)
            sigma.push_back({rep[c], sub.values(nc - 1 - j)});
        CMat ui(nc, nc);
        for (Index j = 0; j < nc; ++j) ui.col(j) = sub.vectors.col(nc - 1 - j);
        u.middleCols(o, nc) = u.middleCols(o, nc) * ui;
    }

    // first-order coupling between clusters
    const CMat q = u.adjoint() * p2h * u;
    CMat tcorr = CMat::Zero(n, n);
    for (std::size_t ci = 0; ci < t; ++ci)
        for (std::size_t cj = 0; cj < t; ++cj) {
            if (ci == cj) continue;
            const Index oi = offsets[ci], ni = offsets[ci + 1] - oi;
            const Index oj = offsets[cj], nj = offsets[cj + 1] - oj;
            tcorr.block(oi, oj, ni, nj) = q.block(oi, oj, ni, nj) / (rep[cj] - rep[ci]);
        }

    return {{u, u * tcorr}, std::move(sigma)};
}

std::vector<DQVector> extract_orthogonal(const std::vector<DQVector>& vs, double rank_tol) {
    if (vs.empty()) throw EmptyInput("extract_orthogonal: empty input");
    if (rank_tol <= 0.0) {
        double biggest = 0.0;
        for (const auto& v : vs) biggest = std::max(biggest, two_r_norm(v));
        rank_tol = 1e-8 * std::max(1.0, biggest);
    }
    std::vector<DQVector> us;
    us.push_back(normalize(vs[0]));
    for (std::size_t j = 1; j < vs.size(); ++j) {
        DQVector w = vs[j];
        for (const auto& ui : us) w = w - ui * inner(ui, vs[j]);
        const DualNumber norm = two_norm(w);
        if (norm.st > rank_tol) us.push_back(normalize(w));
    }
    return us;
}

DQVector canonicalize_eigenvector(const DQVector& v) {
    Index best = 0;
    double best_norm = -1.0;
    for (Index i = 0; i < v.size(); ++i) {
        const double nn = std::norm(v.b1()(i)) + std::norm(v.b2()(i));
        if (nn > best_norm) {
            best_norm = nn;
            best = i;
        }
    }
    if (best_norm <= 0.0) return v;
    const Quaternion g = Quaternion::from_pair(v.b1()(best), v.b2()(best));
    const Quaternion f = (1.0 / g.norm()) * g.conj();
    return v * DualQuaternion(f);
}

void sort_spectrum(std::vector<DualEigenPair>& pairs) {
    std::stable_sort(pairs.begin(), pairs.end(), [](const DualEigenPair& a, const DualEigenPair& b) {
        return abs(b.value) < abs(a.value);
    });
}

DQVector default_start_vector(Index n) {
    DQVector v(n);
    v.b1().setConstant(1.0 / std::sqrt(static_cast<double>(n)));
    return v;
}

DQVector random_start_vector(Index n, std::uint64_t seed) {
    Rng rng(seed);
    DQVector v(n);
    for (Index i = 0; i < n; ++i) {
        v.b1()(i) = {rng.normal(), rng.normal()};
        v.b2()(i) = {rng.normal(), rng.normal()};
        v.b3()(i) = {rng.normal(), rng.normal()};
        v.b4()(i) = {rng.normal(), rng.normal()};
    }
    return normalize(v);
}

Spectrum all_eigenpairs(const DQMatrix& q, double cluster_tol, double rank_tol) {
    if (!is_hermitian(q)) throw NotHermitian("all_eigenpairs: input not Hermitian");
    const Index n = q.rows();
    const AdjointMatrix adj = to_adjoint(hermitize(q));
    const DCEigenDecomposition dec = dc_hermitian_eig(adj.dc, cluster_tol);

    double max_du = 0.0;
    for (const auto& s : dec.sigma) max_du = std::max(max_du, std::abs(s.du));
    const double tol_du = cluster_tol > 0.0 ? cluster_tol : 1e-8 * std::max(1.0, max_du);

    std::vector<DualEigenPair> pairs;
    std::size_t g0 = 0;
    const std::size_t total = dec.sigma.size();
    while (g0 < total) {
        std::size_t g1 = g0 + 1;
        while (g1 < total && dec.sigma[g1].st == dec.sigma[g0].st &&
               std::abs(dec.sigma[g1].du - dec.sigma[g1 - 1].du) <= tol_du)
            ++g1;
        const std::size_t ti = g1 - g0;
        if (ti % 2 != 0)
            throw MultiplicityMismatch("all_eigenpairs: adjoint eigenvalue multiplicity is odd");

        double du_mean = 0.0;
        for (std::size_t i = g0; i < g1; ++i) du_mean += dec.sigma[i].du;
        const DualNumber lambda{dec.sigma[g0].st, du_mean / static_cast<double>(ti)};

        std::vector<DQVector> vs;
        vs.reserve(ti);
        for (std::size_t i = g0; i < g1; ++i)
            vs.push_back(vec_from_adjoint(
                {dec.u.st.col(static_cast<Index>(i)), dec.u.du.col(static_cast<Index>(i))}));
        std::vector<DQVector> ws = extract_orthogonal(vs, rank_tol);
        if (ws.size() != ti / 2)
            throw MultiplicityMismatch("all_eigenpairs: extracted eigenvector count mismatch");
        for (auto& w : ws) pairs.push_back({lambda, canonicalize_eigenvector(w)});
        g0 = g1;
    }
    if (pairs.size() != static_cast<std::size_t>(n))
        throw MultiplicityMismatch("all_eigenpairs: spectrum size mismatch");
    sort_spectrum(pairs);
    return {std::move(pairs)};
}

namespace {

struct DqPowerOut {
    DualNumber lam;
    DQVector v;
    double resid = 0.0;
    int iters = 0;
    bool converged = false;
};

DqPowerOut dq_power_core(const DQMatrix& q, const DQVector& v0, const PowerConfig& cfg,
                         double denom, PowerTrace* trace) {
    DqPowerOut out;
    out.v = v0;
    for (int k = 1; k <= cfg.max_iters; ++k) {
        const DQVector y = matvec(q, out.v);
        const DualQuaternion vy = inner(out.v, y);
        out.lam = {vy.st.scalar_part(), vy.du.scalar_part()};
        out.resid = two_r_norm(y - out.lam * out.v);
        out.iters = k;
        if (trace) {
            trace->residuals.push_back(out.resid);
            trace->iterations = k;
        }
        if (out.resid <= cfg.tol * denom) {
            out.converged = true;
            return out;
        }
        out.v = normalize(y);
    }
    return out;
}

struct DcPowerOut {
    DualNumber lam;
    DCVector u;
    double resid = 0.0;
    int iters = 0;
    bool converged = false;
};

DcPowerOut dc_power_core(const DCMatrix& p, const DCVector& u0, const PowerConfig& cfg,
                         double denom, PowerTrace* trace) {
    DcPowerOut out;
    out.u = u0;
    for (int k = 1; k <= cfg.max_iters; ++k) {
        const DCVector y = matvec(p, out.u);
        const DualComplex uy = inner(out.u, y);
        out.lam = {uy.st.real(), uy.du.real()};
        out.resid = two_r_norm(y - out.lam * out.u);
        out.iters = k;
        if (trace) {
            trace->residuals.push_back(out.resid);
            trace->iterations = k;
        }
        if (out.resid <= cfg.tol * denom) {
            out.converged = true;
            return out;
        }
        out.u = normalize(y);
    }
    return out;
}

DQVector stage_start(Index n, const PowerConfig& cfg, int stage) {
    if (cfg.deterministic_start) return default_start_vector(n);
    return random_start_vector(n, cfg.seed + static_cast<std::uint64_t>(stage));
}

/// Extend a partial orthonormal system with zero eigenpairs so the spectrum
/// has exactly n entries.
void complete_with_zeros(std::vector<DualEigenPair>& pairs, Index n) {
    if (pairs.size() >= static_cast<std::size_t>(n)) return;
    std::vector<DQVector> seed;
    seed.reserve(pairs.size() + n);
    for (const auto& p : pairs) seed.push_back(p.vector);
    for (Index i = 0; i < n; ++i) {
        DQVector e(n);
        e.b1()(i) = 1.0;
        seed.push_back(e);
    }
    const std::vector<DQVector> basis = extract_orthogonal(seed);
    for (std::size_t i = pairs.size(); i < basis.size() && pairs.size() < static_cast<std::size_t>(n);
         ++i)
        pairs.push_back({DualNumber{0.0, 0.0}, canonicalize_eigenvector(basis[i])});
}

}  // namespace

DualEigenPair power_method(const DQMatrix& q, const DQVector& v0, const PowerConfig& cfg,
                           PowerTrace* trace) {
    if (!is_hermitian(q)) throw NotHermitian("power_method: input not Hermitian");
    if (!v0.appreciable()) throw ZeroInput("power_method: start vector not appreciable");
    const DqPowerOut out = dq_power_core(q, v0, cfg, fr_norm(q), trace);
    if (!out.converged) {
        NoConvergence err("power_method: max iterations reached", out.lam, out.resid, out.iters);
        err.last_vector = out.v;
        throw err;
    }
    return {out.lam, canonicalize_eigenvector(out.v)};
}

DualEigenPair power_method_adjoint(const DQMatrix& q, const DQVector& v0, const PowerConfig& cfg,
                                   PowerTrace* trace) {
    if (!is_hermitian(q)) throw NotHermitian("power_method_adjoint: input not Hermitian");
    if (!v0.appreciable()) throw ZeroInput("power_method_adjoint: start vector not appreciable");
    const DCMatrix p = to_adjoint(q).dc;
    const DcPowerOut out = dc_power_core(p, vec_to_adjoint(v0), cfg, fr_norm(q), trace);
    if (!out.converged) {
        NoConvergence err("power_method_adjoint: max iterations reached", out.lam, out.resid,
                          out.iters);
        err.last_vector = vec_from_adjoint(out.u);
        throw err;
    }
    return {out.lam, canonicalize_eigenvector(vec_from_adjoint(out.u))};
}

DeflationResult all_eigenpairs_deflation(const DQMatrix& q, const PowerConfig& cfg, double gamma,
                                         bool allow_partial) {
    if (!is_hermitian(q)) throw NotHermitian("all_eigenpairs_deflation: input not Hermitian");
    const Index n = q.rows();
    DCMatrix p = to_adjoint(hermitize(q)).dc;
    const double denom = fr_norm(q);
    const double gamma_abs = gamma > 0.0 ? gamma : 1e-10 * fr_norm(p);

    DeflationResult res;
    for (Index k = 1; k <= n; ++k) {
        const double pnorm = fr_norm(p);
        if (pnorm <= gamma_abs) break;
        const DCVector u0 = vec_to_adjoint(stage_start(n, cfg, static_cast<int>(k)));
        const DcPowerOut out = dc_power_core(p, u0, cfg, denom, nullptr);
        res.stages.push_back({out.lam, pnorm, out.resid, out.iters, out.converged});
        if (!out.converged) {
            if (!allow_partial) {
                NoConvergence err("all_eigenpairs_deflation: stage did not converge", out.lam,
                                  out.resid, out.iters, static_cast<int>(k));
                err.last_vector = vec_from_adjoint(out.u);
                err.partial = res.spectrum.pairs;
                throw err;
            }
            res.converged = false;
        }
        const DCVector v = swap_map(out.u);
        p = p - out.lam * outer(out.u, out.u) - out.lam * outer(v, v);
        res.spectrum.pairs.push_back({out.lam, canonicalize_eigenvector(vec_from_adjoint(out.u))});
    }
    complete_with_zeros(res.spectrum.pairs, n);
    sort_spectrum(res.spectrum.pairs);
    return res;
}

DeflationResult all_eigenpairs_power(const DQMatrix& q, const PowerConfig& cfg, double gamma,
                                     bool allow_partial) {
    if (!is_hermitian(q)) throw NotHermitian("all_eigenpairs_power: input not Hermitian");
    const Index n = q.rows();
    DQMatrix p = hermitize(q);
    const double denom = fr_norm(q);
    const double gamma_abs = gamma > 0.0 ? gamma : 1e-10 * denom;

    DeflationResult res;
    for (Index k = 1; k <= n; ++k) {
        const double pnorm = fr_norm(p);
        if (pnorm <= gamma_abs) break;
        const DqPowerOut out = dq_power_core(p, stage_start(n, cfg, static_cast<int>(k)), cfg,
                                             denom, nullptr);
        res.stages.push_back({out.lam, pnorm, out.resid, out.iters, out.converged});
        if (!out.converged) {
            if (!allow_partial) {
                NoConvergence err("all_eigenpairs_power: stage did not converge", out.lam,
                                  out.resid, out.iters, static_cast<int>(k));
                err.last_vector = out.v;
                err.partial = res.spectrum.pairs;
                throw err;
            }
            res.converged = false;
        }
        p = p - out.lam * outer(out.v, out.v);
        res.spectrum.pairs.push_back({out.lam, canonicalize_eigenvector(out.v)});
    }
    complete_with_zeros(res.spectrum.pairs, n);
    sort_spectrum(res.spectrum.pairs);
    return res;
}

}  // namespace dqlin
