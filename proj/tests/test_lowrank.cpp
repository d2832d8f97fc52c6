#include <doctest.h>

#include <cmath>

#include "dqlin/lowrank.hpp"
#include "util.hpp"

using namespace dqlin;
using testutil::random_dq_vector;
using testutil::synthesize_hermitian;

namespace {

DQMatrix dual_diag(const std::vector<DualNumber>& d) {
    const Index n = static_cast<Index>(d.size());
    DQMatrix q(n, n);
    for (Index i = 0; i < n; ++i) q.set(i, i, DualQuaternion{{d[i].st}, {d[i].du}});
    return q;
}

/// Number of standard-part singular values of J(a) above 1e-8 * sigma_max.
int adjoint_rank(const DQMatrix& a) {
    const CMat st = to_adjoint(a).dc.st;
    const Eigen::JacobiSVD<CMat> svd(st);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-8 * sv(0)) ++r;
    return r;
}

DQMatrix random_rank1_hermitian(Index n, Rng& rng) {
    const DQVector w = normalize(testutil::random_dq_vector(n, rng));
    const DualNumber alpha{rng.normal(), rng.normal()};
    return hermitize(alpha * outer(w, w));
}

}  // namespace

TEST_SUITE("lowrank") {

TEST_CASE("F-norm rank-k on diagonals") {
    const DQMatrix q = dual_diag({{3, 1}, {1, 0}});
    const RankKApprox r1 = rank_k_approx_F(q, 1);
    CHECK(fr_norm(r1.approx - dual_diag({{3, 1}, {0, 0}})) < 1e-10);
    CHECK(adjoint_rank(r1.approx) == 2);

    const RankKApprox full = rank_k_approx_F(q, 2);
    CHECK(fr_norm(full.approx - q) < 1e-9);

    CHECK_THROWS_AS(rank_k_approx_F(q, 0), BadRank);
    CHECK_THROWS_AS(rank_k_approx_F(q, 3), BadRank);
}

TEST_CASE("F-norm residual equals the discarded eigenvalue mass") {
    Rng rng(50);
    const std::vector<DualNumber> values{{5, 1}, {-3, 0.5}, {2, -1}, {1, 2}, {0.5, 0}};
    const DQMatrix q = synthesize_hermitian(values, rng);
    const Spectrum spec = all_eigenpairs(q);
    for (Index k = 1; k <= 5; ++k) {
        const RankKApprox r = rank_k_approx_F(q, k);
        double expect = 0.0;
        for (std::size_t i = k; i < spec.size(); ++i) expect += spec[i].value.st * spec[i].value.st;
        CHECK(f_norm(q - r.approx).st == doctest::Approx(std::sqrt(expect)).epsilon(1e-9));
        CHECK(is_hermitian(r.approx, 1e-10));
        CHECK(adjoint_rank(r.approx) == 2 * static_cast<int>(k));
    }
}

TEST_CASE("F-norm residual is monotone in k") {
    Rng rng(51);
    const DQMatrix q = testutil::random_hermitian(5, rng);
    double prev = 1e300;
    for (Index k = 1; k <= 5; ++k) {
        const DualNumber r = f_norm(q - rank_k_approx_F(q, k).approx);
        CHECK(r.st <= prev + 1e-12);
        prev = r.st;
    }
}

TEST_CASE("rank-1 under F by power iteration") {
    const DQMatrix d = dual_diag({{5, 0}, {1, 0}});
    const RankKApprox r = rank1_approx_F(d);
    CHECK(fr_norm(r.approx - dual_diag({{5, 0}, {0, 0}})) < 1e-9);

    Rng rng(52);
    const DQVector w = normalize(random_dq_vector(4, rng));
    const DQMatrix pure = hermitize(DualNumber{3, 0.5} * outer(w, w));
    const RankKApprox rec = rank1_approx_F(pure);
    CHECK(fr_norm(rec.approx - pure) < 1e-9);
}

TEST_CASE("rank-1 F agrees with rank-k F at k = 1") {
    Rng rng(53);
    const DQMatrix q = synthesize_hermitian({{6, 1}, {2, -1}, {1, 0.5}}, rng);
    const RankKApprox a = rank1_approx_F(q);
    const RankKApprox b = rank_k_approx_F(q, 1);
    CHECK(fr_norm(a.approx - b.approx) < 1e-7);
}

TEST_CASE("rank-1 F beats random rank-1 candidates") {
    Rng rng(54);
    const DQMatrix q = testutil::random_hermitian(5, rng);
    const RankKApprox best = rank_k_approx_F(q, 1);
    const DualNumber best_res = f_norm(q - best.approx);
    for (int t = 0; t < 300; ++t) {
        const DualNumber cand_res = f_norm(q - random_rank1_hermitian(5, rng));
        CHECK(!(cand_res < best_res));
    }
}

TEST_CASE("F* rank-k with a zero dual part reduces to the F answer") {
    Rng rng(55);
    DQMatrix q = testutil::random_hermitian(4, rng);
    q.b3().setZero();
    q.b4().setZero();
    const RankKApprox fs = rank_k_approx_Fstar(q, 2);
    const RankKApprox f = rank_k_approx_F(q, 2);
    CHECK((fs.approx.b1() - f.approx.b1()).norm() < 1e-8);
    CHECK((fs.approx.b2() - f.approx.b2()).norm() < 1e-8);
    CHECK(fs.approx.b3().norm() < 1e-10);
    CHECK(fs.approx.b4().norm() < 1e-10);
}

TEST_CASE("F* rank-k projector keeps only the coupled dual entries") {
    const DQMatrix q = dual_diag({{3, 0.7}, {1, -0.4}});
    const RankKApprox r = rank_k_approx_Fstar(q, 1);
    CHECK(fr_norm(r.approx - dual_diag({{3, 0.7}, {0, 0}})) < 1e-10);
}

TEST_CASE("F* rank-k detects a missing spectral gap") {
    const DQMatrix q = dual_diag({{3, 0}, {-3, 1}, {1, 0}});
    CHECK_THROWS_AS(rank_k_approx_Fstar(q, 1), SpectralGapViolation);
    CHECK_NOTHROW(rank_k_approx_Fstar(q, 2));
}

TEST_CASE("F* rank-1 on diagonals and exact rank-1 input") {
    const DQMatrix d = dual_diag({{3, 7}, {1, 0}});
    const RankKApprox r = rank1_approx_Fstar(d);
    CHECK(fr_norm(r.approx - dual_diag({{3, 7}, {0, 0}})) < 1e-9);
    REQUIRE(r.used.size() == 1);
    CHECK(approx_eq(r.used[0].value, {3, 7}, 1e-9));

    Rng rng(56);
    const DQVector w = normalize(random_dq_vector(4, rng));
    const DQMatrix pure = hermitize(DualNumber{2, 3} * outer(w, w));
    const RankKApprox rec = rank1_approx_Fstar(pure);
    CHECK(fr_norm(rec.approx - pure) < 1e-9);
    CHECK(approx_eq(rec.used[0].value, {2, 3}, 1e-9));
}

TEST_CASE("F* rank-1 dual part matches the projector formula") {
    Rng rng(57);
    const DQMatrix q = synthesize_hermitian({{5, 1}, {2, -1}, {1, 0.3}}, rng);
    const RankKApprox r1 = rank1_approx_Fstar(q);
    const RankKApprox rk = rank_k_approx_Fstar(q, 1);
    CHECK((r1.approx.b3() - rk.approx.b3()).norm() < 1e-9);
    CHECK((r1.approx.b4() - rk.approx.b4()).norm() < 1e-9);
}

TEST_CASE("F* rank-1 beats random rank-1 candidates") {
    Rng rng(58);
    const DQMatrix q = testutil::random_hermitian(4, rng);
    const RankKApprox best = rank1_approx_Fstar(q);
    const DualNumber best_res = fstar_norm(q - best.approx);
    for (int t = 0; t < 300; ++t) {
        const DualNumber cand_res = fstar_norm(q - random_rank1_hermitian(4, rng));
        CHECK(!(cand_res < best_res));
    }
}

TEST_CASE("idempotence on exactly rank-k inputs") {
    Rng rng(59);
    const std::vector<DQVector> basis = testutil::random_orthonormal_set(4, rng);
    DQMatrix q(4, 4);
    q = q + DualNumber{4, 1} * outer(basis[0], basis[0]);
    q = q + DualNumber{-2, 0.5} * outer(basis[1], basis[1]);
    q = hermitize(q);
    CHECK(fr_norm(rank_k_approx_F(q, 2).approx - q) < 1e-9);
    CHECK(fr_norm(rank_k_approx_Fstar(q, 2).approx - q) < 1e-9);
}

TEST_CASE("outputs are Hermitian with adjoint rank 2k") {
    Rng rng(60);
    const DQMatrix q = testutil::random_hermitian(5, rng);
    for (Index k = 1; k <= 3; ++k) {
        const RankKApprox f = rank_k_approx_F(q, k);
        CHECK(is_hermitian(f.approx, 1e-10));
        CHECK(adjoint_rank(f.approx) == 2 * static_cast<int>(k));
        const RankKApprox fs = rank_k_approx_Fstar(q, k);
        CHECK(is_hermitian(fs.approx, 1e-10));
        CHECK(adjoint_rank(fs.approx) == 2 * static_cast<int>(k));
    }
}

}  // TEST_SUITE
