#include <doctest.h>

#include "dqlin/adjoint.hpp"
#include "util.hpp"

using namespace dqlin;
using testutil::random_dq_matrix;
using testutil::random_dq_vector;

namespace {

/// Quaternion vector v * j, entrywise right multiplication.
DQVector times_j(const DQVector& v) {
    DQVector out(v.size());
    const DualQuaternion j{{0, 0, 1, 0}};
    for (Index i = 0; i < v.size(); ++i) out.set(i, v(i) * j);
    return out;
}

double dc_dist(const DCVector& a, const DCVector& b) { return two_r_norm(a - b); }

}  // namespace

TEST_SUITE("adjoint") {

TEST_CASE("J on zero and identity") {
    const AdjointMatrix z = to_adjoint(DQMatrix(2, 3));
    CHECK(fr_norm(z.dc) == 0.0);
    CHECK(z.dc.rows() == 4);
    CHECK(z.dc.cols() == 6);
    const AdjointMatrix id = to_adjoint(DQMatrix::identity(3));
    CHECK((id.dc.st - CMat::Identity(6, 6)).norm() == 0.0);
    CHECK(id.dc.du.norm() == 0.0);
}

TEST_CASE("J of j*I_1 is the elementary rotation block") {
    DQMatrix q(1, 1);
    q.set(0, 0, DualQuaternion{{0, 0, 1, 0}});
    const AdjointMatrix a = to_adjoint(q);
    CMat expected(2, 2);
    expected << 0, 1, -1, 0;
    CHECK((a.dc.st - expected).norm() == 0.0);
}

TEST_CASE("round trips are exact") {
    Rng rng(20);
    const DQMatrix q = random_dq_matrix(3, 4, rng);
    CHECK(fr_norm(from_adjoint(to_adjoint(q)) - q) == 0.0);
    CHECK(fr_norm(from_adjoint(to_adjoint(DQMatrix::identity(4)).dc) - DQMatrix::identity(4)) ==
          0.0);

    const DQVector v = random_dq_vector(5, rng);
    CHECK(two_r_norm(vec_from_adjoint(vec_to_adjoint(v)) - v) == 0.0);
}

TEST_CASE("vector maps reject odd lengths") {
    DCVector odd(3);
    odd.st(0) = 1.0;
    CHECK_THROWS_AS(vec_from_adjoint(odd), OddLength);
    CHECK_THROWS_AS(swap_map(odd), OddLength);
}

TEST_CASE("from_adjoint rejects unstructured input") {
    Rng rng(21);
    DCMatrix p(4, 4);
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j) {
            p.st(i, j) = {rng.normal(), rng.normal()};
            p.du(i, j) = {rng.normal(), rng.normal()};
        }
    CHECK_THROWS_AS(from_adjoint(p), NotAdjointStructured);
    CHECK_THROWS_AS(from_adjoint(DCMatrix(3, 3)), NotAdjointStructured);
}

TEST_CASE("F maps the canonical examples") {
    DQVector one(1);
    one.set(0, DualQuaternion::one());
    const DCVector f1 = vec_to_adjoint(one);
    CHECK(f1.st(0) == std::complex<double>(1, 0));
    CHECK(f1.st(1) == std::complex<double>(0, 0));

    DQVector jv(1);
    jv.set(0, DualQuaternion{{0, 0, 1, 0}});
    const DCVector fj = vec_to_adjoint(jv);
    CHECK(fj.st(0) == std::complex<double>(0, 0));
    CHECK(fj.st(1) == std::complex<double>(-1, 0));

    CHECK(two_r_norm(vec_from_adjoint(fj) - jv) == 0.0);
    DCVector eps(2);
    eps.du(0) = 1.0;
    const DQVector back = vec_from_adjoint(eps);
    CHECK(back(0).du == Quaternion{1});
}

TEST_CASE("H is the eigenvector pairing map") {
    Rng rng(22);
    for (int t = 0; t < 100; ++t) {
        const DQVector v = random_dq_vector(4, rng);
        CHECK(dc_dist(swap_map(vec_to_adjoint(v)), vec_to_adjoint(times_j(v))) == 0.0);
        const DCVector u = vec_to_adjoint(v);
        CHECK(dc_dist(swap_map(swap_map(u)), -u) == 0.0);
    }
    DCVector e1(2);
    e1.st(0) = 1.0;
    const DCVector h = swap_map(e1);
    CHECK(h.st(0) == std::complex<double>(0, 0));
    CHECK(h.st(1) == std::complex<double>(-1, 0));
}

TEST_CASE("ring homomorphism") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        const DQMatrix p = random_dq_matrix(4, 4, rng);
        const DQMatrix p1 = random_dq_matrix(4, 4, rng);
        const DQMatrix q = random_dq_matrix(4, 4, rng);

        const DCMatrix lhs = to_adjoint(matmul(p, q)).dc;
        const DCMatrix rhs = to_adjoint(p).dc * to_adjoint(q).dc;
        CHECK(fr_norm(lhs - rhs) <= 1e-12 * std::max(1.0, fr_norm(rhs)));

        const DCMatrix sl = to_adjoint(p + p1).dc;
        const DCMatrix sr = to_adjoint(p).dc + to_adjoint(p1).dc;
        CHECK(fr_norm(sl - sr) == 0.0);

        // star preservation is exact
        const DCMatrix stl = to_adjoint(p.conj_transpose()).dc;
        const DCMatrix str = to_adjoint(p).dc.adjoint();
        CHECK(fr_norm(stl - str) == 0.0);
    }
}

TEST_CASE("hermitian and unitary transfer") {
    Rng rng(24);
    const DQMatrix h = testutil::random_hermitian(4, rng);
    CHECK(is_hermitian(h));
    CHECK(is_hermitian(to_adjoint(h).dc));

    // unitary built from an orthonormal set of columns
    const std::vector<DQVector> basis = testutil::random_orthonormal_set(4, rng);
    DQMatrix u(4, 4);
    for (Index j = 0; j < 4; ++j)
        for (Index i = 0; i < 4; ++i) u.set(i, j, basis[j](i));
    CHECK(fr_norm(matmul(u.conj_transpose(), u) - DQMatrix::identity(4)) < 1e-10);
    const DCMatrix ju = to_adjoint(u).dc;
    const DCMatrix gram = ju.adjoint() * ju;
    CHECK(fr_norm(gram - DCMatrix::identity(8)) < 1e-10);
}

TEST_CASE("norm identities of the adjoint image") {
    Rng rng(25);
    for (int t = 0; t < 20; ++t) {
        const DQMatrix q = random_dq_matrix(3, 3, rng);
        const DCMatrix p = to_adjoint(q).dc;

        const DualNumber lhs_f = f_norm(p) * f_norm(p);
        const DualNumber rhs_f = 2.0 * (f_norm(q) * f_norm(q));
        CHECK(std::abs(lhs_f.st - rhs_f.st) <= 1e-12 * std::max(1.0, std::abs(rhs_f.st)));
        CHECK(std::abs(lhs_f.du - rhs_f.du) <= 1e-12 * std::max(1.0, std::abs(rhs_f.du)));

        const DualNumber lhs_s = fstar_norm(p) * fstar_norm(p);
        const DualNumber rhs_s = 2.0 * (fstar_norm(q) * fstar_norm(q));
        CHECK(std::abs(lhs_s.st - rhs_s.st) <= 1e-12 * std::max(1.0, std::abs(rhs_s.st)));
        CHECK(std::abs(lhs_s.du - rhs_s.du) <= 1e-12 * std::max(1.0, std::abs(rhs_s.du)));
    }
}

TEST_CASE("F(v) and F(vj) are orthogonal") {
    Rng rng(26);
    for (int t = 0; t < 50; ++t) {
        const DQVector v = random_dq_vector(4, rng);
        const DualComplex ip = inner(vec_to_adjoint(v), vec_to_adjoint(times_j(v)));
        CHECK(std::abs(ip.st) < 1e-14 * std::max(1.0, two_r_norm(vec_to_adjoint(v))));
        CHECK(std::abs(ip.du) < 1e-13 * std::max(1.0, two_r_norm(vec_to_adjoint(v))));
    }
}

}  // TEST_SUITE
