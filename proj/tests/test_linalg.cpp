#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "dqlin/graph.hpp"
#include "dqlin/io.hpp"
#include "dqlin/kernels.hpp"
#include "dqlin/matrix.hpp"
#include "util.hpp"

using namespace dqlin;
using testutil::random_dq_matrix;
using testutil::random_dq_vector;

TEST_SUITE("linalg") {

TEST_CASE("matmul basics") {
    Rng rng(10);
    const DQMatrix a = random_dq_matrix(3, 3, rng);
    CHECK(fr_norm(matmul(DQMatrix::identity(3), a) - a) < 1e-14);
    const DQMatrix zero(3, 3);
    CHECK(fr_norm(matmul(a, zero)) == 0.0);
    // eps-scaled factors annihilate
    DQMatrix ea(3, 3), eb(3, 3);
    ea.b3() = a.b1();
    eb.b4() = a.b2();
    CHECK(fr_norm(matmul(ea, eb)) == 0.0);
    CHECK_THROWS_AS(matmul(a, random_dq_matrix(2, 2, rng)), DimensionMismatch);
}

TEST_CASE("matmul agrees with the naive reference") {
    Rng rng(11);
    const DQMatrix a = random_dq_matrix(4, 3, rng);
    const DQMatrix b = random_dq_matrix(3, 5, rng);
    CHECK(fr_norm(matmul(a, b) - reference::matmul(a, b)) < 1e-12);
}

TEST_CASE("conjugate transpose") {
    Rng rng(12);
    const DQMatrix a = random_dq_matrix(3, 3, rng);
    const DQMatrix b = random_dq_matrix(3, 3, rng);
    CHECK(fr_norm(DQMatrix::identity(3).conj_transpose() - DQMatrix::identity(3)) == 0.0);
    CHECK(fr_norm(a.conj_transpose().conj_transpose() - a) == 0.0);
    CHECK(fr_norm(matmul(a, b).conj_transpose() -
                  matmul(b.conj_transpose(), a.conj_transpose())) < 1e-12);
}

TEST_CASE("vector norms") {
    DQVector e(2);
    e.set(0, DualQuaternion::one());
    CHECK(two_norm(e) == DualNumber{1, 0});

    DQVector d(2);
    d.set(0, DualQuaternion{{}, {0, 1, 0, 0}});
    CHECK(two_norm(d) == DualNumber{0, 1});

    DQVector m(2);
    m.set(0, DualQuaternion{{1}});
    m.set(1, DualQuaternion{{}, {1}});
    CHECK(two_r_norm(m) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("matrix norms") {
    const DQMatrix id = DQMatrix::identity(2);
    CHECK(f_norm(id) == DualNumber{std::sqrt(2.0), 0});

    DQMatrix both = id;
    both.b3() = CMat::Identity(2, 2);
    CHECK(fr_norm(both) == doctest::Approx(2.0));
    // dual part: sc(tr(I I)) / ||I||_F = 2 / sqrt(2)
    const DualNumber f = f_norm(both);
    CHECK(f.st == doctest::Approx(std::sqrt(2.0)));
    CHECK(f.du == doctest::Approx(std::sqrt(2.0)));

    const DualNumber fs = fstar_norm(both);
    CHECK(fs.st == doctest::Approx(std::sqrt(2.0)));
    CHECK(fs.du == doctest::Approx(2.0 / (2.0 * std::sqrt(2.0))));

    DQMatrix pure(2, 2);
    pure.b3() = CMat::Identity(2, 2);
    CHECK(f_norm(pure) == DualNumber{0, std::sqrt(2.0)});

    CHECK(fr_norm(DQMatrix(0, 0)) == 0.0);
}

TEST_CASE("normalization") {
    DQVector x(2);
    x.set(0, DualQuaternion{{2}});
    DQVector u = normalize(x);
    CHECK(approx_eq(two_norm(u), {1, 0}, 1e-15));
    CHECK(u(0).st == Quaternion{1});

    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        const DQVector v = random_dq_vector(4, rng);
        const DQVector n = normalize(v);
        CHECK(approx_eq(two_norm(n), {1, 0}, 1e-12));
        // fixed point
        CHECK(two_r_norm(normalize(n) - n) < 1e-12);
    }
    CHECK_THROWS_AS(normalize(DQVector(3)), ZeroVector);
}

TEST_CASE("normalization minimizes the 2-norm distance") {
    Rng rng(14);
    const DQVector x = random_dq_vector(3, rng);
    const DQVector u = normalize(x);
    const DualQuaternion du = inner(u - x, u - x);
    const DualNumber best{du.st.scalar_part(), du.du.scalar_part()};
    for (int t = 0; t < 500; ++t) {
        const DQVector v = normalize(random_dq_vector(3, rng));
        const DualQuaternion dv = inner(v - x, v - x);
        const DualNumber dist{dv.st.scalar_part(), dv.du.scalar_part()};
        CHECK(!(dist < best));
    }
}

TEST_CASE("hermitian checks") {
    CHECK(is_hermitian(DQMatrix::identity(3)));
    DQMatrix skew(2, 2);
    skew.set(0, 1, DualQuaternion{{0, 1, 0, 0}});
    skew.set(1, 0, DualQuaternion{{0, -1, 0, 0}});
    CHECK(is_hermitian(skew));  // i and -i pair is Hermitian in quaternion sense
    DQMatrix bad(2, 2);
    bad.set(0, 1, DualQuaternion{{0, 1, 0, 0}});
    bad.set(1, 0, DualQuaternion{{0, 1, 0, 0}});
    CHECK(!is_hermitian(bad));
    CHECK_THROWS_AS(is_hermitian(DQMatrix(2, 3)), NotSquare);
}

TEST_CASE("FR-norm submultiplicativity bound") {
    Rng rng(15);
    for (int t = 0; t < 50; ++t) {
        const DQMatrix a = random_dq_matrix(4, 4, rng);
        const DQMatrix b = random_dq_matrix(4, 4, rng);
        CHECK(fr_norm(matmul(a, b)) <= 2.0 * fr_norm(a) * fr_norm(b) + 1e-12);
    }
}

TEST_CASE("text serialization round-trip") {
    Rng rng(16);
    const DQMatrix a = random_dq_matrix(3, 4, rng);
    const std::string path = "linalg_roundtrip.dqm";
    save_matrix(a, path);
    const DQMatrix b = load_matrix(path);
    CHECK(fr_norm(a - b) == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("matrix loader rejects incomplete files") {
    const std::string path = "linalg_partial.dqm";
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fprintf(f, "# dqmatrix 2 2\n1 1  1 0  0 0  0 0  0 0\n");
    std::fclose(f);
    CHECK_THROWS_AS(load_matrix(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("kernels match their serial references bitwise") {
    Rng rng(17);
    const DQVector q = random_unit_dq_vector(12, rng);
    Graph g{12, false, {}};
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            if (rng.uniform() < 0.4) g.edges.emplace_back(i, j);
    CHECK(fr_norm(adjacency_matrix(q, g) - reference::adjacency_matrix(q, g)) == 0.0);

    DQMatrix data(12, 12);
    Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(12, 12);
    for (const auto& [i, j] : g.edges) {
        data.set(i, j, q(i) * q(j).conj());
        delta(i, j) = 1.0;
    }
    const DQMatrix x2 = outer(q, q);
    CHECK(fr_norm(pgo_data_update(data, delta, x2, 0.01) -
                  reference::pgo_data_update(data, delta, x2, 0.01)) == 0.0);
}

}  // TEST_SUITE
