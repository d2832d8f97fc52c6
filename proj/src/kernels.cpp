#include "dqlin/kernels.hpp"

#include "dqlin/errors.hpp"
#include "dqlin/graph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dqlin {

namespace {

inline void fill_edge(DQMatrix& out, const DQVector& q, int i, int j, bool mirror) {
    const DualQuaternion a = q(i).conj() * q(j);
    out.set(i, j, a);
    if (mirror) out.set(j, i, a.conj());
}

inline DualQuaternion data_entry(const DQMatrix& data, const Eigen::MatrixXd& delta,
                                 const DQMatrix& x2, double rho, Index i, Index j) {
    const DualQuaternion numer = data(i, j) + data(j, i).conj() + rho * x2(i, j) +
                                 rho * x2(j, i).conj();
    const double denom = delta(i, j) + delta(j, i) + 2.0 * rho;
    const DualQuaternion scaled = (1.0 / denom) * numer;
    if (scaled.is_zero()) return DualQuaternion::one();
    return unit_project(scaled);
}

}  // namespace

DQMatrix adjacency_matrix(const DQVector& q, const Graph& g) {
    if (q.size() != g.n) throw DimensionMismatch("adjacency_matrix: vertex count mismatch");
    DQMatrix out(g.n, g.n);
    const auto m = static_cast<std::ptrdiff_t>(g.edges.size());
    const bool mirror = !g.directed;
#pragma omp parallel for schedule(static) if (m > 256)
    for (std::ptrdiff_t e = 0; e < m; ++e)
        fill_edge(out, q, g.edges[e].first, g.edges[e].second, mirror);
    return out;
}

DQMatrix pgo_data_update(const DQMatrix& data, const Eigen::MatrixXd& delta, const DQMatrix& x2,
                         double rho) {
    const Index n = data.rows();
    DQMatrix out(n, n);
#pragma omp parallel for schedule(static) if (n > 16)
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            out.set(i, j, i == j ? DualQuaternion::one() : data_entry(data, delta, x2, rho, i, j));
    return out;
}

namespace reference {

DQMatrix adjacency_matrix(const DQVector& q, const Graph& g) {
    if (q.size() != g.n) throw DimensionMismatch("adjacency_matrix: vertex count mismatch");
    DQMatrix out(g.n, g.n);
    for (const auto& [i, j] : g.edges) fill_edge(out, q, i, j, !g.directed);
    return out;
}

DQMatrix pgo_data_update(const DQMatrix& data, const Eigen::MatrixXd& delta, const DQMatrix& x2,
                         double rho) {
    const Index n = data.rows();
    DQMatrix out(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            out.set(i, j, i == j ? DualQuaternion::one() : data_entry(data, delta, x2, rho, i, j));
    return out;
}

DQMatrix matmul(const DQMatrix& a, const DQMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions disagree");
    DQMatrix out(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < b.cols(); ++j) {
            DualQuaternion acc;
            for (Index k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
            out.set(i, j, acc);
        }
    return out;
}

}  // namespace reference

}  // namespace dqlin
