#pragma once

#include "dqlin/matrix.hpp"

namespace dqlin {

struct Graph;

/// Entrywise kernels with data-parallel inner loops (OpenMP when available).
/// dqlin::reference holds the plain serial versions the tests compare against;
/// outputs are bitwise identical because every entry is computed independently.

/// Adjacency with a_ij = q_i^* q_j on the graph's edges (mirrored for
/// undirected graphs), zero elsewhere.
DQMatrix adjacency_matrix(const DQVector& q, const Graph& g);

/// Entrywise prox + unit projection of the PGO data update: for i != j
///   x_ij = P_U((d_ij q_ij + d_ji q_ji^* + rho x2_ij + rho x2_ji^*)
///              / (d_ij + d_ji + 2 rho)),
/// diagonal pinned to 1. `data` carries q_ij at observed positions (zero
/// elsewhere) and `delta` the 0/1 observation indicator.
DQMatrix pgo_data_update(const DQMatrix& data, const Eigen::MatrixXd& delta, const DQMatrix& x2,
                         double rho);

namespace reference {
DQMatrix adjacency_matrix(const DQVector& q, const Graph& g);
DQMatrix pgo_data_update(const DQMatrix& data, const Eigen::MatrixXd& delta, const DQMatrix& x2,
                         double rho);
/// Naive entrywise dual quaternion matrix product (test oracle for matmul).
DQMatrix matmul(const DQMatrix& a, const DQMatrix& b);
}  // namespace reference

}  // namespace dqlin
