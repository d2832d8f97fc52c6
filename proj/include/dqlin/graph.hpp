#pragma once

#include <utility>
#include <vector>

#include "dqlin/eig.hpp"
#include "dqlin/matrix.hpp"
#include "dqlin/rng.hpp"

namespace dqlin {

/// Simple graph on vertices 0..n-1. Undirected graphs store each edge once
/// with i < j; directed graphs store ordered pairs.
struct Graph {
    int n = 0;
    bool directed = false;
    std::vector<std::pair<int, int>> edges;

    std::size_t edge_count() const { return edges.size(); }
};

/// Uniform random edge set of exactly the target size: floor(s*n^2/2) edges
/// for undirected graphs (sparsity s = 2|E|/n^2), floor(s*n*(n-1)) for
/// directed ones (observation rate s = m/(n(n-1))). Resamples up to 100 times
/// looking for a (weakly) connected graph, then keeps the last sample either
/// way; disconnected graphs are valid Laplacian inputs.
Graph random_graph(int n, double s, bool directed, Rng& rng);

bool is_connected(const Graph& g);  // weak connectivity for directed graphs

/// Laplacian L = D - A for an undirected graph, where D holds vertex degrees
/// and a_ij = q_i^* q_j on edges. Every q_i must be a unit dual quaternion.
DQMatrix build_laplacian(const Graph& g, const DQVector& q);

/// The 5x5 dual quaternion Hermitian matrix of the pentagon experiment:
/// the published unit vector table (re-projected to exact units), the
/// 5-cycle edge set, and diagonal entries i*eps for row index i = 1..5.
DQMatrix build_pentagon();

/// Mean eigenpair residual (1/n) sum ||Q u_i - lambda_i u_i||_{2^R}.
double metric_e_lambda(const DQMatrix& q, const Spectrum& spec);

}  // namespace dqlin
