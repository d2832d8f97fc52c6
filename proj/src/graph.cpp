#include "dqlin/graph.hpp"

#include <cmath>
#include <numeric>

#include "dqlin/errors.hpp"
#include "dqlin/kernels.hpp"

namespace dqlin {

namespace {

Graph sample_graph(int n, std::size_t target, bool directed, Rng& rng) {
    std::vector<std::pair<int, int>> all;
    all.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = directed ? 0 : i + 1; j < n; ++j)
            if (i != j) all.emplace_back(i, j);
    // partial Fisher-Yates: the first `target` slots become the sample
    for (std::size_t k = 0; k < target; ++k) {
        const std::size_t pick = k + rng.below(all.size() - k);
        std::swap(all[k], all[pick]);
    }
    all.resize(target);
    return {n, directed, std::move(all)};
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

Graph random_graph(int n, double s, bool directed, Rng& rng) {
    if (n < 1 || s <= 0.0 || s > 1.0) throw InfeasibleCount("random_graph: need n >= 1, 0 < s <= 1");
    const std::size_t max_edges =
        directed ? static_cast<std::size_t>(n) * (n - 1) : static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t target =
        directed ? static_cast<std::size_t>(std::floor(s * n * (n - 1)))
                 : static_cast<std::size_t>(std::floor(s * n * n / 2.0));
    if (target > max_edges) throw InfeasibleCount("random_graph: target edge count infeasible");

    Graph g = sample_graph(n, target, directed, rng);
    for (int attempt = 0; attempt < 100 && !is_connected(g); ++attempt)
        g = sample_graph(n, target, directed, rng);
    return g;
}

DQMatrix build_laplacian(const Graph& g, const DQVector& q) {
    if (g.directed) throw DimensionMismatch("build_laplacian: graph must be undirected");
    if (q.size() != g.n) throw DimensionMismatch("build_laplacian: vertex count mismatch");
    for (Index i = 0; i < q.size(); ++i)
        if (!q(i).is_unit(1e-10)) throw NonUnitEntry("build_laplacian: q entries must be unit");

    DQMatrix lap = adjacency_matrix(q, g);
    lap = -1.0 * lap;
    std::vector<int> degree(g.n, 0);
    for (const auto& [i, j] : g.edges) {
        ++degree[i];
        ++degree[j];
    }
    for (int i = 0; i < g.n; ++i) lap.b1()(i, i) += static_cast<double>(degree[i]);
    return lap;
}

DQMatrix build_pentagon() {
    // published table, standard and dual quaternion coefficients per vertex
    static const double qst[5][4] = {{-0.5103, -0.2661, -0.2632, -0.7743},
                                     {0.2881, -0.6705, -0.2305, -0.6437},
                                     {-0.1236, 0.1789, -0.7519, -0.6223},
                                     {-0.5605, -0.2485, -0.6001, -0.5138},
                                     {-0.5946, -0.1002, -0.2584, -0.7547}};
    static const double qdu[5][4] = {{0.2645, -0.4286, 0.4180, -0.1691},
                                     {-0.3885, -0.5378, 0.2295, 0.3042},
                                     {-0.9227, -0.9461, 0.1770, -0.3027},
                                     {-0.2963, -0.3621, 0.6937, -0.3117},
                                     {-0.2488, 0.2520, 0.0635, 0.1408}};
    std::vector<DualQuaternion> q(5);
    for (int i = 0; i < 5; ++i) {
        const DualQuaternion raw{{qst[i][0], qst[i][1], qst[i][2], qst[i][3]},
                                 {qdu[i][0], qdu[i][1], qdu[i][2], qdu[i][3]}};
        q[i] = unit_project(raw);  // the table is a 4-decimal print of unit values
    }
    DQMatrix p(5, 5);
    const int cycle[5][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    for (const auto& e : cycle) {
        const DualQuaternion a = q[e[0]].conj() * q[e[1]];
        p.set(e[0], e[1], a);
        p.set(e[1], e[0], a.conj());
    }
    for (int i = 0; i < 5; ++i)
        p.set(i, i, DualQuaternion{{}, {static_cast<double>(i + 1), 0, 0, 0}});
    return p;
}

double metric_e_lambda(const DQMatrix& q, const Spectrum& spec) {
    if (spec.size() != static_cast<std::size_t>(q.rows()))
        throw LengthMismatch("metric_e_lambda: spectrum size must equal the dimension");
    double total = 0.0;
    for (const auto& pair : spec.pairs)
        total += two_r_norm(matvec(q, pair.vector) - pair.value * pair.vector);
    return total / static_cast<double>(spec.size());
}

}  // namespace dqlin
