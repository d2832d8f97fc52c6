// Timing comparison of the OpenMP entrywise kernels against their serial
// reference implementations, plus the block matmul against the naive one.

#include <chrono>
#include <cstdio>
#include <functional>

#include "dqlin/graph.hpp"
#include "dqlin/kernels.hpp"
#include "dqlin/pgo.hpp"
#include "dqlin/sampling.hpp"

using namespace dqlin;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        best = std::min(best, dt);
    }
    return best;
}

void report(const char* name, int n, double serial, double parallel) {
    std::printf("%-22s n=%4d   serial %10.3e s   parallel %10.3e s   speedup %.2fx\n", name, n,
                serial, parallel, serial / parallel);
}

}  // namespace

int main() {
    for (int n : {50, 100, 200, 400}) {
        Rng rng(7);
        const DQVector q = random_unit_dq_vector(n, rng);
        const Graph g = random_graph(n, 0.4, true, rng);

        DQMatrix data(n, n);
        Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(n, n);
        for (const auto& [i, j] : g.edges) {
            data.set(i, j, q(i) * q(j).conj());
            delta(i, j) = 1.0;
        }
        const DQMatrix x2 = outer(q, q);

        report("pgo_data_update", n,
               time_best_of(5, [&] { (void)reference::pgo_data_update(data, delta, x2, 0.01); }),
               time_best_of(5, [&] { (void)pgo_data_update(data, delta, x2, 0.01); }));

        Graph full{n, false, {}};
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) full.edges.emplace_back(i, j);
        report("adjacency_matrix", n,
               time_best_of(5, [&] { (void)reference::adjacency_matrix(q, full); }),
               time_best_of(5, [&] { (void)adjacency_matrix(q, full); }));
    }

    for (int n : {50, 100, 200}) {
        Rng rng(11);
        const DQVector a = random_unit_dq_vector(n, rng);
        const DQVector b = random_unit_dq_vector(n, rng);
        const DQMatrix ma = outer(a, b);
        const DQMatrix mb = outer(b, a);
        const double naive = time_best_of(3, [&] { (void)reference::matmul(ma, mb); });
        const double block = time_best_of(3, [&] { (void)matmul(ma, mb); });
        std::printf("%-22s n=%4d   naive  %10.3e s   blocked  %10.3e s   speedup %.2fx\n",
                    "matmul", n, naive, block, naive / block);
    }
    return 0;
}
