#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dqlin/eig.hpp"
#include "dqlin/graph.hpp"
#include "dqlin/matrix.hpp"
#include "dqlin/rng.hpp"

namespace dqlin {

/// A pose graph problem: relative unit dual quaternion measurements on the
/// edges of a directed graph, optionally with the generating ground truth.
struct PGOInstance {
    Graph graph;                                // directed
    std::vector<DualQuaternion> observations;   // parallel to graph.edges
    std::optional<DQVector> ground_truth;       // unit dual quaternion poses
    double noise_level = 0.0;                   // realized relative noise
    double observation_rate = 0.0;              // m / (n (n-1))
};

enum class PGOVariant { DEMP, DEMP1, DBDEMP, DBDEMP1 };

const char* variant_name(PGOVariant v);
std::optional<PGOVariant> parse_variant(const std::string& name);

struct PGOConfig {
    double rho0 = 0.01;
    double rho1 = 1.0;      // 1.1 for DEMP
    int k_max = 200;
    double beta = 1e-6;
    int window = 2;         // stagnation window d (DEMP1/DBDEMP/DBDEMP1)
    PGOVariant variant = PGOVariant::DBDEMP;
    PowerConfig inner{20000, 1e-12};
};

/// Parameter choices used throughout the experiments for a given variant.
PGOConfig default_pgo_config(PGOVariant v);

enum class PGOStop { ResidualTol, Stagnation, MaxIters };

struct PGOResult {
    DQMatrix x1, x2;
    int iterations = 0;
    std::vector<double> residual_history;  // R^(k) = ||X1 - X2||_FR
    std::vector<double> rho_history;
    PGOStop stop = PGOStop::MaxIters;
    std::optional<double> e_q;
    bool success = false;
};

/// Draws ground truth poses, a directed graph at rate s, and observations
/// q_ij = x_i x_j^*; for l_noise > 0 the observations are perturbed and
/// re-projected to units, with the perturbation scale calibrated by bisection
/// so the realized relative noise lands within 5% of the request.
PGOInstance make_pgo_instance(int n, double s, double l_noise, Rng& rng);

/// Block-coordinate iteration: entrywise data update for X1, rank-one
/// eigenvalue update for X2 (the variant picks the eigen-solver), geometric
/// penalty growth, residual and stagnation stopping rules.
PGOResult pgo_solve(const PGOInstance& inst, const PGOConfig& cfg);

/// Relative recovery error ||Q0 - X2||_FR / ||Q0||_FR against the instance's
/// ground truth Gram matrix Q0 = x x^*.
double metric_e_q(const PGOInstance& inst, const DQMatrix& x2);

/// Realized relative noise ||Q - P_E(Q0)||_FR / ||P_E(Q0)||_FR of a set of
/// observations against the clean ones.
double relative_noise(const std::vector<DualQuaternion>& noisy,
                      const std::vector<DualQuaternion>& clean);

// instance files: `# pgo n=<n> s=<s> noise=<l>` header, one observation per
// line `i j  sw sx sy sz  dw dx dy dz` (1-based endpoints), optional
// `gt i  ...` ground truth lines
void save_instance(const PGOInstance& inst, const std::string& path);
PGOInstance load_instance(const std::string& path);

}  // namespace dqlin
