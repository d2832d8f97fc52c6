#include "dqlin/pgo.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dqlin/errors.hpp"
#include "dqlin/kernels.hpp"
#include "dqlin/lowrank.hpp"
#include "dqlin/sampling.hpp"

namespace dqlin {

const char* variant_name(PGOVariant v) {
    switch (v) {
        case PGOVariant::DEMP: return "demp";
        case PGOVariant::DEMP1: return "demp1";
        case PGOVariant::DBDEMP: return "dbdemp";
        case PGOVariant::DBDEMP1: return "dbdemp1";
    }
    return "?";
}

std::optional<PGOVariant> parse_variant(const std::string& name) {
    if (name == "demp") return PGOVariant::DEMP;
    if (name == "demp1") return PGOVariant::DEMP1;
    if (name == "dbdemp") return PGOVariant::DBDEMP;
    if (name == "dbdemp1") return PGOVariant::DBDEMP1;
    return std::nullopt;
}

PGOConfig default_pgo_config(PGOVariant v) {
    PGOConfig cfg;
    cfg.variant = v;
    cfg.rho1 = (v == PGOVariant::DEMP) ? 1.1 : 1.0;
    return cfg;
}

double relative_noise(const std::vector<DualQuaternion>& noisy,
                      const std::vector<DualQuaternion>& clean) {
    if (noisy.size() != clean.size()) throw DimensionMismatch("relative_noise: size mismatch");
    double diff = 0.0, base = 0.0;
    for (std::size_t e = 0; e < clean.size(); ++e) {
        const DualQuaternion d = noisy[e] - clean[e];
        diff += d.st.norm_squared() + d.du.norm_squared();
        base += clean[e].st.norm_squared() + clean[e].du.norm_squared();
    }
    return std::sqrt(diff) / std::sqrt(base);
}

PGOInstance make_pgo_instance(int n, double s, double l_noise, Rng& rng) {
    if (l_noise < 0.0) throw CalibrationFailure("make_pgo_instance: negative noise level");
    PGOInstance inst;
    inst.ground_truth = random_unit_dq_vector(n, rng);
    inst.graph = random_graph(n, s, /*directed=*/true, rng);
    inst.observation_rate = static_cast<double>(inst.graph.edge_count()) /
                            (static_cast<double>(n) * (n - 1));

    const DQVector& x = *inst.ground_truth;
    std::vector<DualQuaternion> clean;
    clean.reserve(inst.graph.edge_count());
    for (const auto& [i, j] : inst.graph.edges) clean.push_back(x(i) * x(j).conj());

    if (l_noise == 0.0) {
        inst.observations = clean;
        inst.noise_level = 0.0;
        return inst;
    }

    // fixed noise directions, then bisection on the scale
    std::vector<DualQuaternion> dirs;
    dirs.reserve(clean.size());
    for (std::size_t e = 0; e < clean.size(); ++e) dirs.push_back(random_dq(rng));

    auto perturb = [&](double sigma) {
        std::vector<DualQuaternion> out(clean.size());
        const auto m = static_cast<std::ptrdiff_t>(clean.size());
#pragma omp parallel for schedule(static) if (m > 256)
        for (std::ptrdiff_t e = 0; e < m; ++e) out[e] = unit_project(clean[e] + sigma * dirs[e]);
        return out;
    };

    double lo = 0.0, hi = l_noise;
    double realized_hi = relative_noise(perturb(hi), clean);
    int doublings = 0;
    while (realized_hi < l_noise) {
        hi *= 2.0;
        realized_hi = relative_noise(perturb(hi), clean);
        if (++doublings > 60)
            throw CalibrationFailure("make_pgo_instance: cannot bracket the noise target");
    }

    std::vector<DualQuaternion> current = perturb(hi);
    double realized = realized_hi;
    for (int step = 0; step < 30 && std::abs(realized - l_noise) > 0.05 * l_noise; ++step) {
        const double mid = 0.5 * (lo + hi);
        current = perturb(mid);
        realized = relative_noise(current, clean);
        if (realized < l_noise)
            lo = mid;
        else
            hi = mid;
    }
    if (std::abs(realized - l_noise) > 0.05 * l_noise)
        throw CalibrationFailure("make_pgo_instance: noise calibration missed the 5% window");

    inst.observations = std::move(current);
    inst.noise_level = realized;
    return inst;
}

double metric_e_q(const PGOInstance& inst, const DQMatrix& x2) {
    if (!inst.ground_truth) throw NoGroundTruth("metric_e_q: instance has no ground truth");
    const DQMatrix q0 = outer(*inst.ground_truth, *inst.ground_truth);
    return fr_norm(q0 - x2) / fr_norm(q0);
}

namespace {

struct PackedData {
    DQMatrix data;          // q_ij at observed positions
    Eigen::MatrixXd delta;  // observation indicator
};

PackedData pack_observations(const PGOInstance& inst) {
    const int n = inst.graph.n;
    PackedData out{DQMatrix(n, n), Eigen::MatrixXd::Zero(n, n)};
    for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
        const auto& [i, j] = inst.graph.edges[e];
        out.data.set(i, j, inst.observations[e]);
        out.delta(i, j) = 1.0;
    }
    return out;
}

/// Dominant rank-one update X2 = lambda u u^* per variant; warm is the
/// previous eigenvector (empty on the first iteration).
DQMatrix rank_one_update(const DQMatrix& x1, const PGOConfig& cfg, DQVector& warm) {
    const Index n = x1.rows();
    const DQVector start = warm.size() == n ? warm : default_start_vector(n);
    switch (cfg.variant) {
        case PGOVariant::DEMP:
        case PGOVariant::DEMP1: {
            const DualEigenPair top = power_method(x1, start, cfg.inner);
            warm = top.vector;
            return hermitize(top.value * outer(top.vector, top.vector));
        }
        case PGOVariant::DBDEMP: {
            const DualEigenPair top = power_method_adjoint(x1, start, cfg.inner);
            warm = top.vector;
            return hermitize(top.value * outer(top.vector, top.vector));
        }
        case PGOVariant::DBDEMP1: {
            RankKApprox approx =
                rank1_approx_Fstar(x1, cfg.inner, warm.size() == n ? &warm : nullptr);
            warm = approx.used.front().vector;
            return std::move(approx.approx);
        }
    }
    throw Error("rank_one_update: unknown variant");
}

}  // namespace

PGOResult pgo_solve(const PGOInstance& inst, const PGOConfig& cfg) {
    const Index n = inst.graph.n;
    const PackedData packed = pack_observations(inst);

    // deterministic, gauge-neutral start: X2 = x0 x0^* for the scaled all-one
    // vector, X1 the same with the diagonal pinned
    const DQVector x0 = default_start_vector(n);
    DQMatrix x2 = outer(x0, x0);
    DQMatrix x1 = x2;
    for (Index i = 0; i < n; ++i) x1.set(i, i, DualQuaternion::one());

    PGOResult res;
    double rho = cfg.rho0;
    DQVector warm;
    const bool stagnation_rule = cfg.variant != PGOVariant::DEMP;

    for (int k = 1; k <= cfg.k_max; ++k) {
        x1 = pgo_data_update(packed.data, packed.delta, x2, rho);
        x2 = rank_one_update(x1, cfg, warm);
        rho *= cfg.rho1;

        const double r = fr_norm(x1 - x2);
        res.residual_history.push_back(r);
        res.rho_history.push_back(rho);
        res.iterations = k;

        if (r <= cfg.beta) {
            res.stop = PGOStop::ResidualTol;
            break;
        }
        if (stagnation_rule && k >= cfg.window + 1) {
            double spread = 0.0;
            for (int a = k - cfg.window; a < k; ++a)
                for (int b = a + 1; b <= k; ++b)
                    spread = std::max(spread, std::abs(res.residual_history[a - 1] -
                                                       res.residual_history[b - 1]));
            if (spread <= cfg.beta) {
                res.stop = PGOStop::Stagnation;
                break;
            }
        }
    }

    res.x1 = std::move(x1);
    res.x2 = std::move(x2);
    if (inst.ground_truth) {
        res.e_q = metric_e_q(inst, res.x2);
        res.success = *res.e_q <= std::max(inst.noise_level, 1e-5);
    }
    return res;
}

// ---- instance files ------------------------------------------------------

namespace {

void write_dq(std::FILE* f, const DualQuaternion& q) {
    std::fprintf(f, "%.17g %.17g %.17g %.17g  %.17g %.17g %.17g %.17g", q.st.w, q.st.x, q.st.y,
                 q.st.z, q.du.w, q.du.x, q.du.y, q.du.z);
}

}  // namespace

void save_instance(const PGOInstance& inst, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw Error("save_instance: cannot open " + path);
    std::fprintf(f, "# pgo n=%d s=%.17g noise=%.17g\n", inst.graph.n, inst.observation_rate,
                 inst.noise_level);
    for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
        const auto& [i, j] = inst.graph.edges[e];
        std::fprintf(f, "%d %d  ", i + 1, j + 1);
        write_dq(f, inst.observations[e]);
        std::fprintf(f, "\n");
    }
    if (inst.ground_truth)
        for (Index i = 0; i < inst.ground_truth->size(); ++i) {
            std::fprintf(f, "gt %lld  ", static_cast<long long>(i + 1));
            write_dq(f, (*inst.ground_truth)(i));
            std::fprintf(f, "\n");
        }
    std::fclose(f);
}

PGOInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_instance: cannot open " + path, 0);
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError("load_instance: empty file", 0);
    ++line_no;
    int n = 0;
    double s = 0.0, noise = 0.0;
    if (std::sscanf(line.c_str(), "# pgo n=%d s=%lf noise=%lf", &n, &s, &noise) != 3 || n < 1)
        throw ParseError("load_instance: malformed header", line_no);

    PGOInstance inst;
    inst.graph.n = n;
    inst.graph.directed = true;
    inst.noise_level = noise;
    DQVector gt(n);
    std::vector<char> have_gt(n, 0);
    std::vector<char> seen_edge(static_cast<std::size_t>(n) * n, 0);
    bool any_gt = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string first;
        ss >> first;
        double c[8];
        if (first == "gt") {
            long long i = 0;
            ss >> i;
            for (double& v : c) ss >> v;
            if (!ss || i < 1 || i > n)
                throw ParseError("load_instance: malformed ground truth line", line_no);
            gt.set(i - 1, {{c[0], c[1], c[2], c[3]}, {c[4], c[5], c[6], c[7]}});
            have_gt[i - 1] = 1;
            any_gt = true;
            continue;
        }
        long long i = 0, j = 0;
        std::istringstream es(line);
        es >> i >> j;
        for (double& v : c) es >> v;
        if (!es || i < 1 || i > n || j < 1 || j > n || i == j)
            throw ParseError("load_instance: malformed observation line", line_no);
        const DualQuaternion q{{c[0], c[1], c[2], c[3]}, {c[4], c[5], c[6], c[7]}};
        if (!q.is_unit(1e-8))
            throw ParseError("load_instance: observation is not a unit dual quaternion", line_no);
        char& slot = seen_edge[static_cast<std::size_t>(i - 1) * n + (j - 1)];
        if (slot) throw ParseError("load_instance: duplicate edge", line_no);
        slot = 1;
        inst.graph.edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
        inst.observations.push_back(q);
    }
    if (inst.observations.empty()) throw ParseError("load_instance: no observations", line_no);
    if (any_gt) {
        for (int i = 0; i < n; ++i)
            if (!have_gt[i])
                throw ParseError("load_instance: ground truth is incomplete", line_no);
        inst.ground_truth = std::move(gt);
    }
    inst.observation_rate = static_cast<double>(inst.graph.edge_count()) /
                            (static_cast<double>(n) * (n - 1));
    return inst;
}

}  // namespace dqlin
