#include "dqlin/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "dqlin/graph.hpp"
#include "dqlin/sampling.hpp"

namespace dqlin {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Record, typename Fn>
std::vector<Record> run_batch(int trials, int jobs, Fn&& trial_fn) {
    std::vector<Record> records(trials);
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1) if (jobs > 1)
    for (int t = 0; t < trials; ++t) records[t] = trial_fn(t);
    return records;
}

}  // namespace

const char* lap_algo_name(LapAlgo a) {
    switch (a) {
        case LapAlgo::Power: return "power";
        case LapAlgo::AdjointPower: return "adjoint-power";
        case LapAlgo::AdjointDirect: return "adjoint-direct";
    }
    return "?";
}

std::optional<LapAlgo> parse_lap_algo(const std::string& name) {
    if (name == "power") return LapAlgo::Power;
    if (name == "adjoint-power") return LapAlgo::AdjointPower;
    if (name == "adjoint-direct") return LapAlgo::AdjointDirect;
    return std::nullopt;
}

LapEigRecord run_lap_eig_trial(const LapEigParams& p, int trial) {
    LapEigRecord rec;
    rec.trial = trial;
    rec.n = p.n;
    rec.sparsity = p.sparsity;
    rec.algo = p.algo;
    rec.seed = p.seed + static_cast<std::uint64_t>(trial);

    Rng rng(rec.seed);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const DQVector q = random_unit_dq_vector(p.n, rng);
        const Graph g = random_graph(p.n, p.sparsity, /*directed=*/false, rng);
        const DQMatrix lap = build_laplacian(g, q);
        Spectrum spec;
        switch (p.algo) {
            case LapAlgo::Power:
                spec = all_eigenpairs_power(lap, p.power).spectrum;
                break;
            case LapAlgo::AdjointPower:
                spec = all_eigenpairs_deflation(lap, p.power).spectrum;
                break;
            case LapAlgo::AdjointDirect:
                spec = all_eigenpairs(lap);
                break;
        }
        rec.e_lambda = metric_e_lambda(lap, spec);
    } catch (const Error&) {
        rec.e_lambda = std::numeric_limits<double>::quiet_NaN();
        rec.ok = false;
    }
    rec.time_s = seconds_since(t0);
    return rec;
}

std::vector<LapEigRecord> run_lap_eig(const LapEigParams& p) {
    return run_batch<LapEigRecord>(p.trials, p.jobs,
                                   [&](int t) { return run_lap_eig_trial(p, t); });
}

void write_lap_eig_csv(std::ostream& os, const std::vector<LapEigRecord>& records) {
    os << "trial,n,sparsity,algo,e_lambda,time_s,seed\n";
    char buf[256];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%d,%d,%g,%s,%.9e,%.6e,%llu\n", r.trial, r.n, r.sparsity,
                      lap_algo_name(r.algo), r.e_lambda, r.time_s,
                      static_cast<unsigned long long>(r.seed));
        os << buf;
    }
}

PgoRecord run_pgo_trial(const PgoParams& p, int trial) {
    PgoRecord rec;
    rec.trial = trial;
    rec.n = p.n;
    rec.obs_rate = p.obs_rate;
    rec.noise = p.noise;
    rec.variant = p.variant;
    rec.seed = p.seed + static_cast<std::uint64_t>(trial);

    Rng rng(rec.seed);
    PGOConfig config = p.config;
    config.variant = p.variant;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const PGOInstance inst = make_pgo_instance(p.n, p.obs_rate, p.noise, rng);
        const PGOResult res = pgo_solve(inst, config);
        rec.e_q = res.e_q.value_or(std::numeric_limits<double>::quiet_NaN());
        rec.iters = res.iterations;
        rec.success = res.success;
    } catch (const Error&) {
        rec.e_q = std::numeric_limits<double>::quiet_NaN();
        rec.success = false;
    }
    rec.time_s = seconds_since(t0);
    return rec;
}

std::vector<PgoRecord> run_pgo(const PgoParams& p) {
    return run_batch<PgoRecord>(p.trials, p.jobs, [&](int t) { return run_pgo_trial(p, t); });
}

void write_pgo_csv(std::ostream& os, const std::vector<PgoRecord>& records) {
    os << "trial,n,obs_rate,noise,variant,e_Q,iters,time_s,success,seed\n";
    char buf[256];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%d,%d,%g,%g,%s,%.9e,%d,%.6e,%d,%llu\n", r.trial, r.n,
                      r.obs_rate, r.noise, variant_name(r.variant), r.e_q, r.iters, r.time_s,
                      r.success ? 1 : 0, static_cast<unsigned long long>(r.seed));
        os << buf;
    }
}

}  // namespace dqlin
