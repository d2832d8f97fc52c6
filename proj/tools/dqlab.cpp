// dqlab: experiment harness for dual quaternion Hermitian eigenvalue
// computation and pose graph optimization.
//
// Subcommands: lap-eig, pentagon, pgo, instance gen|solve.
// Exit codes: 0 ok, 2 usage, 3 solver failure, 4 I/O or parse error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dqlin/experiments.hpp"
#include "dqlin/graph.hpp"
#include "dqlin/io.hpp"
#include "dqlin/lowrank.hpp"
#include "dqlin/pgo.hpp"
#include "dqlin/sampling.hpp"

namespace {

using namespace dqlin;

int cmd_lap_eig(const LapEigParams& params, const std::string& out_path) {
    const std::vector<LapEigRecord> records = run_lap_eig(params);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "lap-eig: cannot open " << out_path << "\n";
            return 4;
        }
        write_lap_eig_csv(out, records);
    } else {
        write_lap_eig_csv(std::cout, records);
    }
    double sum_e = 0.0, sum_t = 0.0;
    int failures = 0;
    for (const auto& r : records) {
        if (r.ok) sum_e += r.e_lambda;
        else ++failures;
        sum_t += r.time_s;
    }
    const int ok = static_cast<int>(records.size()) - failures;
    std::printf("lap-eig %s n=%d s=%g trials=%zu  mean e_lambda=%.6e  mean time=%.6e s",
                lap_algo_name(params.algo), params.n, params.sparsity, records.size(),
                ok > 0 ? sum_e / ok : std::numeric_limits<double>::quiet_NaN(),
                sum_t / static_cast<double>(records.size()));
    if (failures > 0) std::printf("  (%d failed)", failures);
    std::printf("\n");
    return failures > 0 ? 3 : 0;
}

int cmd_pentagon(bool try_deflation, const std::string& dump_path, const std::string& load_path) {
    DQMatrix p;
    if (!load_path.empty()) {
        try {
            p = load_matrix(load_path);
        } catch (const ParseError& e) {
            std::cerr << "pentagon: " << e.what() << " (line " << e.line << ")\n";
            return 4;
        }
    } else {
        p = build_pentagon();
    }
    if (!dump_path.empty()) save_matrix(p, dump_path);

    Spectrum spec;
    try {
        spec = all_eigenpairs(p);
    } catch (const Error& e) {
        std::cerr << "pentagon: eigendecomposition failed: " << e.what() << "\n";
        return 3;
    }
    std::printf("eigenvalues (direct adjoint eigendecomposition):\n");
    for (const auto& pair : spec.pairs)
        std::printf("  %9.4f %+9.4f*eps\n", pair.value.st, pair.value.du);
    std::printf("e_lambda = %.6e\n", metric_e_lambda(p, spec));

    if (try_deflation) {
        PowerConfig cfg{20000, 1e-9};
        const DeflationResult defl = all_eigenpairs_deflation(p, cfg, 0.0, /*allow_partial=*/true);
        std::printf("\ndeflation sweep (adjoint power method):\n");
        int unresolved = 0;
        for (std::size_t k = 0; k < defl.stages.size(); ++k) {
            const auto& st = defl.stages[k];
            std::printf("  stage %zu: lambda = %9.4f %+9.4f*eps   residual %.3e after %d iters  %s\n",
                        k + 1, st.value.st, st.value.du, st.residual, st.iterations,
                        st.converged ? "converged" : "STALLED");
            if (!st.converged) ++unresolved;
        }
        if (unresolved > 0)
            std::printf("deflation left %d unresolved eigenvalue pair(s): eigenvalues with equal "
                        "standard parts but different dual parts stall the power method\n",
                        unresolved);
        else
            std::printf("deflation converged on every stage\n");
        std::printf("e_lambda (deflation) = %.6e\n", metric_e_lambda(p, defl.spectrum));
    }
    return 0;
}

int cmd_pgo(const PgoParams& params, const std::string& out_path) {
    const std::vector<PgoRecord> records = run_pgo(params);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "pgo: cannot open " << out_path << "\n";
            return 4;
        }
        write_pgo_csv(out, records);
    } else {
        write_pgo_csv(std::cout, records);
    }
    double sum_e = 0.0, sum_i = 0.0;
    int successes = 0, valid = 0;
    for (const auto& r : records) {
        if (std::isfinite(r.e_q)) {
            sum_e += r.e_q;
            ++valid;
        }
        sum_i += r.iters;
        if (r.success) ++successes;
    }
    std::printf("pgo %s n=%d s=%g noise=%g trials=%zu  mean e_Q=%.6e  mean iters=%.2f  "
                "success %d/%zu\n",
                variant_name(params.variant), params.n, params.obs_rate, params.noise,
                records.size(), valid > 0 ? sum_e / valid : std::numeric_limits<double>::quiet_NaN(),
                sum_i / static_cast<double>(records.size()), successes, records.size());
    return 0;
}

int cmd_instance_gen(int n, double obs_rate, double noise, std::uint64_t seed,
                     const std::string& out_path, bool no_gt) {
    Rng rng(seed);
    try {
        PGOInstance inst = make_pgo_instance(n, obs_rate, noise, rng);
        if (no_gt) inst.ground_truth.reset();
        save_instance(inst, out_path);
        std::printf("instance: n=%d edges=%zu realized s=%.6g realized noise=%.6g -> %s\n", n,
                    inst.graph.edge_count(), inst.observation_rate, inst.noise_level,
                    out_path.c_str());
    } catch (const Error& e) {
        std::cerr << "instance gen: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

int cmd_instance_solve(const std::string& path, PGOVariant variant, const std::string& dump_x2) {
    PGOInstance inst;
    try {
        inst = load_instance(path);
    } catch (const ParseError& e) {
        std::cerr << "instance solve: " << e.what() << " (line " << e.line << ")\n";
        return 4;
    }
    try {
        const PGOResult res = pgo_solve(inst, default_pgo_config(variant));
        std::printf("solved %s with %s: iterations=%d final residual=%.6e", path.c_str(),
                    variant_name(variant), res.iterations,
                    res.residual_history.empty() ? 0.0 : res.residual_history.back());
        if (res.e_q) std::printf("  e_Q=%.6e  success=%s", *res.e_q, res.success ? "yes" : "no");
        std::printf("\n");
        if (!dump_x2.empty()) save_matrix(res.x2, dump_x2);
    } catch (const Error& e) {
        std::cerr << "instance solve: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual quaternion Hermitian eigenvalue and pose graph experiments"};
    app.require_subcommand(1);

    // lap-eig
    LapEigParams lap;
    std::string lap_algo = "adjoint-direct", lap_out;
    auto* lap_cmd = app.add_subcommand("lap-eig", "eigenpairs of random graph Laplacians");
    lap_cmd->add_option("--n", lap.n, "vertex count")->check(CLI::Range(2, 1 << 16));
    lap_cmd->add_option("--sparsity", lap.sparsity, "graph sparsity 2|E|/n^2 in (0,1]")
        ->check(CLI::Range(1e-12, 1.0));
    lap_cmd->add_option("--algo", lap_algo, "power | adjoint-power | adjoint-direct");
    lap_cmd->add_option("--trials", lap.trials, "independent trials")->check(CLI::PositiveNumber);
    lap_cmd->add_option("--seed", lap.seed, "base seed; trial t uses seed+t");
    lap_cmd->add_option("--jobs", lap.jobs, "parallel trial workers")->check(CLI::PositiveNumber);
    lap_cmd->add_option("--out", lap_out, "CSV output path");
    lap_cmd->add_option("--power-tol", lap.power.tol, "power method tolerance delta (default 1e-10)");
    lap_cmd->add_option("--power-iters", lap.power.max_iters,
                        "power method max iterations per stage (default 100000)");

    // pentagon
    bool try_deflation = false;
    std::string pent_dump, pent_load;
    auto* pent_cmd =
        app.add_subcommand("pentagon", "the 5-cycle matrix with tied standard-part eigenvalues");
    pent_cmd->add_flag("--try-deflation", try_deflation,
                       "also run the deflation sweep and report its failure mode");
    pent_cmd->add_option("--dump", pent_dump, "write the analyzed matrix to a text file");
    pent_cmd->add_option("--load", pent_load, "analyze a matrix from a text file instead");

    // pgo
    PgoParams pgo;
    std::string pgo_variant = "dbdemp", pgo_out;
    auto* pgo_cmd = app.add_subcommand("pgo", "pose graph optimization batches");
    pgo_cmd->add_option("--n", pgo.n, "pose count")->check(CLI::Range(2, 1 << 16));
    pgo_cmd->add_option("--obs-rate", pgo.obs_rate, "observation rate m/(n(n-1)) in (0,1]")
        ->check(CLI::Range(1e-12, 1.0));
    pgo_cmd->add_option("--noise", pgo.noise, "relative noise level l_noise >= 0")
        ->check(CLI::NonNegativeNumber);
    pgo_cmd->add_option("--variant", pgo_variant, "demp | demp1 | dbdemp | dbdemp1");
    pgo_cmd->add_option("--trials", pgo.trials, "independent trials")->check(CLI::PositiveNumber);
    pgo_cmd->add_option("--seed", pgo.seed, "base seed; trial t uses seed+t");
    pgo_cmd->add_option("--jobs", pgo.jobs, "parallel trial workers")->check(CLI::PositiveNumber);
    pgo_cmd->add_option("--out", pgo_out, "CSV output path");
    pgo_cmd->add_option("--rho0", pgo.config.rho0, "initial penalty rho^(0) (default 0.01)");
    pgo_cmd->add_option("--rho1", pgo.config.rho1,
                        "penalty growth rho_1 (default 1.1 for demp, 1 otherwise)");
    pgo_cmd->add_option("--beta", pgo.config.beta, "stopping tolerance beta (default 1e-6)");
    pgo_cmd->add_option("--kmax", pgo.config.k_max, "outer iteration cap (default 200)");
    pgo_cmd->add_option("--window", pgo.config.window, "stagnation window d (default 2)");

    // instance gen|solve
    auto* inst_cmd = app.add_subcommand("instance", "PGO instance files");
    inst_cmd->require_subcommand(1);
    int gen_n = 10;
    double gen_rate = 0.4, gen_noise = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out = "instance.pgo";
    bool gen_no_gt = false;
    auto* gen_cmd = inst_cmd->add_subcommand("gen", "generate an instance file");
    gen_cmd->add_option("--n", gen_n, "pose count")->check(CLI::Range(2, 1 << 16));
    gen_cmd->add_option("--obs-rate", gen_rate, "observation rate")->check(CLI::Range(1e-12, 1.0));
    gen_cmd->add_option("--noise", gen_noise, "relative noise level")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--seed", gen_seed, "seed");
    gen_cmd->add_option("--out", gen_out, "output path");
    gen_cmd->add_flag("--no-gt", gen_no_gt, "omit ground truth lines");

    std::string solve_path, solve_variant = "dbdemp", solve_dump;
    auto* solve_cmd = inst_cmd->add_subcommand("solve", "solve an instance file");
    solve_cmd->add_option("file", solve_path, "instance file")->required();
    solve_cmd->add_option("--variant", solve_variant, "demp | demp1 | dbdemp | dbdemp1");
    solve_cmd->add_option("--dump-x2", solve_dump, "write the recovered X2 to a matrix file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (lap_cmd->parsed()) {
        const auto algo = parse_lap_algo(lap_algo);
        if (!algo) {
            std::cerr << "lap-eig: unknown --algo " << lap_algo << "\n";
            return 2;
        }
        lap.algo = *algo;
        return cmd_lap_eig(lap, lap_out);
    }
    if (pent_cmd->parsed()) return cmd_pentagon(try_deflation, pent_dump, pent_load);
    if (pgo_cmd->parsed()) {
        const auto variant = parse_variant(pgo_variant);
        if (!variant) {
            std::cerr << "pgo: unknown --variant " << pgo_variant << "\n";
            return 2;
        }
        pgo.variant = *variant;
        PGOConfig defaults = default_pgo_config(*variant);
        if (pgo_cmd->count("--rho1") == 0) pgo.config.rho1 = defaults.rho1;
        pgo.config.variant = *variant;
        return cmd_pgo(pgo, pgo_out);
    }
    if (gen_cmd->parsed())
        return cmd_instance_gen(gen_n, gen_rate, gen_noise, gen_seed, gen_out, gen_no_gt);
    if (solve_cmd->parsed()) {
        const auto variant = parse_variant(solve_variant);
        if (!variant) {
            std::cerr << "instance solve: unknown --variant " << solve_variant << "\n";
            return 2;
        }
        return cmd_instance_solve(solve_path, *variant, solve_dump);
    }
    return 2;
}
