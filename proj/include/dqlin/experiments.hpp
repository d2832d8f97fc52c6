#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dqlin/eig.hpp"
#include "dqlin/pgo.hpp"

namespace dqlin {

enum class LapAlgo { Power, AdjointPower, AdjointDirect };

const char* lap_algo_name(LapAlgo a);
std::optional<LapAlgo> parse_lap_algo(const std::string& name);

struct LapEigParams {
    int n = 10;
    double sparsity = 0.3;
    LapAlgo algo = LapAlgo::AdjointDirect;
    int trials = 10;
    std::uint64_t seed = 0;
    int jobs = 1;
    PowerConfig power{100000, 1e-10};
};

struct LapEigRecord {
    int trial = 0;
    int n = 0;
    double sparsity = 0.0;
    LapAlgo algo = LapAlgo::AdjointDirect;
    double e_lambda = 0.0;  // nan on solver failure
    double time_s = 0.0;
    std::uint64_t seed = 0;
    bool ok = true;
};

/// One seeded trial: random unit poses, random undirected graph, Laplacian,
/// all eigenpairs by the chosen route, e_lambda.
LapEigRecord run_lap_eig_trial(const LapEigParams& p, int trial);
std::vector<LapEigRecord> run_lap_eig(const LapEigParams& p);
void write_lap_eig_csv(std::ostream& os, const std::vector<LapEigRecord>& records);

struct PgoParams {
    int n = 10;
    double obs_rate = 0.4;
    double noise = 0.0;
    PGOVariant variant = PGOVariant::DBDEMP;
    int trials = 100;
    std::uint64_t seed = 0;
    int jobs = 1;
    PGOConfig config = default_pgo_config(PGOVariant::DBDEMP);
};

struct PgoRecord {
    int trial = 0;
    int n = 0;
    double obs_rate = 0.0;
    double noise = 0.0;
    PGOVariant variant = PGOVariant::DBDEMP;
    double e_q = 0.0;  // nan on solver failure
    int iters = 0;
    double time_s = 0.0;
    bool success = false;
    std::uint64_t seed = 0;
};

PgoRecord run_pgo_trial(const PgoParams& p, int trial);
std::vector<PgoRecord> run_pgo(const PgoParams& p);
void write_pgo_csv(std::ostream& os, const std::vector<PgoRecord>& records);

}  // namespace dqlin
