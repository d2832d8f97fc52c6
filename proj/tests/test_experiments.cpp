#include <doctest.h>

#include <cmath>
#include <regex>
#include <sstream>

#include "dqlin/experiments.hpp"

using namespace dqlin;

namespace {

/// CSVs carry a measured wall-clock column; determinism is asserted on
/// everything else, so the comparison blanks time_s out.
std::string mask_time_column(const std::string& csv, int column) {
    std::istringstream in(csv);
    std::string line, out;
    bool header = true;
    while (std::getline(in, line)) {
        if (!header) {
            int field = 0;
            std::string rebuilt;
            std::istringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ',')) {
                if (field == column) cell = "T";
                rebuilt += (field == 0 ? "" : ",") + cell;
                ++field;
            }
            line = rebuilt;
        }
        header = false;
        out += line + "\n";
    }
    return out;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("lap-eig batch: schema, counts, determinism") {
    LapEigParams p;
    p.n = 8;
    p.sparsity = 0.4;
    p.algo = LapAlgo::AdjointDirect;
    p.trials = 4;
    p.seed = 42;

    const auto records = run_lap_eig(p);
    REQUIRE(records.size() == 4);
    for (const auto& r : records) {
        CHECK(r.ok);
        CHECK(r.e_lambda < 1e-9);
        CHECK(r.time_s >= 0.0);
    }
    CHECK(records[2].seed == 44);

    std::ostringstream a, b;
    write_lap_eig_csv(a, records);
    write_lap_eig_csv(b, run_lap_eig(p));
    CHECK(a.str().substr(0, a.str().find('\n')) == "trial,n,sparsity,algo,e_lambda,time_s,seed");
    CHECK(mask_time_column(a.str(), 5) == mask_time_column(b.str(), 5));
}

TEST_CASE("lap-eig parallel jobs do not change the records") {
    LapEigParams p;
    p.n = 8;
    p.sparsity = 0.4;
    p.algo = LapAlgo::AdjointDirect;
    p.trials = 6;
    p.seed = 7;
    const auto serial = run_lap_eig(p);
    p.jobs = 3;
    const auto parallel = run_lap_eig(p);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].e_lambda == parallel[i].e_lambda);
        CHECK(serial[i].seed == parallel[i].seed);
    }
}

TEST_CASE("all three lap-eig algorithms run through the harness") {
    for (LapAlgo algo : {LapAlgo::Power, LapAlgo::AdjointPower, LapAlgo::AdjointDirect}) {
        LapEigParams p;
        p.n = 6;
        p.sparsity = 0.5;
        p.algo = algo;
        p.trials = 2;
        p.seed = 11;
        const auto records = run_lap_eig(p);
        for (const auto& r : records) {
            CHECK(r.ok);
            CHECK(r.e_lambda < 1e-7);
        }
    }
}

TEST_CASE("pgo batch: schema, counts, determinism") {
    PgoParams p;
    p.n = 6;
    p.obs_rate = 0.6;
    p.noise = 0.0;
    p.variant = PGOVariant::DBDEMP;
    p.trials = 3;
    p.seed = 5;
    p.config = default_pgo_config(p.variant);

    const auto records = run_pgo(p);
    REQUIRE(records.size() == 3);
    for (const auto& r : records) {
        CHECK(std::isfinite(r.e_q));
        CHECK(r.success);
        CHECK(r.iters > 0);
    }

    std::ostringstream a, b;
    write_pgo_csv(a, records);
    write_pgo_csv(b, run_pgo(p));
    CHECK(a.str().substr(0, a.str().find('\n')) ==
          "trial,n,obs_rate,noise,variant,e_Q,iters,time_s,success,seed");
    CHECK(mask_time_column(a.str(), 7) == mask_time_column(b.str(), 7));
}

TEST_CASE("lap-eig batch keeps one row per trial even when a trial fails") {
    LapEigParams p;
    p.n = 8;
    p.sparsity = 0.4;
    p.algo = LapAlgo::AdjointPower;
    p.trials = 3;
    p.seed = 9;
    p.power.max_iters = 1;  // force stage failures
    const auto records = run_lap_eig(p);
    REQUIRE(records.size() == 3);
    for (const auto& r : records) {
        CHECK(!r.ok);
        CHECK(std::isnan(r.e_lambda));
    }
    std::ostringstream csv;
    write_lap_eig_csv(csv, records);
    CHECK(csv.str().find("nan") != std::string::npos);
}

TEST_CASE("pgo batch keeps one row per trial even when a trial fails") {
    PgoParams p;
    p.n = 6;
    p.obs_rate = 0.6;
    p.noise = 0.0;
    p.variant = PGOVariant::DBDEMP;
    p.trials = 3;
    p.seed = 5;
    p.config = default_pgo_config(p.variant);
    p.config.inner.max_iters = 1;  // force inner failures
    const auto records = run_pgo(p);
    REQUIRE(records.size() == 3);
    for (const auto& r : records) {
        CHECK(!r.success);
        CHECK(std::isnan(r.e_q));
    }
}

}  // TEST_SUITE
