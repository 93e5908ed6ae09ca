#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ferry/config.hpp"
#include "ferry/engine.hpp"
#include "ferry/rate_model.hpp"

namespace ferry {

// One CSV row: a (sweep value, flow) pair. A failed sweep point still
// produces its rows, with the numeric fields absent and the error in
// status, so no requested point ever disappears from the output.
struct ResultRow {
    std::string sweep_variable;  // "none" for single runs
    double sweep_value = 0.0;
    int flow = 0;
    double lambda = 0.0;
    std::optional<double> throughput;
    std::optional<double> avg_total_queue;
    std::optional<double> delay;
    std::optional<Verdict> verdict;
    bool in_capacity_region = false;
    bool in_inner_bound = false;  // false also when d/(vT) >= 1 leaves no bound
    std::string status;           // "ok" or "error: ..."
};

// Runs the config: the single point, or every sweep value (concurrently
// when parallel — points are independent). Rows come back sorted by sweep
// value, flows ascending within a value. The seed feeds random robot
// placement only.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, bool parallel = true,
                                      unsigned seed = 0);

// write_csv emits the fixed schema (see kResultCsvHeader); rows_to_csv is
// the same serialization as a string, which is also what the determinism
// checks byte-compare.
extern const char* const kResultCsvHeader;
std::string rows_to_csv(const std::vector<ResultRow>& rows);
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);

// Side-by-side closed-form vs simulated delay over a (v, T, lambda) grid at
// fixed separation d, for the one-flow two-robot system the closed forms
// describe. Grid points whose lambda reaches lambda_max — or whose (v, T)
// give d/(vT) >= 1 — are marked infeasible rather than errored.
struct DelayTableParams {
    double d = 10.0;
    std::vector<double> v_list = {1.0, 2.0, 4.0};
    std::vector<int> T_list = {10, 20, 40};
    std::vector<double> lambda_fracs = {0.1, 0.3, 0.5, 0.7, 0.9};  // of lambda_max
    RateModel rate;
    std::int64_t horizon_epochs = 1000;
    double warmup_fraction = 0.1;
};

struct DelayTableRow {
    double d = 0.0;
    double v = 0.0;
    int T = 0;
    double lambda = 0.0;
    bool feasible = false;
    std::optional<double> closed_form;
    std::optional<double> simulated;
    std::optional<double> rel_error;
    std::string note;  // why an infeasible point is infeasible
};

extern const char* const kDelayCsvHeader;
std::vector<DelayTableRow> emit_delay_oracle_table(const DelayTableParams& params,
                                                   const std::string& path);

// The simulator instance behind each feasible table row: one flow at
// separation d, two robots starting at the sink and the source.
NetworkSpec make_delay_probe_network(double d, double v, int T, double lambda,
                                     const RateModel& rate);

}  // namespace ferry
