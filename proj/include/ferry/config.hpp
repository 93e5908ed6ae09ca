#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ferry/capacity.hpp"
#include "ferry/network.hpp"
#include "ferry/scheduler.hpp"

namespace ferry {

enum class RobotStart { first_source, random_box, explicit_list };
enum class SchedulerKind { cbmf, static_program, oracle };
enum class SweepVariable { lambda_scale, velocity, epoch_len };

struct SweepSpec {
    SweepVariable variable = SweepVariable::lambda_scale;
    std::vector<double> values;  // nonempty
};

struct SchedulerSpec {
    SchedulerKind kind = SchedulerKind::cbmf;
    std::string program_file;          // static_program only
    std::vector<double> target_rates;  // oracle only; decomposed at build time
    int denom_cap = 1000;              // oracle only
};

// Everything an experiment needs, parsed and validated. Flow geometry is
// fully resolved at load time; robot start positions may stay symbolic
// (random placement draws from the seed passed to make_network).
struct ExperimentConfig {
    std::vector<FlowSpec> flows;
    int n_robots = 0;
    double velocity = 1.0;
    int epoch_len = 100;
    RateModel rate;
    RobotStart robot_start = RobotStart::first_source;
    std::vector<Point> robot_start_points;  // explicit_list only

    SchedulerSpec scheduler;
    std::int64_t horizon_epochs = 1000;  // >= 4
    double warmup_fraction = 0.1;        // in [0, 1)
    std::string output_path = "results.csv";
    std::optional<SweepSpec> sweep;
};

// Parses the JSON config file. Unknown keys anywhere are rejected; every
// validation error names the constraint it violates. See the README for the
// full schema and defaults.
ExperimentConfig load_config(const std::string& path);

// Same parser on an in-memory document; origin labels error messages.
ExperimentConfig parse_config_text(const std::string& text, const std::string& origin);

// Materializes the network. The seed only matters for robot_start "random"
// (uniform draws over the bounding box of the static nodes); everything else
// is deterministic.
NetworkSpec make_network(const ExperimentConfig& cfg, unsigned seed);

// Builds the configured scheduler against a concrete network: cbmf directly,
// static from its program file, oracle by decomposing the target rates over
// the basis set and synthesizing the cyclic program (fails if the targets
// fall outside the rate hull).
std::unique_ptr<Scheduler> build_scheduler(const SchedulerSpec& spec, const NetworkSpec& net);

// Program file I/O: entries hold per-robot slot numbers in [0, 2K) (sources
// first, then sinks) plus an epoch count.
ScheduleProgram load_program(const std::string& path, int n_flows, int n_robots);
void save_program(const ScheduleProgram& program, const std::string& path);

const char* to_string(SweepVariable v);

}  // namespace ferry
