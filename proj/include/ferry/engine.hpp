#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ferry/allocation.hpp"
#include "ferry/network.hpp"
#include "ferry/scheduler.hpp"
#include "ferry/sim_state.hpp"

namespace ferry {

enum class Verdict { stable, unstable };

// Aggregates of one run. queue_series[i][t] is flow i's total in-system
// backlog (source plus all robot cargo) at step t, measured after that
// step's transfers and before its arrivals — the backlog the service
// process actually left behind, which is what the closed-form delay
// analysis averages. Averages discard the first warmup_fraction of steps.
struct Metrics {
    int n_flows = 0;
    std::int64_t horizon_steps = 0;
    double warmup_fraction = 0.0;
    std::vector<std::vector<double>> queue_series;    // K x horizon_steps
    std::vector<double> arrived;                      // cumulative per flow
    std::vector<double> delivered;                    // cumulative per flow
    std::vector<double> throughput;                   // delivered / horizon_steps
    std::vector<double> avg_total_queue;              // post-warmup mean of the series
    std::vector<std::optional<double>> delay;         // avg queue / lambda; absent when lambda == 0
    std::vector<std::optional<Verdict>> verdict;      // absent when the series is too short
};

struct RunOptions {
    double warmup_fraction = 0.1;  // in [0, 1)
    double eps_slope = 1e-3;       // packets per step; below this counts as flat
    double q_cap = 1e6;            // blow-up guard for the stability verdict
};

// One time step under a fixed allocation: (a) every robot moves distance
// min(v, remaining) straight toward its allocated node; (b) transfer at the
// post-move distance — a source hands min(rate, backlog) to the robot, a
// sink receives min(rate, cargo); (c) every source gains lambda_i; (d) t
// advances. If sample_pre_arrival is non-null it receives, per flow, the
// total in-system backlog between (b) and (c).
void step_in_place(SimState& state, const Allocation& alloc, const NetworkSpec& spec,
                   std::vector<double>* sample_pre_arrival = nullptr);

SimState step(const SimState& state, const Allocation& alloc, const NetworkSpec& spec);

// Runs horizon_epochs epochs of epoch_len steps each from the spec's initial
// state, consulting the scheduler at every epoch boundary. Verifies the
// arrived = in-system + delivered conservation identity at every epoch end
// (1e-9 relative) so a leaky step cannot go unnoticed, and checks each
// allocation structurally. Bit-for-bit deterministic.
Metrics run(const NetworkSpec& spec, Scheduler& scheduler, std::int64_t horizon_epochs,
            const RunOptions& options = {});

// Least-squares slope of the second half of the series must stay below
// eps_slope and the overall maximum below q_cap for a stable verdict.
// Requires at least 4 samples.
Verdict stability_verdict(const std::vector<double>& total_queue_series,
                          double eps_slope = 1e-3, double q_cap = 1e6);

}  // namespace ferry
