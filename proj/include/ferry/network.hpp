#pragma once

#include <vector>

#include "ferry/geometry.hpp"
#include "ferry/rate_model.hpp"

namespace ferry {

// One unicast flow: a static source node that accumulates fresh packets at
// mean rate lambda, and a static sink node that consumes them.
struct FlowSpec {
    Point src;
    Point sink;
    double lambda = 0.0;  // packets per time step, >= 0
};

// Immutable scenario description shared by the engine, schedulers and the
// capacity tools. Robots are identical; flows are indexed 0..K-1 and robots
// 0..N-1 throughout.
struct NetworkSpec {
    std::vector<FlowSpec> flows;              // size K >= 1
    int n_robots = 0;                         // N >= 1
    double velocity = 1.0;                    // distance units per time step
    int epoch_len = 1;                        // T, time steps per scheduling epoch
    RateModel rate;
    std::vector<Point> initial_robot_pos;     // size N

    int n_flows() const { return static_cast<int>(flows.size()); }
};

// Throws std::invalid_argument naming the violated constraint. Checks, in
// particular, that N <= 2K (more robots than slots cannot be matched) and
// that every numeric field is finite and in range.
void validate(const NetworkSpec& spec);

// Largest pairwise distance between static nodes (sources and sinks of all
// flows). This is the worst detour a robot can be asked to make, and the
// quantity that discounts the inner capacity bound.
double max_static_distance(const NetworkSpec& spec);

// Canonical layout used by the experiments: flow i's source at (0, 50*(i+1)),
// its sink at (pair_distance[i], 50*(i+1)), all robots starting at flow 0's
// source. Rows of flows are spaced far enough apart that cross-flow transfers
// are negligible at the default rate parameters.
NetworkSpec make_row_network(const std::vector<double>& pair_distance,
                             const std::vector<double>& lambda,
                             int n_robots,
                             double velocity,
                             int epoch_len,
                             const RateModel& rate = {});

}  // namespace ferry
