#pragma once

#include <cstdint>
#include <vector>

#include "ferry/network.hpp"

namespace ferry {

// Full simulation state at the start of a time step. Queues are fluid
// (fractional packets); robot_q[j][i] is the amount robot j currently
// carries for flow i. arrived/delivered are cumulative counters used by
// the conservation check: at every step boundary
//
//     arrived[i] == src_q[i] + sum_j robot_q[j][i] + delivered[i]
//
// holds up to floating-point roundoff.
struct SimState {
    std::int64_t t = 0;                        // time step index
    std::vector<Point> robot_pos;              // N
    std::vector<double> src_q;                 // K, backlog at each source
    std::vector<std::vector<double>> robot_q;  // N x K, per-flow cargo
    std::vector<double> delivered;             // K, cumulative at sinks
    std::vector<double> arrived;               // K, cumulative exogenous input
};

inline SimState make_initial_state(const NetworkSpec& spec) {
    SimState st;
    st.robot_pos = spec.initial_robot_pos;
    st.src_q.assign(static_cast<std::size_t>(spec.n_flows()), 0.0);
    st.robot_q.assign(static_cast<std::size_t>(spec.n_robots),
                      std::vector<double>(static_cast<std::size_t>(spec.n_flows()), 0.0));
    st.delivered.assign(static_cast<std::size_t>(spec.n_flows()), 0.0);
    st.arrived.assign(static_cast<std::size_t>(spec.n_flows()), 0.0);
    return st;
}

}  // namespace ferry
