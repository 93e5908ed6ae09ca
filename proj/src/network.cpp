#include "ferry/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ferry {

void validate(const NetworkSpec& spec) {
    const int k = spec.n_flows();
    if (k < 1) throw std::invalid_argument("network: need at least one flow (K >= 1)");
    if (spec.n_robots < 1)
        throw std::invalid_argument("network: need at least one robot (N >= 1)");
    if (spec.n_robots > 2 * k)
        throw std::invalid_argument(
            "network: N <= 2K violated (" + std::to_string(spec.n_robots) + " robots, " +
            std::to_string(2 * k) + " slots); robots cannot outnumber source+sink slots");
    if (!(std::isfinite(spec.velocity) && spec.velocity > 0.0))
        throw std::invalid_argument("network: velocity must be finite and > 0");
    if (spec.epoch_len < 1)
        throw std::invalid_argument("network: epoch_len must be >= 1");
    validate(spec.rate);
    for (int i = 0; i < k; ++i) {
        const FlowSpec& f = spec.flows[i];
        if (!is_finite(f.src) || !is_finite(f.sink))
            throw std::invalid_argument("network: flow " + std::to_string(i) +
                                        " has a non-finite node position");
        if (!(std::isfinite(f.lambda) && f.lambda >= 0.0))
            throw std::invalid_argument("network: flow " + std::to_string(i) +
                                        " arrival rate must be finite and >= 0");
    }
    if (static_cast<int>(spec.initial_robot_pos.size()) != spec.n_robots)
        throw std::invalid_argument(
            "network: initial_robot_pos size (" + std::to_string(spec.initial_robot_pos.size()) +
            ") must equal n_robots (" + std::to_string(spec.n_robots) + ")");
    for (int j = 0; j < spec.n_robots; ++j)
        if (!is_finite(spec.initial_robot_pos[j]))
            throw std::invalid_argument("network: robot " + std::to_string(j) +
                                        " initial position is non-finite");
}

double max_static_distance(const NetworkSpec& spec) {
    std::vector<Point> nodes;
    nodes.reserve(2 * spec.flows.size());
    for (const FlowSpec& f : spec.flows) {
        nodes.push_back(f.src);
        nodes.push_back(f.sink);
    }
    double d = 0.0;
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            d = std::max(d, distance(nodes[a], nodes[b]));
    return d;
}

NetworkSpec make_row_network(const std::vector<double>& pair_distance,
                             const std::vector<double>& lambda,
                             int n_robots,
                             double velocity,
                             int epoch_len,
                             const RateModel& rate) {
    if (pair_distance.size() != lambda.size())
        throw std::invalid_argument("make_row_network: pair_distance and lambda sizes differ");
    NetworkSpec spec;
    for (std::size_t i = 0; i < pair_distance.size(); ++i) {
        const double y = 50.0 * static_cast<double>(i + 1);
        spec.flows.push_back({{0.0, y}, {pair_distance[i], y}, lambda[i]});
    }
    spec.n_robots = n_robots;
    spec.velocity = velocity;
    spec.epoch_len = epoch_len;
    spec.rate = rate;
    spec.initial_robot_pos.assign(static_cast<std::size_t>(n_robots), spec.flows.at(0).src);
    validate(spec);
    return spec;
}

}  // namespace ferry
