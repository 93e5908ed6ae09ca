#include "ferry/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ferry/rate_model.hpp"

namespace ferry {
namespace {

void check_step_inputs(const SimState& state, const Allocation& alloc,
                       const NetworkSpec& spec) {
    validate(alloc);
    const std::size_t k = static_cast<std::size_t>(spec.n_flows());
    const std::size_t n = static_cast<std::size_t>(spec.n_robots);
    if (alloc.n_flows != spec.n_flows() || alloc.n_robots != spec.n_robots)
        throw std::invalid_argument("step: allocation dimensions do not match spec");
    if (state.robot_pos.size() != n || state.src_q.size() != k || state.robot_q.size() != n ||
        state.delivered.size() != k || state.arrived.size() != k)
        throw std::invalid_argument("step: state dimensions do not match spec");
    for (const auto& rq : state.robot_q)
        if (rq.size() != k) throw std::invalid_argument("step: robot queue vector of wrong size");
}

void verify_conservation(const SimState& state, std::int64_t t) {
    for (std::size_t i = 0; i < state.src_q.size(); ++i) {
        double in_system = state.src_q[i] + state.delivered[i];
        for (const auto& rq : state.robot_q) in_system += rq[i];
        const double err = std::fabs(state.arrived[i] - in_system);
        if (err > 1e-9 * std::max(1.0, std::fabs(state.arrived[i])))
            throw std::logic_error("conservation violated for flow " + std::to_string(i) +
                                   " at t=" + std::to_string(t) + ": arrived " +
                                   std::to_string(state.arrived[i]) + " vs accounted " +
                                   std::to_string(in_system));
    }
}

}  // namespace

void step_in_place(SimState& state, const Allocation& alloc, const NetworkSpec& spec,
                   std::vector<double>* sample_pre_arrival) {
    check_step_inputs(state, alloc, spec);
    const int k = spec.n_flows();
    const int n = spec.n_robots;

    for (int j = 0; j < n; ++j) {
        // Find robot j's allocated node.
        int flow = -1, dir = 0;
        for (int i = 0; i < k; ++i) {
            const int a = alloc.at(i, j);
            if (a != 0) {
                flow = i;
                dir = a;
                break;
            }
        }
        const Point target = dir > 0 ? spec.flows[flow].src : spec.flows[flow].sink;

        // Move min(v, d) straight toward the target; interpolating from the
        // target end keeps the new distance numerically at max(d - v, 0).
        double d = distance(state.robot_pos[j], target);
        if (d <= spec.velocity) {
            state.robot_pos[j] = target;
            d = 0.0;
        } else {
            const double scale = (d - spec.velocity) / d;
            state.robot_pos[j].x = target.x + (state.robot_pos[j].x - target.x) * scale;
            state.robot_pos[j].y = target.y + (state.robot_pos[j].y - target.y) * scale;
            d -= spec.velocity;
        }

        // Transfer at the post-move distance.
        const double r = rate_at(spec.rate, d);
        if (dir > 0) {
            const double moved = std::min(r, state.src_q[flow]);
            state.src_q[flow] -= moved;
            state.robot_q[j][flow] += moved;
        } else {
            const double moved = std::min(r, state.robot_q[j][flow]);
            state.robot_q[j][flow] -= moved;
            state.delivered[flow] += moved;
        }
    }

    if (sample_pre_arrival != nullptr) {
        sample_pre_arrival->assign(static_cast<std::size_t>(k), 0.0);
        for (int i = 0; i < k; ++i) {
            double q = state.src_q[i];
            for (int j = 0; j < n; ++j) q += state.robot_q[j][i];
            (*sample_pre_arrival)[i] = q;
        }
    }

    for (int i = 0; i < k; ++i) {
        state.src_q[i] += spec.flows[i].lambda;
        state.arrived[i] += spec.flows[i].lambda;
    }
    ++state.t;
}

SimState step(const SimState& state, const Allocation& alloc, const NetworkSpec& spec) {
    SimState next = state;
    step_in_place(next, alloc, spec);
    return next;
}

Metrics run(const NetworkSpec& spec, Scheduler& scheduler, std::int64_t horizon_epochs,
            const RunOptions& options) {
    validate(spec);
    if (horizon_epochs < 1) throw std::invalid_argument("run: horizon_epochs must be >= 1");
    if (!(options.warmup_fraction >= 0.0 && options.warmup_fraction < 1.0))
        throw std::invalid_argument("run: warmup_fraction must be in [0, 1)");

    const int k = spec.n_flows();
    const std::int64_t total_steps = horizon_epochs * spec.epoch_len;

    Metrics m;
    m.n_flows = k;
    m.horizon_steps = total_steps;
    m.warmup_fraction = options.warmup_fraction;
    m.queue_series.assign(static_cast<std::size_t>(k), {});
    for (auto& s : m.queue_series) s.reserve(static_cast<std::size_t>(total_steps));

    SimState state = make_initial_state(spec);
    std::vector<double> sample;
    for (std::int64_t e = 0; e < horizon_epochs; ++e) {
        const Allocation alloc = scheduler.allocate(state, spec);
        for (int s = 0; s < spec.epoch_len; ++s) {
            step_in_place(state, alloc, spec, &sample);
            for (int i = 0; i < k; ++i) m.queue_series[i].push_back(sample[i]);
        }
        verify_conservation(state, state.t);
    }

    const std::int64_t warmup =
        static_cast<std::int64_t>(std::floor(options.warmup_fraction * total_steps));
    m.arrived = state.arrived;
    m.delivered = state.delivered;
    for (int i = 0; i < k; ++i) {
        m.throughput.push_back(state.delivered[i] / static_cast<double>(total_steps));
        double acc = 0.0;
        for (std::int64_t t = warmup; t < total_steps; ++t)
            acc += m.queue_series[i][static_cast<std::size_t>(t)];
        m.avg_total_queue.push_back(acc / static_cast<double>(total_steps - warmup));
        const double lambda = spec.flows[i].lambda;
        m.delay.push_back(lambda > 0.0 ? std::optional<double>(m.avg_total_queue[i] / lambda)
                                       : std::nullopt);
        m.verdict.push_back(total_steps >= 4
                                ? std::optional<Verdict>(stability_verdict(
                                      m.queue_series[i], options.eps_slope, options.q_cap))
                                : std::nullopt);
    }
    return m;
}

Verdict stability_verdict(const std::vector<double>& total_queue_series,
                          double eps_slope, double q_cap) {
    const std::size_t n = total_queue_series.size();
    if (n < 4)
        throw std::invalid_argument("stability_verdict: need at least 4 samples, got " +
                                    std::to_string(n));
    double max_q = 0.0;
    for (double q : total_queue_series) max_q = std::max(max_q, q);
    if (!(max_q < q_cap)) return Verdict::unstable;

    // Least-squares slope over the second half; a drifting queue shows up
    // here even when it is still far from the blow-up guard.
    const std::size_t begin = n / 2;
    const std::size_t count = n - begin;
    double mean_t = 0.0, mean_q = 0.0;
    for (std::size_t t = begin; t < n; ++t) {
        mean_t += static_cast<double>(t);
        mean_q += total_queue_series[t];
    }
    mean_t /= static_cast<double>(count);
    mean_q /= static_cast<double>(count);
    double num = 0.0, den = 0.0;
    for (std::size_t t = begin; t < n; ++t) {
        const double dt = static_cast<double>(t) - mean_t;
        num += dt * (total_queue_series[t] - mean_q);
        den += dt * dt;
    }
    const double slope = den > 0.0 ? num / den : 0.0;
    return slope < eps_slope ? Verdict::stable : Verdict::unstable;
}

}  // namespace ferry
