#include "ferry/scheduler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ferry/assignment.hpp"

namespace ferry {
namespace {

void check_state_dims(const SimState& state, const NetworkSpec& spec, const char* who) {
    const std::size_t k = static_cast<std::size_t>(spec.n_flows());
    const std::size_t n = static_cast<std::size_t>(spec.n_robots);
    if (state.src_q.size() != k || state.robot_q.size() != n)
        throw std::invalid_argument(std::string(who) + ": state dimensions do not match spec");
    for (const auto& rq : state.robot_q)
        if (rq.size() != k)
            throw std::invalid_argument(std::string(who) + ": robot queue vector of wrong size");
}

// N x 2K weight matrix in slot order [src(0..K-1), sink(0..K-1)].
std::vector<std::vector<double>> slot_weights(const SimState& state) {
    const std::size_t n = state.robot_q.size();
    const std::size_t k = state.src_q.size();
    std::vector<std::vector<double>> w(n, std::vector<double>(2 * k, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            w[j][i] = state.src_q[i] - state.robot_q[j][i];
            w[j][k + i] = state.robot_q[j][i];
        }
    }
    return w;
}

}  // namespace

WeightTable cbmf_weights(const SimState& state) {
    const std::size_t k = state.src_q.size();
    const std::size_t n = state.robot_q.size();
    WeightTable t;
    t.w_src.assign(k, std::vector<double>(n, 0.0));
    t.w_sink.assign(k, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (state.robot_q[j].size() != k)
                throw std::invalid_argument("cbmf_weights: robot queue vector of wrong size");
            t.w_src[i][j] = state.src_q[i] - state.robot_q[j][i];
            t.w_sink[i][j] = state.robot_q[j][i];
        }
    }
    return t;
}

Allocation cbmf_allocate(const SimState& state, const NetworkSpec& spec) {
    validate(spec);
    check_state_dims(state, spec, "cbmf_allocate");
    const std::vector<int> slots = max_weight_assignment_lex(slot_weights(state));
    return allocation_from_slots(slots, spec.n_flows());
}

Allocation brute_force_allocate(const SimState& state, const NetworkSpec& spec) {
    validate(spec);
    check_state_dims(state, spec, "brute_force_allocate");
    const int k = spec.n_flows();
    const int n = spec.n_robots;
    if (n > 6 || k > 4)
        throw std::invalid_argument("brute_force_allocate: guarded to N <= 6 and K <= 4, got N=" +
                                    std::to_string(n) + " K=" + std::to_string(k));

    const std::vector<std::vector<double>> w = slot_weights(state);
    std::vector<int> current(static_cast<std::size_t>(n), -1);
    std::vector<char> taken(static_cast<std::size_t>(2 * k), 0);
    std::vector<int> best;
    double best_value = 0.0;
    bool have_best = false;

    // Depth-first over robots in index order, slots ascending: candidates
    // are produced in lexicographic order, so keeping only strict
    // improvements (beyond tolerance) leaves the lexicographically first
    // of every near-tied group.
    auto dfs = [&](auto&& self, int robot, double value) -> void {
        if (robot == n) {
            const double tol = 1e-9 * (1.0 + std::fabs(best_value));
            if (!have_best || value > best_value + tol) {
                best = current;
                best_value = value;
                have_best = true;
            }
            return;
        }
        for (int s = 0; s < 2 * k; ++s) {
            if (taken[s]) continue;
            taken[s] = 1;
            current[robot] = s;
            self(self, robot + 1, value + w[robot][s]);
            taken[s] = 0;
        }
        current[robot] = -1;
    };
    dfs(dfs, 0, 0.0);
    return allocation_from_slots(best, k);
}

double allocation_objective(const Allocation& alloc, const WeightTable& weights) {
    double v = 0.0;
    for (int i = 0; i < alloc.n_flows; ++i) {
        for (int j = 0; j < alloc.n_robots; ++j) {
            const int a = alloc.at(i, j);
            if (a == +1)
                v += weights.w_src[i][j];
            else if (a == -1)
                v += weights.w_sink[i][j];
        }
    }
    return v;
}

StaticScheduler::StaticScheduler(ScheduleProgram program) : program_(std::move(program)) {
    if (program_.entries.empty())
        throw std::invalid_argument("static scheduler: program must have at least one entry");
    for (const auto& e : program_.entries) {
        validate(e.first);
        if (e.second < 1)
            throw std::invalid_argument("static scheduler: epoch counts must be >= 1");
    }
    remaining_ = program_.entries[0].second;
}

Allocation StaticScheduler::allocate(const SimState& state, const NetworkSpec& spec) {
    check_state_dims(state, spec, "static scheduler");
    const Allocation& alloc = program_.entries[entry_].first;
    if (alloc.n_flows != spec.n_flows() || alloc.n_robots != spec.n_robots)
        throw std::invalid_argument("static scheduler: program dimensions do not match spec");
    if (--remaining_ == 0) {
        entry_ = (entry_ + 1) % program_.entries.size();
        remaining_ = program_.entries[entry_].second;
    }
    return alloc;
}

}  // namespace ferry
