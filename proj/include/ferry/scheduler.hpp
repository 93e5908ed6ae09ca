#pragma once

#include "ferry/allocation.hpp"
#include "ferry/capacity.hpp"
#include "ferry/network.hpp"
#include "ferry/sim_state.hpp"

namespace ferry {

// Epoch hook: the engine calls allocate once per epoch with the full state
// and holds the returned allocation fixed for the next T steps. A scheduler
// instance belongs to a single run (it may carry a cursor); it must be a
// deterministic function of its own state plus the arguments.
struct Scheduler {
    virtual ~Scheduler() = default;
    virtual Allocation allocate(const SimState& state, const NetworkSpec& spec) = 0;
};

// Backpressure weights for the epoch matching. Slot s < K is flow s's
// source with weight w_src[s][j] = Q_src(s) - Q_j^s (differential backlog:
// how much collecting robot j would relieve); slot s >= K is flow (s-K)'s
// sink with weight w_sink[s-K][j] = Q_j^{s-K} (cargo robot j could unload).
struct WeightTable {
    std::vector<std::vector<double>> w_src;   // K x N
    std::vector<std::vector<double>> w_sink;  // K x N
};

WeightTable cbmf_weights(const SimState& state);

// Exact maximizer of sum of matched weights over allocations satisfying the
// one-slot-per-robot and one-robot-per-node constraints. Negative weights
// are kept: every robot is matched even when nothing useful remains. Ties
// (within 1e-9 relative) break lexicographically by (robot, slot) with slot
// order [src(0..K-1), sink(0..K-1)], so the allocation is reproducible.
Allocation cbmf_allocate(const SimState& state, const NetworkSpec& spec);

// Reference maximizer by exhaustive enumeration of all injective robot-to-
// slot maps, kept deliberately independent of the matching solver. First
// assignment in lexicographic order wins among ties. Guarded to N <= 6,
// K <= 4 (the state space beyond that is pointless to enumerate).
Allocation brute_force_allocate(const SimState& state, const NetworkSpec& spec);

// The objective both maximizers are judged by, summed in one canonical
// order (flows outer, robots inner).
double allocation_objective(const Allocation& alloc, const WeightTable& weights);

class CbmfScheduler final : public Scheduler {
public:
    Allocation allocate(const SimState& state, const NetworkSpec& spec) override {
        return cbmf_allocate(state, spec);
    }
};

class BruteForceScheduler final : public Scheduler {
public:
    Allocation allocate(const SimState& state, const NetworkSpec& spec) override {
        return brute_force_allocate(state, spec);
    }
};

// Replays a ScheduleProgram cyclically, one entry per epoch-count step:
// ignores queue state entirely. The cursor advances on every allocate call.
class StaticScheduler final : public Scheduler {
public:
    explicit StaticScheduler(ScheduleProgram program);
    Allocation allocate(const SimState& state, const NetworkSpec& spec) override;

private:
    ScheduleProgram program_;
    std::size_t entry_ = 0;
    int remaining_ = 0;
};

}  // namespace ferry
