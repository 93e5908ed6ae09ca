#pragma once

#include <optional>
#include <vector>

#include "ferry/allocation.hpp"
#include "ferry/network.hpp"

namespace ferry {

// Nonnegative per-flow arrival (or service) rates, packets per time step.
using RateVector = std::vector<double>;

// One way to split N robots among K flows: a_i robots dedicated to flow i
// (0, 1, or 2 — one robot alternating src/sink, or a src/sink pair swapping),
// sustaining long-run service gamma_i = a_i * r_max / 2 per flow.
struct BasisAllocation {
    std::vector<int> robots_per_flow;  // a, entries in {0,1,2}, sum <= N
    RateVector service_rate;           // gamma, recomputable from a
};

// Cyclic epoch-level schedule: run entries[0].first for entries[0].second
// epochs, then the next entry, wrapping around. Each basis allocation
// contributes two mirrored entries (collectors and deliverers swap roles).
struct ScheduleProgram {
    std::vector<std::pair<Allocation, int>> entries;  // (allocation, epoch count)

    int period() const {
        int p = 0;
        for (const auto& e : entries) p += e.second;
        return p;
    }
};

// All a in {0,1,2}^K with sum(a) <= N, in ascending mixed-radix order with
// flow 0 as the most significant digit. This ordering is the index space for
// decompose's coefficient vector.
std::vector<BasisAllocation> enumerate_basis(int n_flows, int n_robots, double r_max);

// Open region Lambda: 0 <= lam_i < r_max for every flow and
// sum(lam) < r_max * N / 2 (both strict).
bool in_capacity_region(const RateVector& lam, int n_flows, int n_robots, double r_max);

// Closed hull H of the basis rates: 0 <= lam_i <= r_max, sum <= r_max * N / 2.
bool in_hull(const RateVector& lam, int n_flows, int n_robots, double r_max);

// Lambda shrunk by the transit fraction rho = d_max / (v * T): componentwise
// bound r_max * (1 - rho) and sum bound r_max * (1 - rho) * N / 2, strict.
// Throws std::invalid_argument when rho >= 1 (an epoch too short to cover the
// worst static-node detour supports no guaranteed service at all).
bool in_inner_bound(const RateVector& lam, double v, double T, double d_max,
                    int n_flows, int n_robots, double r_max);

// Convex coefficients alpha over enumerate_basis(n_flows, n_robots, r_max)
// with sum(alpha) = 1 and sum_l alpha_l * gamma^(l) >= lam componentwise,
// or nullopt when lam lies outside H. Uses the constructive rounding of the
// fractional robot vector a = 2*lam/r_max: the coordinates of a are rounded
// jointly up/down along a one-dimensional family of patterns, so the
// combination reproduces lam exactly and every pattern keeps sum <= N.
std::optional<std::vector<double>> decompose(const RateVector& lam, int n_flows,
                                             int n_robots, double r_max);

// Turns coefficients into a runnable cyclic program: approximates alpha by
// integer epoch counts n_l / sum(n) with common denominator <= denom_cap
// (largest-remainder rounding, then the counts are reduced by their gcd),
// drops zero-count entries, and expands each surviving basis allocation into
// its two mirrored epochs. Robots are numbered greedily in flow order:
// collectors first, then the second robot of every a_i = 2 flow. Robots the
// basis leaves idle are put to work instead of parking: a_i is raised toward
// 2 in flow order until every robot is used (extra service never hurts, and
// N <= 2K guarantees the slots exist).
ScheduleProgram synthesize_schedule(const std::vector<double>& alpha,
                                    const std::vector<BasisAllocation>& basis,
                                    const NetworkSpec& spec,
                                    int denom_cap = 1000);

}  // namespace ferry
