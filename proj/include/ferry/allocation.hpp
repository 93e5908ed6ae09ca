#pragma once

#include <cstdint>
#include <vector>

namespace ferry {

// Epoch-level robot-to-slot assignment, stored as a K x N matrix with
// entries in {-1, 0, +1}:
//
//     +1  robot j serves flow i's source (collects packets)
//     -1  robot j serves flow i's sink   (delivers packets)
//      0  no association
//
// A structurally valid allocation gives every robot exactly one slot, and
// every source and every sink at most one robot.
struct Allocation {
    int n_flows = 0;   // K
    int n_robots = 0;  // N

    Allocation() = default;
    Allocation(int k, int n)
        : n_flows(k), n_robots(n),
          a_(static_cast<std::size_t>(k) * static_cast<std::size_t>(n), 0) {}

    int at(int flow, int robot) const { return a_[idx(flow, robot)]; }
    void set(int flow, int robot, int v) { a_[idx(flow, robot)] = static_cast<std::int8_t>(v); }

    friend bool operator==(const Allocation& x, const Allocation& y) {
        return x.n_flows == y.n_flows && x.n_robots == y.n_robots && x.a_ == y.a_;
    }

private:
    std::size_t idx(int flow, int robot) const {
        return static_cast<std::size_t>(flow) * static_cast<std::size_t>(n_robots) +
               static_cast<std::size_t>(robot);
    }
    std::vector<std::int8_t> a_;
};

// Slots are numbered 0..2K-1: slot s < K is flow s's source, slot s >= K is
// flow (s-K)'s sink. Robot j's slot choice is column j of the matrix.
Allocation allocation_from_slots(const std::vector<int>& robot_slot, int n_flows);

// Throws std::invalid_argument naming the violated rule: bad dimensions,
// entry outside {-1,0,+1}, a robot with zero or multiple slots, or a source
// or sink shared by two robots.
void validate(const Allocation& alloc);

}  // namespace ferry
