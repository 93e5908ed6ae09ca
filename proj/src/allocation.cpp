#include "ferry/allocation.hpp"

#include <stdexcept>
#include <string>

namespace ferry {

Allocation allocation_from_slots(const std::vector<int>& robot_slot, int n_flows) {
    Allocation alloc(n_flows, static_cast<int>(robot_slot.size()));
    for (int j = 0; j < alloc.n_robots; ++j) {
        const int s = robot_slot[j];
        if (s < 0 || s >= 2 * n_flows)
            throw std::invalid_argument("allocation_from_slots: robot " + std::to_string(j) +
                                        " slot " + std::to_string(s) + " outside [0, 2K)");
        if (s < n_flows)
            alloc.set(s, j, +1);
        else
            alloc.set(s - n_flows, j, -1);
    }
    validate(alloc);
    return alloc;
}

void validate(const Allocation& alloc) {
    if (alloc.n_flows < 1 || alloc.n_robots < 1)
        throw std::invalid_argument("allocation: dimensions must be positive");
    for (int j = 0; j < alloc.n_robots; ++j) {
        int slots = 0;
        for (int i = 0; i < alloc.n_flows; ++i) {
            const int v = alloc.at(i, j);
            if (v < -1 || v > 1)
                throw std::invalid_argument("allocation: entry (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") outside {-1,0,+1}");
            slots += (v != 0);
        }
        if (slots != 1)
            throw std::invalid_argument("allocation: robot " + std::to_string(j) + " holds " +
                                        std::to_string(slots) +
                                        " slots; each robot needs exactly one");
    }
    for (int i = 0; i < alloc.n_flows; ++i) {
        int at_src = 0, at_sink = 0;
        for (int j = 0; j < alloc.n_robots; ++j) {
            at_src += (alloc.at(i, j) == +1);
            at_sink += (alloc.at(i, j) == -1);
        }
        if (at_src > 1)
            throw std::invalid_argument("allocation: source of flow " + std::to_string(i) +
                                        " assigned to " + std::to_string(at_src) + " robots");
        if (at_sink > 1)
            throw std::invalid_argument("allocation: sink of flow " + std::to_string(i) +
                                        " assigned to " + std::to_string(at_sink) + " robots");
    }
}

}  // namespace ferry
