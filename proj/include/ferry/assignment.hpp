#pragma once

#include <vector>

namespace ferry {

// Exact minimum-cost perfect assignment on an n x n cost matrix via the
// potentials (shortest augmenting path) method. Returns row -> column.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

// Maximum-weight assignment of every row (robot) to a distinct column
// (slot), n_rows <= n_cols. Among all assignments whose total weight is
// within tie_tol (relative) of the optimum, returns the lexicographically
// smallest column vector — i.e. robot 0 takes the lowest-numbered column it
// can hold without sacrificing optimality, then robot 1, and so on. This
// pins a single canonical optimum so results are reproducible bit-for-bit.
std::vector<int> max_weight_assignment_lex(const std::vector<std::vector<double>>& weight,
                                           double tie_tol = 1e-9);

// Total weight of an assignment under a weight matrix; the one summation
// order every optimality test compares against.
double assignment_value(const std::vector<std::vector<double>>& weight,
                        const std::vector<int>& row_to_col);

}  // namespace ferry
