#include "ferry/assignment.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ferry {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Optimal value of the max-weight assignment of the given rows to distinct
// columns drawn from the given column set. Rows short of |cols| are padded
// with zero-weight dummies, and weights are negated to reuse the min-cost
// solver.
double best_value(const std::vector<std::vector<double>>& weight,
                  const std::vector<int>& rows,
                  const std::vector<int>& cols) {
    if (rows.empty()) return 0.0;
    const std::size_t n = cols.size();
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) cost[r][c] = -weight[rows[r]][cols[c]];
    const std::vector<int> match = min_cost_assignment(cost);
    double v = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r) v += weight[rows[r]][cols[match[r]]];
    return v;
}

}  // namespace

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) return {};
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("min_cost_assignment: matrix must be square");

    // 1-indexed potentials u, v; p[j] = row matched to column j, column 0 is
    // the virtual start of each augmenting path.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

std::vector<int> max_weight_assignment_lex(const std::vector<std::vector<double>>& weight,
                                           double tie_tol) {
    const int n_rows = static_cast<int>(weight.size());
    if (n_rows == 0) return {};
    const int n_cols = static_cast<int>(weight[0].size());
    for (const auto& row : weight)
        if (static_cast<int>(row.size()) != n_cols)
            throw std::invalid_argument("max_weight_assignment_lex: ragged weight matrix");
    if (n_rows > n_cols)
        throw std::invalid_argument("max_weight_assignment_lex: more rows (" +
                                    std::to_string(n_rows) + ") than columns (" +
                                    std::to_string(n_cols) + ")");

    std::vector<int> free_cols(n_cols);
    std::iota(free_cols.begin(), free_cols.end(), 0);
    std::vector<int> rest_rows(n_rows);
    std::iota(rest_rows.begin(), rest_rows.end(), 0);

    double target = best_value(weight, rest_rows, free_cols);
    std::vector<int> result(n_rows, -1);

    // Fix rows one at a time: give row r the smallest column that still
    // allows the remaining rows to reach the optimal total.
    for (int r = 0; r < n_rows; ++r) {
        rest_rows.erase(rest_rows.begin());
        const double tol = tie_tol * (1.0 + std::fabs(target));
        int chosen = -1;
        double chosen_rest = 0.0;
        double fallback_best = -kInf;
        int fallback_col = -1;
        double fallback_rest = 0.0;
        for (std::size_t ci = 0; ci < free_cols.size(); ++ci) {
            const int col = free_cols[ci];
            std::vector<int> cols_left;
            cols_left.reserve(free_cols.size() - 1);
            for (std::size_t cj = 0; cj < free_cols.size(); ++cj)
                if (cj != ci) cols_left.push_back(free_cols[cj]);
            const double rest = best_value(weight, rest_rows, cols_left);
            const double total = weight[r][col] + rest;
            if (total >= target - tol) {
                chosen = col;
                chosen_rest = rest;
                break;
            }
            if (total > fallback_best) {
                fallback_best = total;
                fallback_col = col;
                fallback_rest = rest;
            }
        }
        if (chosen < 0) {
            // Numerically the optimum can drift below the cached target by
            // more than tol only through pathological cancellation; keep the
            // best achievable column rather than failing.
            chosen = fallback_col;
            chosen_rest = fallback_rest;
        }
        result[r] = chosen;
        target = chosen_rest;
        for (std::size_t ci = 0; ci < free_cols.size(); ++ci) {
            if (free_cols[ci] == chosen) {
                free_cols.erase(free_cols.begin() + static_cast<std::ptrdiff_t>(ci));
                break;
            }
        }
    }
    return result;
}

double assignment_value(const std::vector<std::vector<double>>& weight,
                        const std::vector<int>& row_to_col) {
    double v = 0.0;
    for (std::size_t r = 0; r < row_to_col.size(); ++r) v += weight[r][row_to_col[r]];
    return v;
}

}  // namespace ferry
