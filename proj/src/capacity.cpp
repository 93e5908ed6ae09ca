#include "ferry/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ferry {
namespace {

void check_dims(const RateVector& lam, int n_flows, int n_robots, double r_max,
                const char* who) {
    if (n_flows < 1) throw std::invalid_argument(std::string(who) + ": K must be >= 1");
    if (n_robots < 1 || n_robots > 2 * n_flows)
        throw std::invalid_argument(std::string(who) + ": need 1 <= N <= 2K");
    if (static_cast<int>(lam.size()) != n_flows)
        throw std::invalid_argument(std::string(who) + ": lam size " +
                                    std::to_string(lam.size()) + " != K = " +
                                    std::to_string(n_flows));
    if (!(std::isfinite(r_max) && r_max > 0.0))
        throw std::invalid_argument(std::string(who) + ": r_max must be finite and > 0");
    for (double x : lam)
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string(who) + ": lam entries must be finite");
}

double sum_of(const RateVector& lam) {
    return std::accumulate(lam.begin(), lam.end(), 0.0);
}

}  // namespace

std::vector<BasisAllocation> enumerate_basis(int n_flows, int n_robots, double r_max) {
    if (n_flows < 1) throw std::invalid_argument("enumerate_basis: K must be >= 1");
    if (n_robots < 1 || n_robots > 2 * n_flows)
        throw std::invalid_argument("enumerate_basis: need 1 <= N <= 2K");
    if (!(std::isfinite(r_max) && r_max > 0.0))
        throw std::invalid_argument("enumerate_basis: r_max must be finite and > 0");

    std::vector<BasisAllocation> out;
    std::vector<int> a(static_cast<std::size_t>(n_flows), 0);
    // Mixed-radix counter, flow 0 most significant.
    while (true) {
        if (std::accumulate(a.begin(), a.end(), 0) <= n_robots) {
            BasisAllocation b;
            b.robots_per_flow = a;
            b.service_rate.reserve(a.size());
            for (int ai : a) b.service_rate.push_back(ai * r_max / 2.0);
            out.push_back(std::move(b));
        }
        int i = n_flows - 1;
        while (i >= 0 && a[i] == 2) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
    }
    return out;
}

bool in_capacity_region(const RateVector& lam, int n_flows, int n_robots, double r_max) {
    check_dims(lam, n_flows, n_robots, r_max, "in_capacity_region");
    for (double x : lam)
        if (!(x >= 0.0 && x < r_max)) return false;
    return sum_of(lam) < r_max * n_robots / 2.0;
}

bool in_hull(const RateVector& lam, int n_flows, int n_robots, double r_max) {
    check_dims(lam, n_flows, n_robots, r_max, "in_hull");
    for (double x : lam)
        if (!(x >= 0.0 && x <= r_max)) return false;
    return sum_of(lam) <= r_max * n_robots / 2.0;
}

bool in_inner_bound(const RateVector& lam, double v, double T, double d_max,
                    int n_flows, int n_robots, double r_max) {
    check_dims(lam, n_flows, n_robots, r_max, "in_inner_bound");
    if (!(v > 0.0) || !(T > 0.0) || !(d_max >= 0.0))
        throw std::invalid_argument("in_inner_bound: need v > 0, T > 0, d_max >= 0");
    const double rho = d_max / (v * T);
    if (!(rho < 1.0))
        throw std::invalid_argument(
            "in_inner_bound: transit fraction d/(vT) = " + std::to_string(rho) +
            " must be < 1 (epoch too short to cover the worst detour)");
    const double r_eff = r_max * (1.0 - rho);
    for (double x : lam)
        if (!(x >= 0.0 && x < r_eff)) return false;
    return sum_of(lam) < r_eff * n_robots / 2.0;
}

std::optional<std::vector<double>> decompose(const RateVector& lam, int n_flows,
                                             int n_robots, double r_max) {
    check_dims(lam, n_flows, n_robots, r_max, "decompose");
    if (!in_hull(lam, n_flows, n_robots, r_max)) return std::nullopt;

    const int k = n_flows;
    // Fractional robot demand per flow: a_i robots at gamma = a_i * r_max / 2
    // would serve lam exactly.
    std::vector<double> frac(static_cast<std::size_t>(k));
    std::vector<int> base(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double a = 2.0 * lam[i] / r_max;  // in [0, 2]
        base[i] = static_cast<int>(std::floor(a));
        frac[i] = a - base[i];
    }

    // Dependent rounding: choose theta in [0,1) and round flow i up exactly
    // when some integer shifted by theta lands in [F_{i-1}, F_i), where F is
    // the prefix sum of the fractional parts. Integrating over theta weights
    // each rounding pattern by the length of its theta interval and
    // reproduces the fractional vector exactly; every pattern's total stays
    // within the robot budget because at most ceil(sum frac) flows round up.
    std::vector<double> prefix(static_cast<std::size_t>(k) + 1, 0.0);
    for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + frac[i];

    std::vector<double> cuts = {0.0, 1.0};
    for (int i = 1; i <= k; ++i) {
        const double f = prefix[i] - std::floor(prefix[i]);
        if (f > 0.0 && f < 1.0) cuts.push_back(f);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const std::vector<BasisAllocation> basis = enumerate_basis(n_flows, n_robots, r_max);
    std::map<std::vector<int>, std::size_t> index_of;
    for (std::size_t l = 0; l < basis.size(); ++l) index_of[basis[l].robots_per_flow] = l;

    std::vector<double> alpha(basis.size(), 0.0);
    double kept = 0.0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double width = cuts[s + 1] - cuts[s];
        if (width < 1e-15) continue;  // roundoff slivers carry no real mass
        const double theta = 0.5 * (cuts[s] + cuts[s + 1]);
        std::vector<int> pattern = base;
        for (int i = 0; i < k; ++i) {
            const double shift = std::ceil(prefix[i] - theta);
            if (shift + theta >= prefix[i] && shift + theta < prefix[i + 1]) pattern[i] += 1;
        }
        const auto it = index_of.find(pattern);
        if (it == index_of.end())
            throw std::logic_error("decompose: rounding produced a pattern outside the basis set");
        alpha[it->second] += width;
        kept += width;
    }
    if (kept <= 0.0) throw std::logic_error("decompose: no rounding pattern retained");
    for (double& a : alpha) a /= kept;
    return alpha;
}

ScheduleProgram synthesize_schedule(const std::vector<double>& alpha,
                                    const std::vector<BasisAllocation>& basis,
                                    const NetworkSpec& spec,
                                    int denom_cap) {
    validate(spec);
    if (alpha.size() != basis.size())
        throw std::invalid_argument("synthesize_schedule: alpha and basis sizes differ");
    if (denom_cap < 1) throw std::invalid_argument("synthesize_schedule: denom_cap must be >= 1");
    double total = 0.0;
    for (double a : alpha) {
        if (!std::isfinite(a) || a < -1e-12)
            throw std::invalid_argument("synthesize_schedule: coefficients must be >= 0");
        total += a;
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("synthesize_schedule: coefficients must sum to 1, got " +
                                    std::to_string(total));
    const int k = spec.n_flows();
    const int n = spec.n_robots;
    for (const BasisAllocation& b : basis)
        if (static_cast<int>(b.robots_per_flow.size()) != k)
            throw std::invalid_argument("synthesize_schedule: basis flow count != spec");

    // Largest-remainder rounding of alpha to epoch counts over denom_cap
    // slots, then reduce by the gcd so pure vertices stay period 2.
    std::vector<long long> count(alpha.size(), 0);
    std::vector<double> remainder(alpha.size(), 0.0);
    long long assigned = 0;
    for (std::size_t l = 0; l < alpha.size(); ++l) {
        const double want = std::max(alpha[l], 0.0) * denom_cap;
        count[l] = static_cast<long long>(std::floor(want));
        remainder[l] = want - static_cast<double>(count[l]);
        assigned += count[l];
    }
    std::vector<std::size_t> order(alpha.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return remainder[a] > remainder[b];
    });
    for (std::size_t i = 0; assigned < denom_cap && i < order.size(); ++i, ++assigned)
        ++count[order[i]];

    long long g = 0;
    for (long long c : count) g = std::gcd(g, c);
    if (g == 0) throw std::logic_error("synthesize_schedule: all epoch counts zero");
    for (long long& c : count) c /= g;

    ScheduleProgram program;
    for (std::size_t l = 0; l < basis.size(); ++l) {
        if (count[l] == 0) continue;

        // Absorb robots the basis leaves idle: raise the per-flow robot count
        // toward 2 in flow order. A parked robot at a source would collect
        // packets it never delivers, so spares must serve, not idle.
        std::vector<int> a = basis[l].robots_per_flow;
        int spare = n - std::accumulate(a.begin(), a.end(), 0);
        if (spare < 0)
            throw std::invalid_argument("synthesize_schedule: basis uses more robots than spec has");
        for (int i = 0; i < k && spare > 0; ++i) {
            const int add = std::min(2 - a[i], spare);
            a[i] += add;
            spare -= add;
        }

        // Collectors get the low robot indices in flow order; the second
        // robot of every two-robot flow follows. Mirror for the second part.
        std::vector<int> primary(static_cast<std::size_t>(k), -1);
        std::vector<int> secondary(static_cast<std::size_t>(k), -1);
        int next = 0;
        for (int i = 0; i < k; ++i)
            if (a[i] >= 1) primary[i] = next++;
        for (int i = 0; i < k; ++i)
            if (a[i] == 2) secondary[i] = next++;

        Allocation part_one(k, n), part_two(k, n);
        for (int i = 0; i < k; ++i) {
            if (primary[i] >= 0) {
                part_one.set(i, primary[i], +1);
                part_two.set(i, primary[i], -1);
            }
            if (secondary[i] >= 0) {
                part_one.set(i, secondary[i], -1);
                part_two.set(i, secondary[i], +1);
            }
        }
        validate(part_one);
        validate(part_two);
        program.entries.emplace_back(std::move(part_one), static_cast<int>(count[l]));
        program.entries.emplace_back(std::move(part_two), static_cast<int>(count[l]));
    }
    return program;
}

}  // namespace ferry
