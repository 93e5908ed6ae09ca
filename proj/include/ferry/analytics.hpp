#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ferry/engine.hpp"
#include "ferry/rate_model.hpp"

namespace ferry {

// Adaptive Simpson quadrature with a relative error target. The integrand
// is evaluated as-is; reversed limits flip the sign.
namespace detail {
template <class F>
double integrate_adapt(F& f, double a, double m, double b, double fa, double fm, double fb,
                       double whole, double eps, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return integrate_adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           integrate_adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}
}  // namespace detail

template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-9) {
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw std::invalid_argument("integrate: limits must be finite");
    if (a == b) return 0.0;
    if (b < a) return -integrate(f, b, a, rel_tol);
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double eps = std::max(std::fabs(whole), 1e-12) * rel_tol;
    return detail::integrate_adapt(f, a, m, b, fa, fm, fb, whole, eps, 60);
}

// Closed-form delay oracle for the one-flow, two-robot system in its steady
// two-epoch rotation: each epoch one robot hauls the previous epoch's
// collected backlog (lambda*T) toward the sink while the other collects.
// The delivering robot transfers throughout, at rate R(d - v*t) while in
// transit and r_max once at the sink; the case records whether its cargo
// runs out before arrival (t_star <= d/v) or only at the sink.
enum class DelayCase { depletes_in_transit, depletes_at_sink };

struct DelayCaseResult {
    DelayCase delay_case = DelayCase::depletes_in_transit;
    double t_star = 0.0;           // within-epoch time the cargo empties, steps
    double avg_total_queue = 0.0;  // packets, time average over the epoch
    double avg_delay = 0.0;        // avg_total_queue / lambda
};

// Largest rate still fully deliverable during transit:
// (1/T) * integral of R(d - v t) over [0, d/v]. Requires d/(vT) < 1.
double lambda_hat_max(double d, double v, double T, const RateModel& model);

// Saturation rate of the rotation: the delivering robot's mean service
// [integral of R over the transit + (T - d/v) * r_max] / T. Requires d/(vT) < 1.
double lambda_max(double d, double v, double T, const RateModel& model);

// Case dispatch plus the cargo-empty time. lam <= lambda_hat_max solves
// lam*T = integral_0^t R(d - v s) ds by bisection on [0, d/v] (1e-9
// absolute); beyond that the tail drains linearly at r_max, so
// t_star = d/v + (lam*T - transit integral) / r_max. Requires
// 0 < lam < lambda_max; the boundary lam == lambda_hat_max counts as
// depleting in transit.
std::pair<DelayCase, double> solve_t_star(double lam, double d, double v, double T,
                                          const RateModel& model);

// Average backlog and delay of the steady rotation, on the branch
// solve_t_star picks. Same preconditions.
DelayCaseResult closed_form_delay(double lam, double d, double v, double T,
                                  const RateModel& model);

// Evaluates one branch's formula directly, regardless of which branch the
// dispatch would pick — the tool for checking the two branches agree where
// they meet (lam == lambda_hat_max). The in-transit branch needs
// lam <= lambda_hat_max for its t_star to exist; the at-sink branch needs
// lam <= lambda_max.
DelayCaseResult delay_for_case(DelayCase which, double lam, double d, double v, double T,
                               const RateModel& model);

// Little's-law delays from recorded metrics: post-warmup mean backlog of
// flow i divided by lam[i]; flows with lam[i] == 0 are reported absent.
std::vector<std::optional<double>> little_delay(const Metrics& metrics,
                                                const std::vector<double>& lam);

}  // namespace ferry
