#include "ferry/analytics.hpp"

#include <string>

namespace ferry {
namespace {

void check_geometry(double d, double v, double T, const RateModel& model, const char* who) {
    validate(model);
    if (!(std::isfinite(d) && d >= 0.0))
        throw std::invalid_argument(std::string(who) + ": d must be finite and >= 0");
    if (!(std::isfinite(v) && v > 0.0))
        throw std::invalid_argument(std::string(who) + ": v must be finite and > 0");
    if (!(std::isfinite(T) && T > 0.0))
        throw std::invalid_argument(std::string(who) + ": T must be finite and > 0");
    if (!(d / (v * T) < 1.0))
        throw std::invalid_argument(std::string(who) + ": requires d/(vT) < 1, got " +
                                    std::to_string(d / (v * T)));
}

// The in-transit distance d - v*t can round a hair below zero at t = d/v;
// clamp so the rate curve never sees a negative argument.
double transit_rate(const RateModel& model, double dist) {
    return rate_at(model, std::fmax(0.0, dist));
}

// Cumulative service of the delivering robot while in transit:
// G(t) = integral_0^t R(d - v s) ds for t in [0, d/v].
double transit_service(double t, double d, double v, const RateModel& model) {
    return integrate([&](double s) { return transit_rate(model, d - v * s); }, 0.0, t);
}

}  // namespace

double lambda_hat_max(double d, double v, double T, const RateModel& model) {
    check_geometry(d, v, T, model, "lambda_hat_max");
    return transit_service(d / v, d, v, model) / T;
}

double lambda_max(double d, double v, double T, const RateModel& model) {
    check_geometry(d, v, T, model, "lambda_max");
    return (transit_service(d / v, d, v, model) + (T - d / v) * model.r_max) / T;
}

std::pair<DelayCase, double> solve_t_star(double lam, double d, double v, double T,
                                          const RateModel& model) {
    check_geometry(d, v, T, model, "solve_t_star");
    const double lam_max = lambda_max(d, v, T, model);
    if (!(lam > 0.0 && lam < lam_max))
        throw std::invalid_argument("solve_t_star: need 0 < lam < lambda_max = " +
                                    std::to_string(lam_max) + ", got " + std::to_string(lam));

    const double transit_time = d / v;
    const double transit_total = transit_service(transit_time, d, v, model);
    const double need = lam * T;
    if (need <= transit_total) {
        // Cargo runs out mid-transit: invert the monotone cumulative service.
        double lo = 0.0, hi = transit_time;
        while (hi - lo > 1e-9) {
            const double mid = 0.5 * (lo + hi);
            if (transit_service(mid, d, v, model) < need)
                lo = mid;
            else
                hi = mid;
        }
        return {DelayCase::depletes_in_transit, 0.5 * (lo + hi)};
    }
    return {DelayCase::depletes_at_sink, transit_time + (need - transit_total) / model.r_max};
}

DelayCaseResult delay_for_case(DelayCase which, double lam, double d, double v, double T,
                               const RateModel& model) {
    check_geometry(d, v, T, model, "delay_for_case");
    if (!(lam > 0.0))
        throw std::invalid_argument("delay_for_case: need lam > 0");

    const double transit_time = d / v;
    const double transit_total = transit_service(transit_time, d, v, model);
    const double need = lam * T;

    DelayCaseResult r;
    r.delay_case = which;
    if (which == DelayCase::depletes_in_transit) {
        if (need > transit_total * (1.0 + 1e-12))
            throw std::invalid_argument(
                "delay_for_case: in-transit branch needs lam <= lambda_hat_max");
        const double capped = std::min(need, transit_total);
        double lo = 0.0, hi = transit_time;
        while (hi - lo > 1e-9) {
            const double mid = 0.5 * (lo + hi);
            if (transit_service(mid, d, v, model) < capped)
                lo = mid;
            else
                hi = mid;
        }
        const double t_star = 0.5 * (lo + hi);
        // Inner double integral of G collapses by Fubini to a single one.
        const double service_area = integrate(
            [&](double t) { return (t_star - t) * transit_rate(model, d - v * t); }, 0.0, t_star);
        r.t_star = t_star;
        r.avg_total_queue = lam * t_star + lam * T / 2.0 - service_area / T;
    } else {
        const double t_star = transit_time + (need - transit_total) / model.r_max;
        if (t_star > T * (1.0 + 1e-12))
            throw std::invalid_argument("delay_for_case: at-sink branch needs lam <= lambda_max");
        const double service_area = integrate(
            [&](double t) { return (transit_time - t) * transit_rate(model, d - v * t); }, 0.0,
            transit_time);
        const double at_sink = t_star - transit_time;
        r.t_star = t_star;
        r.avg_total_queue = lam * t_star + lam * T / 2.0 - service_area / T -
                            at_sink * transit_total / T -
                            model.r_max * at_sink * at_sink / (2.0 * T);
    }
    r.avg_delay = r.avg_total_queue / lam;
    return r;
}

DelayCaseResult closed_form_delay(double lam, double d, double v, double T,
                                  const RateModel& model) {
    const auto [which, t_star] = solve_t_star(lam, d, v, T, model);
    DelayCaseResult r = delay_for_case(which, lam, d, v, T, model);
    r.t_star = t_star;  // keep the dispatcher's root; same value up to tolerance
    return r;
}

std::vector<std::optional<double>> little_delay(const Metrics& metrics,
                                                const std::vector<double>& lam) {
    if (static_cast<int>(lam.size()) != metrics.n_flows)
        throw std::invalid_argument("little_delay: lam size does not match metrics flows");
    std::vector<std::optional<double>> out;
    out.reserve(lam.size());
    for (int i = 0; i < metrics.n_flows; ++i) {
        if (!(lam[i] >= 0.0) || !std::isfinite(lam[i]))
            throw std::invalid_argument("little_delay: lam entries must be finite and >= 0");
        if (lam[i] == 0.0) {
            out.emplace_back(std::nullopt);
            continue;
        }
        const auto& series = metrics.queue_series[static_cast<std::size_t>(i)];
        if (series.empty())
            throw std::invalid_argument("little_delay: metrics carry an empty queue series");
        const auto warmup = static_cast<std::size_t>(
            std::floor(metrics.warmup_fraction * static_cast<double>(series.size())));
        double acc = 0.0;
        for (std::size_t t = warmup; t < series.size(); ++t) acc += series[t];
        const double avg = acc / static_cast<double>(series.size() - warmup);
        out.emplace_back(avg / lam[i]);
    }
    return out;
}

}  // namespace ferry
