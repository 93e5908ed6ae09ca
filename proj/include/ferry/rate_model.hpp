#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace ferry {

// Distance-dependent transfer rate
//
//     rate(d) = c * r_max / (c + d^eta)        [packets per time step]
//
// Monotone nonincreasing in d, equal to r_max at d = 0 and strictly
// positive everywhere. eta = 0 degenerates to the constant rate
// c * r_max / (c + 1), except at d = 0 where contact still yields r_max;
// large c with eta = 0 is a convenient way to get an almost
// distance-free channel in tests.
struct RateModel {
    double r_max = 1.0;  // peak rate at zero distance
    double eta = 2.0;    // path-loss exponent
    double c = 1.0;      // roll-off scale (distance^eta units)
};

inline void validate(const RateModel& m) {
    if (!(std::isfinite(m.r_max) && m.r_max > 0.0))
        throw std::invalid_argument("rate model: r_max must be finite and > 0, got " +
                                    std::to_string(m.r_max));
    if (!(std::isfinite(m.eta) && m.eta >= 0.0))
        throw std::invalid_argument("rate model: eta must be finite and >= 0, got " +
                                    std::to_string(m.eta));
    if (!(std::isfinite(m.c) && m.c > 0.0))
        throw std::invalid_argument("rate model: c must be finite and > 0, got " +
                                    std::to_string(m.c));
}

inline double rate_at(const RateModel& m, double d) {
    if (!(d >= 0.0))
        throw std::invalid_argument("rate_at: distance must be >= 0, got " + std::to_string(d));
    if (d == 0.0) return m.r_max;  // avoid 0^0 when eta == 0; contact rate is exact
    return m.c * m.r_max / (m.c + std::pow(d, m.eta));
}

}  // namespace ferry
