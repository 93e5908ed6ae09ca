#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ferry/geometry.hpp"
#include "ferry/network.hpp"
#include "ferry/rate_model.hpp"

using namespace ferry;

TEST_CASE("distance basics") {
    CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(distance({1, 1}, {1, 1}) == 0.0);
    CHECK(distance({-2, 0}, {2, 0}) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("distance symmetry and triangle inequality on random points") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int it = 0; it < 200; ++it) {
        const Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9);
        CHECK(distance(a, b) >= 0.0);
    }
}

TEST_CASE("rate model evaluates the roll-off curve") {
    const RateModel m{1.0, 2.0, 1.0};
    CHECK(rate_at(m, 0.0) == 1.0);
    CHECK(rate_at(m, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rate_at(m, 3.0) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("rate model is monotone nonincreasing and strictly positive") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ur(0.1, 8.0);
    std::uniform_real_distribution<double> ue(0.0, 4.0);
    std::uniform_real_distribution<double> ud(0.0, 500.0);
    for (int it = 0; it < 100; ++it) {
        const RateModel m{ur(rng), ue(rng), ur(rng)};
        double d1 = ud(rng), d2 = ud(rng);
        if (d1 > d2) std::swap(d1, d2);
        const double r1 = rate_at(m, d1), r2 = rate_at(m, d2);
        CHECK(r1 >= r2);
        CHECK(r2 > 0.0);
        CHECK(r1 <= m.r_max);
    }
}

TEST_CASE("rate model with eta = 0 keeps exact contact rate") {
    // The d == 0 case must not evaluate 0^0; at any positive distance the
    // rate is the eta-free constant.
    const RateModel m{2.0, 0.0, 1.0};
    CHECK(rate_at(m, 0.0) == 2.0);
    CHECK(rate_at(m, 5.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rate_at(m, 0.001) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rate model rejects bad parameters and negative distance") {
    CHECK_THROWS_AS(validate(RateModel{0.0, 2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(RateModel{1.0, -1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(RateModel{1.0, 2.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(rate_at(RateModel{}, -0.5), std::invalid_argument);
}

TEST_CASE("network validation catches structural violations") {
    NetworkSpec spec = make_row_network({25.0, 100.0}, {0.2, 0.2}, 4, 6.0, 100);
    CHECK_NOTHROW(validate(spec));

    SUBCASE("too many robots for the slots") {
        spec.n_robots = 5;
        spec.initial_robot_pos.push_back({0, 0});
        CHECK_THROWS_WITH_AS(validate(spec), doctest::Contains("N <= 2K"),
                             std::invalid_argument);
    }
    SUBCASE("negative arrival rate") {
        spec.flows[1].lambda = -0.1;
        CHECK_THROWS_AS(validate(spec), std::invalid_argument);
    }
    SUBCASE("nonpositive velocity") {
        spec.velocity = 0.0;
        CHECK_THROWS_AS(validate(spec), std::invalid_argument);
    }
    SUBCASE("epoch length below one") {
        spec.epoch_len = 0;
        CHECK_THROWS_AS(validate(spec), std::invalid_argument);
    }
    SUBCASE("robot position list of wrong size") {
        spec.initial_robot_pos.pop_back();
        CHECK_THROWS_AS(validate(spec), std::invalid_argument);
    }
}

TEST_CASE("row layout geometry and worst-case static distance") {
    const NetworkSpec spec = make_row_network({25.0, 100.0}, {0.1, 0.1}, 4, 6.0, 100);
    CHECK(spec.flows[0].src == Point{0.0, 50.0});
    CHECK(spec.flows[0].sink == Point{25.0, 50.0});
    CHECK(spec.flows[1].src == Point{0.0, 100.0});
    CHECK(spec.flows[1].sink == Point{100.0, 100.0});
    // Farthest pair is flow 0's source to flow 1's sink.
    CHECK(max_static_distance(spec) ==
          doctest::Approx(std::hypot(100.0, 50.0)).epsilon(1e-12));
}
