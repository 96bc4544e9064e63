#include <stdexcept>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "risbeam/geometry.hpp"

using namespace risbeam;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("element positions are centered") {
    const auto pair = element_positions({2, 1.0});
    CHECK(pair[0] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(pair[1] == doctest::Approx(0.5).epsilon(1e-15));

    const auto forty = element_positions({40, 1.0});
    CHECK(forty.front() == doctest::Approx(-19.5).epsilon(1e-15));
    CHECK(forty.back() == doctest::Approx(19.5).epsilon(1e-15));

    const auto single = element_positions({1, 1.0});
    CHECK(single.size() == 1);
    CHECK(single[0] == 0.0);

    for (int n : {1, 2, 7, 40}) {
        const auto pos = element_positions({n, 0.7});
        const double mean = std::accumulate(pos.begin(), pos.end(), 0.0) / n;
        CHECK(std::abs(mean) < 1e-12);
    }
}

TEST_CASE("invalid layouts are rejected") {
    CHECK_THROWS_AS(element_positions({0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(element_positions({4, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(element_positions({4, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(AmafRisLayout::linear(40, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(AmafRisLayout::linear(40, 2, -9.4), std::invalid_argument);
}

TEST_CASE("f_over_d reproduces the design ratio") {
    CHECK(std::abs(f_over_d(AmafRisLayout::linear(40, 2, 9.4)) - 0.235) < 1e-15);
    CHECK(f_over_d(AmafRisLayout::linear(10, 2, 10.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(f_over_d(AmafRisLayout::linear(20, 2, 9.4)) - 0.47) < 1e-15);
}

TEST_CASE("ray geometry basics") {
    const auto layout = AmafRisLayout::linear(40, 2, 9.4);

    SUBCASE("aligned feed and element") {
        // AMAF m=1 sits at +0.5, RIS i=20 sits at +0.5
        const RayGeometry g = ray_geometry(layout, 1, 20);
        CHECK(g.distance == doctest::Approx(9.4).epsilon(1e-15));
        CHECK(g.departure_angle == 0.0);
        CHECK(g.arrival_angle == 0.0);
    }

    SUBCASE("diagonal ray, Pythagoras oracle") {
        // m=1 at +0.5, n=0 at -19.5: lateral 20, depth 9.4
        const RayGeometry g = ray_geometry(layout, 1, 0);
        CHECK(g.distance == doctest::Approx(22.09886874932742).epsilon(1e-14));
        CHECK(g.departure_angle == doctest::Approx(1.1314354395103052).epsilon(1e-14));
    }

    SUBCASE("on-axis for single-feed layout") {
        const auto single = AmafRisLayout::linear(1, 1, 9.4);
        const RayGeometry g = ray_geometry(single, 0, 0);
        CHECK(g.distance == doctest::Approx(9.4).epsilon(1e-15));
        CHECK(g.departure_angle == 0.0);
    }
}

TEST_CASE("ray geometry invariants") {
    const auto layout = AmafRisLayout::linear(40, 2, 9.4);
    const int n_p = layout.ris.size();
    const int n_a = layout.amaf.size();

    for (int m = 0; m < n_a; ++m) {
        double nearest = 1e300;
        for (int n = 0; n < n_p; ++n) {
            const RayGeometry g = ray_geometry(layout, m, n);
            const RayGeometry mirror = ray_geometry(layout, n_a - 1 - m, n_p - 1 - n);
            CHECK(std::abs(g.distance - mirror.distance) < 1e-12);
            CHECK(g.departure_angle == g.arrival_angle);
            CHECK(g.distance >= layout.focal_length);
            CHECK(g.departure_angle >= 0.0);
            CHECK(g.departure_angle < std::numbers::pi / 2.0);
            nearest = std::min(nearest, g.distance);
        }
        // the minimum over n occurs at the element(s) nearest the feed axis
        const double feed_x = layout.amaf.position(m).x;
        double best_offset = 1e300;
        int best_n = -1;
        for (int n = 0; n < n_p; ++n) {
            const double off = std::abs(layout.ris.position(n).x - feed_x);
            if (off < best_offset) {
                best_offset = off;
                best_n = n;
            }
        }
        CHECK(ray_geometry(layout, m, best_n).distance == doctest::Approx(nearest));
    }
}

TEST_CASE("planar faces index row-major") {
    const auto layout = AmafRisLayout::planar(3, 2, 5.0);
    CHECK(layout.ris.size() == 9);
    CHECK(layout.amaf.size() == 4);
    CHECK(layout.ris.is_planar());
    const Vec3 p = layout.ris.position(5);  // row 1, col 2
    CHECK(p.x == doctest::Approx(1.0));
    CHECK(p.y == doctest::Approx(0.0));
    CHECK_THROWS_AS(layout.ris.position(9), std::invalid_argument);
}

TEST_SUITE_END();
