#include <stdexcept>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "risbeam/footprint.hpp"

using namespace risbeam;

namespace {

DeploymentScenario flat_scenario() {
    DeploymentScenario sc;
    sc.mount_height_m = 10.0;
    sc.downtilt_rad = 0.0;  // boresight straight down
    sc.x_min_m = -40.0;
    sc.x_max_m = 40.0;
    sc.y_min_m = -40.0;
    sc.y_max_m = 40.0;
    sc.resolution_m = 1.0;
    return sc;
}

}  // namespace

TEST_SUITE_BEGIN("footprint");

TEST_CASE("scenario validation") {
    DeploymentScenario sc = flat_scenario();
    CHECK_NOTHROW(sc.validate());
    sc.mount_height_m = 0.0;
    CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
    sc = flat_scenario();
    sc.resolution_m = -1.0;
    CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
    sc = flat_scenario();
    sc.x_max_m = sc.x_min_m;
    CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
}

TEST_CASE("single isotropic element: monotone path loss") {
    const Eigen::VectorXcd one = Eigen::VectorXcd::Ones(1);
    const FootprintGrid g = ground_footprint(one, one, ElementPattern::isotropic(),
                                             flat_scenario());
    CHECK(g.power_db.maxCoeff() == 0.0);  // peak normalization is exact

    Eigen::Index pr = 0, pc = 0;
    g.power_db.maxCoeff(&pr, &pc);
    CHECK(g.x_m(pc) == doctest::Approx(0.0));  // directly below the array
    CHECK(g.y_m(pr) == doctest::Approx(0.0));

    // strictly decreasing along the +x axis from the sub-array point
    for (Eigen::Index c = pc + 1; c < g.x_m.size(); ++c)
        CHECK(g.power_db(pr, c) < g.power_db(pr, c - 1));
}

TEST_CASE("zero-tilt symmetric weights: reflection invariant map") {
    Eigen::VectorXcd w(8);
    for (int n = 0; n < 8; ++n)
        w(n) = std::polar(1.0, 0.3 * std::min(n, 7 - n));  // center-symmetric
    const FootprintGrid g = ground_footprint(w, w, ElementPattern::patch(), flat_scenario());
    const Eigen::Index rows = g.power_db.rows();
    const Eigen::Index cols = g.power_db.cols();
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) {
            CHECK(g.power_db(r, c) ==
                  doctest::Approx(g.power_db(rows - 1 - r, c)).epsilon(1e-6));
            CHECK(g.power_db(r, c) ==
                  doctest::Approx(g.power_db(r, cols - 1 - c)).epsilon(1e-6));
        }
}

TEST_CASE("downtilt moves the pencil-beam peak to the boresight point") {
    DeploymentScenario sc = flat_scenario();
    sc.downtilt_rad = std::atan(2.0);  // boresight meets ground at x = 20 m
    sc.x_min_m = -10.0;
    sc.x_max_m = 70.0;
    sc.resolution_m = 0.5;
    const Eigen::VectorXcd pencil = Eigen::VectorXcd::Ones(40);
    const FootprintGrid g =
        ground_footprint(pencil, pencil, ElementPattern::patch(), sc);
    Eigen::Index pr = 0, pc = 0;
    g.power_db.maxCoeff(&pr, &pc);
    CHECK(std::abs(g.x_m(pc) - 20.0) < 3.0);
    CHECK(g.y_m(pr) == doctest::Approx(0.0));
}

TEST_CASE("cells behind the array plane get the floor") {
    DeploymentScenario sc = flat_scenario();
    sc.downtilt_rad = std::atan(2.0);
    const Eigen::VectorXcd one = Eigen::VectorXcd::Ones(1);
    const FootprintGrid g = ground_footprint(one, one, ElementPattern::isotropic(), sc);
    // w = x sin(t) + h cos(t) < 0 for x << -h/tan(t) = -5 m
    CHECK(g.power_db(g.y_m.size() / 2, 0) < -200.0);  // x = -40 m
}

TEST_CASE("general and rank-1 paths agree") {
    Eigen::VectorXcd w_el(4), w_az(5);
    for (int n = 0; n < 4; ++n)
        w_el(n) = std::polar(1.0, 0.4 * n);
    for (int n = 0; n < 5; ++n)
        w_az(n) = std::polar(1.0, -0.2 * n * n);
    DeploymentScenario sc = flat_scenario();
    sc.resolution_m = 4.0;
    const FootprintGrid a = ground_footprint(w_el, w_az, ElementPattern::patch(), sc);
    const FootprintGrid b =
        ground_footprint(Eigen::MatrixXcd(w_el * w_az.adjoint()), ElementPattern::patch(), sc);
    CHECK((a.power_db - b.power_db).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("extent measurement and exports") {
    // wide along x, narrow along y: elongation must be detected
    const Eigen::VectorXcd narrow = Eigen::VectorXcd::Ones(16);
    const Eigen::VectorXcd wide = Eigen::VectorXcd::Ones(4);
    DeploymentScenario sc = flat_scenario();
    sc.resolution_m = 0.5;
    // azimuth (y axis) gets the small array -> broad beam along y
    const FootprintGrid g = ground_footprint(narrow, wide, ElementPattern::patch(), sc);
    const double ext_x = footprint_extent_m(g, true);
    const double ext_y = footprint_extent_m(g, false);
    CHECK(ext_y > ext_x);

    std::ostringstream csv;
    write_footprint_csv(csv, g);
    CHECK(csv.str().rfind("x_m,y_m,power_db\n", 0) == 0);
    std::ostringstream raster;
    write_footprint_raster(raster, g);
    CHECK(raster.str().rfind("# rows:", 0) == 0);
}

TEST_SUITE_END();
