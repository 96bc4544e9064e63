#include <stdexcept>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "risbeam/eigenmode.hpp"
#include "risbeam/pattern.hpp"

using namespace risbeam;

namespace {

constexpr double kPi = std::numbers::pi;

EffectiveWeights from_vector(Eigen::VectorXcd w) {
    return {std::move(w)};
}

Eigen::VectorXcd random_weights(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd w(n);
    for (int i = 0; i < n; ++i)
        w(i) = std::complex<double>(gauss(rng), gauss(rng));
    return w;
}

}  // namespace

TEST_SUITE_BEGIN("pattern");

TEST_CASE("angular grids") {
    const AngularGrid g = AngularGrid::dense();
    CHECK(g.angles.size() == 1801);
    CHECK(g.angles(0) == doctest::Approx(-kPi / 2.0));
    CHECK(g.angles(900) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(AngularGrid::uniform(0.2, 0.1, 10), std::invalid_argument);
    AngularGrid bad;
    bad.angles = Eigen::VectorXd::LinSpaced(4, 0.0, 2.0);  // beyond pi/2
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("steering vector convention") {
    const Eigen::VectorXcd broadside = steering_vector(0.0, 5);
    for (int k = 0; k < 5; ++k)
        CHECK(std::abs(broadside(k) - std::complex<double>(1.0, 0.0)) < 1e-15);

    const Eigen::VectorXcd endfire = steering_vector(kPi / 2.0, 2);
    CHECK(std::abs(endfire(0) - std::complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(endfire(1) - std::complex<double>(-1.0, 0.0)) < 1e-12);

    for (double theta : {-1.2, -0.3, 0.0, 0.7}) {
        const Eigen::VectorXcd a = steering_vector(theta, 7);
        CHECK(a.squaredNorm() == doctest::Approx(7.0).epsilon(1e-14));
    }
}

TEST_CASE("linear pattern of the co-phased taper peaks at broadside") {
    const CouplingMatrix T = coupling_matrix(AmafRisLayout::linear(40, 2, 9.4),
                                             ElementPattern::patch(), ElementPattern::patch());
    const PrincipalEigenmode em = principal_eigenmode(T);
    const Eigen::VectorXd taper = em.u1.cwiseAbs();
    const RadiationPattern p =
        linear_pattern(from_vector(taper.cast<std::complex<double>>()), AngularGrid::dense(),
                       ElementPattern::patch(), Normalization::absolute);

    Eigen::Index peak_idx = 0;
    p.power_db.maxCoeff(&peak_idx);
    CHECK(p.grid.angles(peak_idx) == doctest::Approx(0.0).epsilon(1e-12));
    const double expected = 10.0 * std::log10(taper.sum() * taper.sum() * 4.0);
    CHECK(p.power_db(peak_idx) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("single-element weights reduce to the element factor") {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(8);
    w(5) = std::polar(0.8, 1.1);
    const AngularGrid grid = AngularGrid::uniform(-1.2, 1.2, 241);
    const RadiationPattern p =
        linear_pattern(from_vector(w), grid, ElementPattern::patch(), Normalization::absolute);
    for (Eigen::Index i = 0; i < grid.angles.size(); ++i) {
        const double element_db =
            10.0 * std::log10(element_gain(ElementPattern::patch(),
                                           std::abs(grid.angles(i))) *
                              std::norm(w(5)));
        CHECK(p.power_db(i) == doctest::Approx(element_db).epsilon(1e-9));
    }
}

TEST_CASE("global phase invariance") {
    const Eigen::VectorXcd w = random_weights(16, 7);
    const AngularGrid grid = AngularGrid::uniform(-kPi / 2.0, kPi / 2.0, 361);
    const RadiationPattern base =
        linear_pattern(from_vector(w), grid, ElementPattern::isotropic());
    for (double alpha : {0.3, 1.7, -2.9}) {
        const RadiationPattern rotated = linear_pattern(
            from_vector(std::polar(1.0, alpha) * w), grid, ElementPattern::isotropic());
        for (Eigen::Index i = 0; i < grid.angles.size(); ++i)
            CHECK(std::abs(rotated.power_db(i) - base.power_db(i)) < 1e-12);
    }
}

TEST_CASE("mirror symmetry for center-symmetric weights") {
    Eigen::VectorXcd w = random_weights(12, 21);
    for (int n = 0; n < 6; ++n)
        w(11 - n) = w(n);
    const RadiationPattern p =
        linear_pattern(from_vector(w), AngularGrid::dense(), ElementPattern::patch());
    const Eigen::Index n = p.grid.angles.size();
    for (Eigen::Index i = 0; i < n; ++i)
        CHECK(std::abs(p.power_db(i) - p.power_db(n - 1 - i)) < 1e-9);
}

TEST_CASE("peak bound holds for random weights") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const Eigen::VectorXcd w = random_weights(24, seed);
        CHECK_NOTHROW(linear_pattern(from_vector(w), AngularGrid::dense(),
                                     ElementPattern::isotropic()));
    }
}

TEST_CASE("planar weights outer product") {
    const Eigen::VectorXcd ones4 = Eigen::VectorXcd::Ones(4);
    const Eigen::MatrixXcd W1 = planar_weights(ones4, ones4);
    CHECK((W1 - Eigen::MatrixXcd::Ones(4, 4)).norm() < 1e-15);

    const Eigen::VectorXcd a = random_weights(6, 11);
    const Eigen::VectorXcd b = random_weights(9, 12);
    const Eigen::MatrixXcd W = planar_weights(a, b);
    REQUIRE(W.rows() == 6);
    REQUIRE(W.cols() == 9);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(W);
    CHECK(svd.singularValues()(1) < 1e-12 * svd.singularValues()(0));
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 9; ++c)
            CHECK(std::abs(W(r, c)) ==
                  doctest::Approx(std::abs(a(r)) * std::abs(b(c))).epsilon(1e-12));
}

TEST_CASE("rank-1 planar pattern separates into 1D factors") {
    const Eigen::VectorXcd w_el = random_weights(8, 31);
    const Eigen::VectorXcd w_az = random_weights(10, 32);
    const AngularGrid az = AngularGrid::uniform(-0.6, 0.6, 41);
    const AngularGrid el = AngularGrid::uniform(-0.5, 0.5, 37);

    const PlanarPattern p2 = planar_pattern(planar_weights(w_el, w_az), az, el,
                                            ElementPattern::isotropic(),
                                            Normalization::absolute);
    const RadiationPattern p_el =
        linear_pattern(from_vector(w_el), el, ElementPattern::isotropic(),
                       Normalization::absolute);
    const RadiationPattern p_az =
        linear_pattern(from_vector(w_az), az, ElementPattern::isotropic(),
                       Normalization::absolute);

    for (Eigen::Index i = 0; i < el.angles.size(); ++i)
        for (Eigen::Index j = 0; j < az.angles.size(); ++j) {
            const double expected = p_el.power_db(i) + p_az.power_db(j);
            if (expected < -200.0)
                continue;  // below the dB floor
            CHECK(std::abs(p2.power_db(i, j) - expected) < 1e-9);
        }
}

TEST_CASE("planar pattern peak for uniform weights") {
    const Eigen::MatrixXcd W = Eigen::MatrixXcd::Ones(4, 6);
    const AngularGrid az = AngularGrid::uniform(-0.5, 0.5, 101);
    const AngularGrid el = AngularGrid::uniform(-0.5, 0.5, 101);
    const PlanarPattern p =
        planar_pattern(W, az, el, ElementPattern::patch(), Normalization::absolute);
    Eigen::Index r = 0, c = 0;
    const double peak = p.power_db.maxCoeff(&r, &c);
    CHECK(az.angles(c) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(el.angles(r) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(peak == doctest::Approx(10.0 * std::log10(24.0 * 24.0 * 4.0)).epsilon(1e-12));
}

TEST_CASE("invisible grid corners get the floor") {
    const Eigen::MatrixXcd W = Eigen::MatrixXcd::Ones(3, 3);
    const AngularGrid wide = AngularGrid::uniform(-kPi / 2.0, kPi / 2.0, 21);
    const PlanarPattern p =
        planar_pattern(W, wide, wide, ElementPattern::isotropic(), Normalization::absolute);
    CHECK(p.power_db(0, 0) == pattern_db_floor);  // u^2 + v^2 = 2 at the corner
}

TEST_CASE("flat-top metrics") {
    SUBCASE("constant pattern has zero ripple") {
        RadiationPattern flat;
        flat.grid = AngularGrid::uniform(-0.5, 0.5, 101);
        flat.power_db = Eigen::VectorXd::Zero(101);
        flat.power_db.head(27).array() = -30.0;  // beyond the passband + guard
        flat.power_db.tail(27).array() = -30.0;
        const FlatTopMetrics m = flat_top_metrics(flat, -0.2, 0.2);
        CHECK(m.passband_ripple_db == 0.0);
        CHECK(m.max_sidelobe_db == doctest::Approx(-30.0));
    }
    SUBCASE("input validation") {
        RadiationPattern flat;
        flat.grid = AngularGrid::uniform(-0.5, 0.5, 101);
        flat.power_db = Eigen::VectorXd::Zero(101);
        CHECK_THROWS_AS(flat_top_metrics(flat, 0.2, -0.2), std::invalid_argument);
        CHECK_THROWS_AS(flat_top_metrics(flat, -1.0, 0.2), std::invalid_argument);
        CHECK_THROWS_AS(flat_top_metrics(flat, -0.01, 0.01), std::invalid_argument);
    }
}

TEST_CASE("width at drop for a uniform pencil beam") {
    const Eigen::VectorXcd w = Eigen::VectorXcd::Ones(40);
    const RadiationPattern p =
        linear_pattern(from_vector(w), AngularGrid::dense(), ElementPattern::isotropic());
    const double hpbw = width_at_drop(p, 3.0);
    // 0.886 lambda / (N d) radians for a uniform broadside array
    CHECK(hpbw == doctest::Approx(0.886 * 2.0 / 40.0 * 180.0 / kPi).epsilon(0.03));
    CHECK(width_at_drop(p, 10.0) > hpbw);
}

TEST_CASE("pattern CSV export") {
    const Eigen::VectorXcd w = Eigen::VectorXcd::Ones(4);
    const AngularGrid grid = AngularGrid::uniform(-0.1, 0.1, 11);
    const RadiationPattern p = linear_pattern(from_vector(w), grid,
                                              ElementPattern::isotropic());
    std::ostringstream os;
    write_pattern_csv(os, p);
    CHECK(os.str().rfind("angle_deg,power_db\n", 0) == 0);

    const PlanarPattern p2 = planar_pattern(Eigen::MatrixXcd::Ones(2, 2), grid, grid,
                                            ElementPattern::isotropic());
    std::ostringstream os2;
    write_planar_pattern_csv(os2, p2);
    CHECK(os2.str().rfind("az_deg,el_deg,power_db\n", 0) == 0);
}

TEST_SUITE_END();
