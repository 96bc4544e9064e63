#include <stdexcept>
#include <cmath>
#include <complex>
#include <sstream>

#include "doctest.h"
#include "risbeam/energy.hpp"

using namespace risbeam;

namespace {

PowerBudget paper_budget() {
    PowerBudget b;
    b.p_rf_dbm = 20.0;
    b.pa_efficiency = 0.3;
    b.splitter_stages = {{4, 1.0}, {4, 1.0}, {10, 1.0}, {10, 1.0}};
    return b;
}

}  // namespace

TEST_SUITE_BEGIN("energy");

TEST_CASE("amaf-ris dc power for the uniform 2x2 eigenmode") {
    const Eigen::VectorXcd v1 = Eigen::VectorXcd::Constant(4, 0.5);
    const DcPowerReport r = amaf_ris_dc_power(v1, paper_budget());
    CHECK(r.pa_count == 4);
    CHECK(r.per_pa_max_mw == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(r.per_pa_max_dbm == doctest::Approx(13.979400086720377).epsilon(1e-12));
    CHECK(r.total_dc_mw == doctest::Approx(1000.0 / 3.0).epsilon(1e-12));
    // the quoted 335 mW uses dB-rounded intermediate values
    CHECK(std::abs(r.total_dc_mw - 335.0) / 335.0 < 0.015);
}

TEST_CASE("amaf-ris dc power edge cases") {
    PowerBudget b = paper_budget();

    SUBCASE("single element carries everything") {
        const Eigen::VectorXcd v1 = Eigen::VectorXcd::Ones(1);
        const DcPowerReport r = amaf_ris_dc_power(v1, b);
        CHECK(r.per_pa_max_mw == doctest::Approx(100.0).epsilon(1e-12));
        CHECK(r.total_dc_mw == doctest::Approx(100.0 / 0.3).epsilon(1e-12));
    }

    SUBCASE("uniform split over n elements") {
        for (int n : {2, 4, 8}) {
            const Eigen::VectorXcd v1 =
                Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(double(n)));
            const DcPowerReport r = amaf_ris_dc_power(v1, b);
            CHECK(r.per_pa_max_mw == doctest::Approx(100.0 / n).epsilon(1e-12));
        }
    }

    SUBCASE("global phase of v1 is immaterial") {
        Eigen::VectorXcd v1 = Eigen::VectorXcd::Constant(4, 0.5);
        const double base = amaf_ris_dc_power(v1, b).total_dc_mw;
        v1 *= std::polar(1.0, 1.23);
        CHECK(amaf_ris_dc_power(v1, b).total_dc_mw == doctest::Approx(base).epsilon(1e-12));
    }

    SUBCASE("zero-norm v1 rejected") {
        CHECK_THROWS_AS(amaf_ris_dc_power(Eigen::VectorXcd::Zero(4), b),
                        std::invalid_argument);
    }

    SUBCASE("bad efficiency rejected") {
        b.pa_efficiency = 0.0;
        CHECK_THROWS_AS(amaf_ris_dc_power(Eigen::VectorXcd::Ones(1), b),
                        std::invalid_argument);
    }
}

TEST_CASE("splitter loss") {
    CHECK(splitter_loss_db(paper_budget().splitter_stages) ==
          doctest::Approx(36.04119982655925).epsilon(1e-12));
    CHECK(splitter_loss_db({{2, 0.0}}) == doctest::Approx(3.010299956639812).epsilon(1e-12));
    CHECK(splitter_loss_db({{8, 0.0}, {8, 0.0}}) ==
          doctest::Approx(10.0 * std::log10(64.0)).epsilon(1e-12));
    CHECK_THROWS_AS(splitter_loss_db({}), std::invalid_argument);
    CHECK_THROWS_AS(splitter_loss_db({{1, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(splitter_loss_db({{4, -0.5}}), std::invalid_argument);
}

TEST_CASE("active array dc power via the splitter network") {
    const DcPowerReport r = active_array_dc_power(1600, paper_budget());
    CHECK(r.pa_count == 1);
    CHECK(r.per_pa_max_dbm == doctest::Approx(24.0).epsilon(1e-12));
    CHECK(r.per_pa_max_mw == doctest::Approx(251.18864315095797).epsilon(1e-12));
    CHECK(r.total_dc_mw == doctest::Approx(837.2954771698599).epsilon(1e-12));
    CHECK(std::abs(r.total_dc_mw - 837.0) / 837.0 < 0.015);

    SUBCASE("the amaf-ris architecture wins") {
        const DcPowerReport amaf =
            amaf_ris_dc_power(Eigen::VectorXcd::Constant(4, 0.5), paper_budget());
        CHECK(amaf.total_dc_mw < r.total_dc_mw);
    }

    SUBCASE("lossless splitter conserves power") {
        PowerBudget b = paper_budget();
        b.splitter_stages = {{40, 0.0}};
        const DcPowerReport lossless = active_array_dc_power(40, b);
        CHECK(lossless.per_pa_max_mw == doctest::Approx(100.0).epsilon(1e-12));
        CHECK(lossless.total_dc_mw == doctest::Approx(100.0 / 0.3).epsilon(1e-12));
    }

    SUBCASE("conservation floor") {
        // requested PA power >= P_RF whenever losses are nonnegative
        for (int n : {100, 1000, 1600}) {
            const DcPowerReport rep = active_array_dc_power(n, paper_budget());
            CHECK(rep.per_pa_max_mw >= 100.0 - 1e-9);
        }
    }

    SUBCASE("insufficient fan-out rejected") {
        PowerBudget b = paper_budget();
        b.splitter_stages = {{4, 1.0}};
        CHECK_THROWS_AS(active_array_dc_power(1600, b), std::invalid_argument);
    }
}

TEST_CASE("monotonicity in efficiency and insertion loss") {
    PowerBudget lossy = paper_budget();
    for (SplitterStage& s : lossy.splitter_stages)
        s.insertion_loss_db += 1.0;
    CHECK(active_array_dc_power(1600, lossy).total_dc_mw >
          active_array_dc_power(1600, paper_budget()).total_dc_mw);

    PowerBudget efficient = paper_budget();
    efficient.pa_efficiency = 0.5;
    CHECK(active_array_dc_power(1600, efficient).total_dc_mw <
          active_array_dc_power(1600, paper_budget()).total_dc_mw);
    CHECK(amaf_ris_dc_power(Eigen::VectorXcd::Ones(1), efficient).total_dc_mw <
          amaf_ris_dc_power(Eigen::VectorXcd::Ones(1), paper_budget()).total_dc_mw);
}

TEST_CASE("report text") {
    const DcPowerReport amaf =
        amaf_ris_dc_power(Eigen::VectorXcd::Constant(4, 0.5), paper_budget());
    const DcPowerReport active = active_array_dc_power(1600, paper_budget());
    std::ostringstream os;
    write_energy_report(os, amaf, active);
    const std::string text = os.str();
    CHECK(text.find("amaf-ris") != std::string::npos);
    CHECK(text.find("333.3") != std::string::npos);
    CHECK(text.find("837.3") != std::string::npos);
    CHECK(text.find("winner: amaf-ris") != std::string::npos);
}

TEST_SUITE_END();
