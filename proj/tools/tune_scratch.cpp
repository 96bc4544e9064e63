// Scratch harness for dialing in flat-top spec defaults. Not installed.
#include <cstdio>
#include <numbers>

#include "risbeam/config.hpp"
#include "risbeam/eigenmode.hpp"
#include "risbeam/optimizer.hpp"
#include "risbeam/pattern.hpp"
#include "risbeam/shaping.hpp"

using namespace risbeam;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;

void describe(const char* name, const RadiationPattern& p, double lo, double hi) {
    const FlatTopMetrics m = flat_top_metrics(p, lo, hi);
    std::printf("%-18s ripple %6.2f dB  mean %7.2f dB  SLL %7.2f dB  trans %5.2f deg  "
                "w3 %6.2f deg  w10 %6.2f deg\n",
                name, m.passband_ripple_db, m.passband_mean_db, m.max_sidelobe_db,
                m.transition_width_deg, width_at_drop(p, 3.0), width_at_drop(p, 10.0));
}

}  // namespace

int main() {
    const RunConfig cfg = default_config();
    const CouplingMatrix T =
        coupling_matrix(cfg.linear_layout(), cfg.amaf_element, cfg.ris_element);
    const PrincipalEigenmode em = principal_eigenmode(T);
    const CophaseVector w_co = cophase_vector(em);
    const Eigen::VectorXd modulus = em.u1.cwiseAbs();

    const PhaseProfile binary = binary_vector({cfg.template_params.binary_groups, 40});
    const PhaseProfile ppf = widening_vector(40, 2.0, 1.0);
    const PhaseProfile eq2 = compose_template(w_co, binary, widening_vector(40, 0.0, 1.0));
    const PhaseProfile eq5 = compose_template(w_co, binary, ppf);

    const AngularGrid dense = AngularGrid::dense();
    const RadiationPattern pencil = linear_pattern(
        effective_weights(PhaseProfile{w_co.values, PhaseTag::cophase}, em), dense,
        cfg.ris_element);
    const RadiationPattern step2 =
        linear_pattern(effective_weights(eq2, em), dense, cfg.ris_element);
    const RadiationPattern step3 =
        linear_pattern(effective_weights(eq5, em), dense, cfg.ris_element);

    std::printf("pencil  w3 %.2f w10 %.2f\n", width_at_drop(pencil, 3.0),
                width_at_drop(pencil, 10.0));
    std::printf("step2   w3 %.2f w10 %.2f\n", width_at_drop(step2, 3.0),
                width_at_drop(step2, 10.0));
    std::printf("step3   w3 %.2f w10 %.2f\n", width_at_drop(step3, 3.0),
                width_at_drop(step3, 10.0));

    for (double edge : {8.0, 10.0, 12.0}) {
        describe("step2", step2, -edge * kDeg, edge * kDeg);
    }
    for (double edge : {14.0, 16.0, 18.0, 20.0, 22.0}) {
        describe("step3", step3, -edge * kDeg, edge * kDeg);
    }

    // final defaults check: wide, narrow, grid sensitivity, random init
    auto show = [&](const char* name, const OptimizationReport& r) {
        const RadiationPattern p = linear_pattern(
            effective_weights_from_modulus(r.phases, modulus), dense, cfg.ris_element);
        const double mean = r.metrics.passband_mean_db;
        double far = -300.0;
        for (Eigen::Index i = 0; i < dense.angles.size(); ++i)
            if (std::abs(dense.angles(i)) > 26.0 * kDeg)
                far = std::max(far, p.power_db(i));
        std::printf("%-14s conv %d iters %5d grid %5.3f->%5.3f dense %5.3f SLL2 %6.2f "
                    "far26 %6.2f trans %4.2f\n",
                    name, r.converged, r.iterations, r.initial_grid_ripple_db,
                    r.final_grid_ripple_db, r.metrics.passband_ripple_db,
                    r.metrics.max_sidelobe_db, far - mean,
                    r.metrics.transition_width_deg);
    };

    show("wide", optimize_phases(modulus, eq5, cfg.wide_spec, cfg.optimizer, cfg.ris_element));
    show("narrow",
         optimize_phases(modulus, eq5, cfg.narrow_spec, cfg.optimizer, cfg.ris_element));

    const GridSensitivityReport gs = grid_sensitivity_experiment(
        modulus, eq5, cfg.wide_spec, cfg.grid_sensitivity_points, cfg.optimizer,
        cfg.ris_element);
    for (const auto& e : gs.entries)
        std::printf("grid %2d: conv %d useful %d dense %6.3f gap %6.3f grid-ripple %5.3f\n",
                    e.grid_points, e.report.converged, e.useful, e.dense_ripple_db,
                    e.coverage_gap_db, e.report.final_grid_ripple_db);

    OptimizerConfig rand_cfg = cfg.optimizer;
    rand_cfg.random_init = true;
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        rand_cfg.seed = seed;
        char name[32];
        std::snprintf(name, sizeof(name), "random s=%llu", (unsigned long long)seed);
        show(name,
             optimize_phases(modulus, eq5, cfg.wide_spec, rand_cfg, cfg.ris_element));
    }
    return 0;
}
