// Command-line front end: runs the synthesis pipeline and writes the data
// artifacts (phase profiles, patterns, footprints, reports) for one config.
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "risbeam/config.hpp"
#include "risbeam/eigenmode.hpp"
#include "risbeam/energy.hpp"
#include "risbeam/footprint.hpp"
#include "risbeam/optimizer.hpp"
#include "risbeam/pattern.hpp"
#include "risbeam/propagation.hpp"
#include "risbeam/shaping.hpp"

namespace fs = std::filesystem;
using namespace risbeam;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// Everything downstream of the SVD, computed once per invocation.
struct Workspace {
    RunConfig cfg;
    CouplingMatrix coupling;
    PrincipalEigenmode eigenmode;
    CophaseVector cophase;
    Eigen::VectorXd modulus;
    PhaseProfile binary{Eigen::VectorXcd(), PhaseTag::binary};
    PhaseProfile ppf{Eigen::VectorXcd(), PhaseTag::ppf};
    PhaseProfile eq2{Eigen::VectorXcd(), PhaseTag::composed};  // binary o w~
    PhaseProfile eq5{Eigen::VectorXcd(), PhaseTag::composed};  // + PPF

    std::optional<OptimizationReport> wide;
    std::optional<OptimizationReport> narrow;

    explicit Workspace(const RunConfig& config)
        : cfg(config),
          coupling(coupling_matrix(cfg.linear_layout(), cfg.amaf_element, cfg.ris_element)),
          eigenmode(principal_eigenmode(coupling)),
          cophase(cophase_vector(eigenmode)),
          modulus(eigenmode.u1.cwiseAbs()) {
        binary = binary_vector({cfg.template_params.binary_groups, cfg.ris_elements});
        ppf = widening_vector(cfg.ris_elements, cfg.template_params.ppf_scale,
                              cfg.template_params.ppf_exponent);
        eq2 = compose_template(cophase, binary,
                               widening_vector(cfg.ris_elements, 0.0, 1.0));
        eq5 = compose_template(cophase, binary, ppf);
    }

    const OptimizationReport& optimized_wide() {
        if (!wide)
            wide = optimize_phases(modulus, eq5, cfg.wide_spec, cfg.optimizer,
                                   cfg.ris_element);
        return *wide;
    }

    const OptimizationReport& optimized_narrow() {
        if (!narrow)
            narrow = optimize_phases(modulus, eq5, cfg.narrow_spec, cfg.optimizer,
                                     cfg.ris_element);
        return *narrow;
    }

    AngularGrid dense_grid() const {
        return AngularGrid::uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0,
                                    cfg.pattern_grid_points);
    }

    // RIS configuration = shaping phases combined with the co-phasing vector
    PhaseProfile ris_configuration(const PhaseProfile& shaping) const {
        return PhaseProfile{shaping.values.cwiseProduct(cophase.values),
                            PhaseTag::optimized};
    }
};

std::ofstream open_output(const fs::path& dir, const std::string& name) {
    std::ofstream os(dir / name);
    if (!os)
        throw std::runtime_error("cannot write " + (dir / name).string());
    return os;
}

void write_resolved_config(const fs::path& dir, const RunConfig& cfg) {
    open_output(dir, "config_resolved.json") << dump_config(cfg);
}

void cmd_eigenmode(Workspace& ws, const fs::path& out) {
    {
        auto os = open_output(out, "u1.csv");
        write_magnitude_csv(os, ws.eigenmode.u1);
    }
    {
        auto os = open_output(out, "eigenmode_summary.txt");
        os.precision(17);
        os << "sigma1: " << ws.eigenmode.sigma1 << '\n';
        os << "f_over_d: " << f_over_d(ws.cfg.linear_layout()) << '\n';
        os << "v1:";
        for (Eigen::Index i = 0; i < ws.eigenmode.v1.size(); ++i)
            os << ' ' << ws.eigenmode.v1(i).real() << (ws.eigenmode.v1(i).imag() < 0 ? "" : "+")
               << ws.eigenmode.v1(i).imag() << 'j';
        os << '\n';
        os << "cophase_zero_entries: " << ws.cophase.zero_amplitude_indices.size() << '\n';
    }
    if (ws.cfg.export_coupling) {
        auto os = open_output(out, "T.csv");
        write_coupling_csv(os, ws.coupling);
    }
}

void cmd_template(Workspace& ws, const fs::path& out) {
    {
        auto os = open_output(out, "binary_vector.csv");
        write_phase_csv(os, ws.binary);
    }
    {
        auto os = open_output(out, "ppf_phases.csv");
        write_phase_csv(os, ws.ppf);
    }
    {
        auto os = open_output(out, "template_phases.csv");
        write_phase_csv(os, ws.eq5);
    }
    const AngularGrid grid = ws.dense_grid();
    {
        auto os = open_output(out, "pattern_step2.csv");
        write_pattern_csv(os, linear_pattern(effective_weights(ws.eq2, ws.eigenmode), grid,
                                             ws.cfg.ris_element));
    }
    {
        auto os = open_output(out, "pattern_step3.csv");
        write_pattern_csv(os, linear_pattern(effective_weights(ws.eq5, ws.eigenmode), grid,
                                             ws.cfg.ris_element));
    }
}

void cmd_pattern(Workspace& ws, const fs::path& out) {
    const AngularGrid grid = ws.dense_grid();
    {
        auto os = open_output(out, "pattern_linear.csv");
        write_pattern_csv(os, linear_pattern(effective_weights(ws.eq5, ws.eigenmode), grid,
                                             ws.cfg.ris_element));
    }
    const Eigen::VectorXcd eq2_eff = effective_weights(ws.eq2, ws.eigenmode).weights;
    const AngularGrid coarse =
        AngularGrid::uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0, 181);
    {
        auto os = open_output(out, "pattern_planar.csv");
        write_planar_pattern_csv(
            os, planar_pattern(planar_weights(eq2_eff, eq2_eff), coarse, coarse,
                               ws.cfg.ris_element));
    }
}

void write_report_section(std::ostream& os, const char* name, const OptimizationReport& r,
                          const FlatTopSpec& spec) {
    constexpr double rad2deg = 180.0 / std::numbers::pi;
    os << "[" << name << "]\n";
    os << "passband_deg: " << spec.passband_lo * rad2deg << ' '
       << spec.passband_hi * rad2deg << '\n';
    os << "grid_points: " << spec.grid_points << '\n';
    os << "converged: " << (r.converged ? "true" : "false") << '\n';
    os << "iterations: " << r.iterations << '\n';
    os << "initial_grid_ripple_db: " << r.initial_grid_ripple_db << '\n';
    os << "final_grid_ripple_db: " << r.final_grid_ripple_db << '\n';
    os << "dense_ripple_db: " << r.metrics.passband_ripple_db << '\n';
    os << "max_sidelobe_db: " << r.metrics.max_sidelobe_db << '\n';
    os << "transition_width_deg: " << r.metrics.transition_width_deg << '\n';
    os << "objective_initial: " << r.objective_trace.front() << '\n';
    os << "objective_final: " << r.objective_trace.back() << '\n';
}

void cmd_optimize(Workspace& ws, const fs::path& out) {
    const OptimizationReport& wide = ws.optimized_wide();
    const OptimizationReport& narrow = ws.optimized_narrow();

    {
        auto os = open_output(out, "optimized_phases_wide.csv");
        write_phase_csv(os, ws.ris_configuration(wide.phases));
    }
    {
        auto os = open_output(out, "optimized_phases_narrow.csv");
        write_phase_csv(os, ws.ris_configuration(narrow.phases));
    }
    const AngularGrid grid = ws.dense_grid();
    {
        auto os = open_output(out, "pattern_optimized_wide.csv");
        write_pattern_csv(os,
                          linear_pattern(effective_weights_from_modulus(wide.phases,
                                                                        ws.modulus),
                                         grid, ws.cfg.ris_element));
    }
    {
        auto os = open_output(out, "pattern_optimized_narrow.csv");
        write_pattern_csv(os,
                          linear_pattern(effective_weights_from_modulus(narrow.phases,
                                                                        ws.modulus),
                                         grid, ws.cfg.ris_element));
    }
    {
        auto os = open_output(out, "optimize_report.txt");
        os.precision(6);
        write_report_section(os, "wide", wide, ws.cfg.wide_spec);
        os << '\n';
        write_report_section(os, "narrow", narrow, ws.cfg.narrow_spec);
        os << "\n[grid_sensitivity]\n";
        const GridSensitivityReport gs = grid_sensitivity_experiment(
            ws.modulus, ws.eq5, ws.cfg.wide_spec, ws.cfg.grid_sensitivity_points,
            ws.cfg.optimizer, ws.cfg.ris_element);
        write_grid_sensitivity_table(os, gs);
    }
}

void cmd_footprint(Workspace& ws, const fs::path& out) {
    const Eigen::VectorXcd eq2_eff = effective_weights(ws.eq2, ws.eigenmode).weights;
    Eigen::VectorXcd w_el = eq2_eff;
    Eigen::VectorXcd w_az = eq2_eff;
    if (ws.cfg.footprint_mode == FootprintMode::az_widened)
        w_az = effective_weights_from_modulus(ws.optimized_wide().phases, ws.modulus).weights;
    else if (ws.cfg.footprint_mode == FootprintMode::el_widened)
        w_el = effective_weights_from_modulus(ws.optimized_wide().phases, ws.modulus).weights;

    const FootprintGrid grid = ground_footprint(w_el, w_az, ws.cfg.ris_element,
                                                ws.cfg.scenario);
    {
        auto os = open_output(out, "footprint.csv");
        write_footprint_csv(os, grid);
    }
    {
        auto os = open_output(out, "footprint_grid.txt");
        write_footprint_raster(os, grid);
    }
}

void cmd_energy(const RunConfig& cfg, const fs::path& out) {
    // the centered feed yields the uniform eigenmode; no SVD required here
    const Eigen::VectorXcd v1 = Eigen::VectorXcd::Constant(
        cfg.amaf_pa_count, 1.0 / std::sqrt(static_cast<double>(cfg.amaf_pa_count)));
    const DcPowerReport amaf = amaf_ris_dc_power(v1, cfg.budget);
    const DcPowerReport active = active_array_dc_power(cfg.active_elements, cfg.budget);
    auto os = open_output(out, "energy_report.txt");
    write_energy_report(os, amaf, active);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AMAF-RIS flat-top beam synthesis toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "configuration file (JSON, // comments allowed)");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_option("--seed", seed, "optimizer seed (overrides config)");

    const std::vector<std::string> names = {"eigenmode", "template", "optimize", "pattern",
                                            "footprint", "energy", "pipeline"};
    for (const std::string& n : names)
        app.add_subcommand(n);

    CLI11_PARSE(app, argc, argv);
    const std::string cmd = app.get_subcommands().front()->get_name();

    RunConfig cfg;
    try {
        cfg = config_path.empty() ? default_config() : load_config(config_path);
        if (!out_dir.empty())
            cfg.output_dir = out_dir;
        if (seed)
            cfg.optimizer.seed = *seed;
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        const fs::path out(cfg.output_dir);
        fs::create_directories(out);
        write_resolved_config(out, cfg);

        if (cmd == "energy") {  // independent of the SVD pipeline
            cmd_energy(cfg, out);
            return 0;
        }

        Workspace ws(cfg);
        if (cmd == "eigenmode") {
            cmd_eigenmode(ws, out);
        } else if (cmd == "template") {
            cmd_template(ws, out);
        } else if (cmd == "pattern") {
            cmd_pattern(ws, out);
        } else if (cmd == "optimize") {
            cmd_optimize(ws, out);
        } else if (cmd == "footprint") {
            cmd_footprint(ws, out);
        } else if (cmd == "pipeline") {
            cmd_eigenmode(ws, out);
            cmd_template(ws, out);
            cmd_pattern(ws, out);
            cmd_optimize(ws, out);
            cmd_footprint(ws, out);
            cmd_energy(cfg, out);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}
