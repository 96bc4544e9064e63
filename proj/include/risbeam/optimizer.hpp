#ifndef RISBEAM_OPTIMIZER_HPP
#define RISBEAM_OPTIMIZER_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "risbeam/pattern.hpp"
#include "risbeam/shaping.hpp"

namespace risbeam {

// Flat-top target on a discretized angular grid. The passband is sampled at
// grid_points equispaced angles (endpoints included); stopbands at a fixed
// internal step. All angles in radians.
struct FlatTopSpec {
    double passband_lo = 0.0;
    double passband_hi = 0.0;
    std::vector<std::pair<double, double>> stopbands;
    int grid_points = 15;
    double sidelobe_target_db = -20.0;  // relative to passband mean
    double ripple_weight = 1.0;
    double sidelobe_weight = 0.5;

    void validate() const;
};

struct OptimizerConfig {
    int max_iterations = 5000;
    double tolerance_db = 1e-4;  // objective change over stall_window iterations
    int stall_window = 10;
    double initial_step = 1.0;
    double backtrack_factor = 0.5;
    double armijo_c1 = 1e-4;
    double min_step = 1e-14;
    double temperature_db = 1.0;  // initial smooth-max temperature
    int anneal_every = 50;        // accepted iterations between temperature halvings
    double anneal_factor = 0.5;
    std::uint64_t seed = 1;
    bool random_init = false;  // demonstration mode, expected to fail

    void validate() const;
};

struct OptimizationReport {
    PhaseProfile phases;  // shaping-space e^{j phi}, applied to the modulus
    int iterations = 0;
    std::vector<double> objective_trace;  // hard objective, nonincreasing
    bool converged = false;
    double initial_grid_ripple_db = 0.0;  // on the optimization grid
    double final_grid_ripple_db = 0.0;
    FlatTopMetrics metrics;  // on the dense verification grid
};

// Phase-only refinement of init under the fixed modulus: weights are
// modulus o e^{j phi}, the objective is the smooth-max passband ripple about
// the passband mean plus the smooth-max stopband excess over the sidelobe
// target, minimized by gradient descent with backtracking line search.
// Accepted iterates never increase the hard objective or the grid ripple.
OptimizationReport optimize_phases(const Eigen::VectorXd& modulus, const PhaseProfile& init,
                                   const FlatTopSpec& spec, const OptimizerConfig& config,
                                   const ElementPattern& element = ElementPattern::isotropic());

struct GridSensitivityEntry {
    int grid_points = 0;
    OptimizationReport report;
    bool useful = false;  // dense ripple <= 3 dB and no passband coverage gap
    double dense_ripple_db = 0.0;
    double coverage_gap_db = 0.0;  // passband mean minus worst dense dip
};

struct GridSensitivityReport {
    std::vector<GridSensitivityEntry> entries;
};

// Same spec and config re-run per grid_points variant; distinguishes
// converged from useful.
GridSensitivityReport grid_sensitivity_experiment(
    const Eigen::VectorXd& modulus, const PhaseProfile& init, const FlatTopSpec& spec,
    const std::vector<int>& grid_point_variants, const OptimizerConfig& config,
    const ElementPattern& element = ElementPattern::isotropic());

void write_grid_sensitivity_table(std::ostream& os, const GridSensitivityReport& report);

}  // namespace risbeam

#endif
