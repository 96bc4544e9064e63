#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "risbeam/config.hpp"
#include "risbeam/eigenmode.hpp"
#include "risbeam/energy.hpp"
#include "risbeam/footprint.hpp"
#include "risbeam/optimizer.hpp"
#include "risbeam/pattern.hpp"
#include "risbeam/propagation.hpp"
#include "risbeam/shaping.hpp"

namespace py = pybind11;
using namespace risbeam;

PYBIND11_MODULE(_risbeam, m) {
    m.doc() = "Flat-top beam synthesis for array-fed reflective intelligent surfaces";

    // geometry
    py::class_<LinearLayout>(m, "LinearLayout")
        .def(py::init<int, double>(), py::arg("n_elements"), py::arg("spacing") = 1.0)
        .def_readonly("n_elements", &LinearLayout::n_elements)
        .def_readonly("spacing", &LinearLayout::spacing);
    m.def("element_positions", &element_positions, py::arg("layout"));

    py::class_<AmafRisLayout>(m, "AmafRisLayout")
        .def_static("linear", &AmafRisLayout::linear, py::arg("n_ris"), py::arg("n_amaf"),
                    py::arg("focal_length"), py::arg("ris_spacing") = 1.0,
                    py::arg("amaf_spacing") = 1.0)
        .def_static("planar", &AmafRisLayout::planar, py::arg("n_ris"), py::arg("n_amaf"),
                    py::arg("focal_length"), py::arg("ris_spacing") = 1.0,
                    py::arg("amaf_spacing") = 1.0)
        .def_readonly("focal_length", &AmafRisLayout::focal_length)
        .def_property_readonly("n_ris",
                               [](const AmafRisLayout& l) { return l.ris.size(); })
        .def_property_readonly("n_amaf",
                               [](const AmafRisLayout& l) { return l.amaf.size(); });
    py::class_<RayGeometry>(m, "RayGeometry")
        .def_readonly("distance", &RayGeometry::distance)
        .def_readonly("departure_angle", &RayGeometry::departure_angle)
        .def_readonly("arrival_angle", &RayGeometry::arrival_angle);
    m.def("ray_geometry", &ray_geometry, py::arg("layout"), py::arg("amaf_index"),
          py::arg("ris_index"));
    m.def("f_over_d", &f_over_d, py::arg("layout"));

    // propagation
    py::class_<ElementPattern>(m, "ElementPattern")
        .def(py::init<double, double>(), py::arg("peak_gain"), py::arg("exponent"))
        .def_static("patch", &ElementPattern::patch)
        .def_static("isotropic", &ElementPattern::isotropic)
        .def_readonly("peak_gain", &ElementPattern::peak_gain)
        .def_readonly("exponent", &ElementPattern::exponent);
    m.def("element_gain", &element_gain, py::arg("pattern"), py::arg("psi"));

    py::class_<CouplingMatrix>(m, "CouplingMatrix")
        .def_property_readonly("entries",
                               [](const CouplingMatrix& t) { return t.entries; });
    m.def("coupling_matrix", &coupling_matrix, py::arg("layout"), py::arg("amaf_pattern"),
          py::arg("ris_pattern"));

    // eigenmode
    py::class_<PrincipalEigenmode>(m, "PrincipalEigenmode")
        .def_readonly("sigma1", &PrincipalEigenmode::sigma1)
        .def_readonly("u1", &PrincipalEigenmode::u1)
        .def_readonly("v1", &PrincipalEigenmode::v1);
    m.def("principal_eigenmode", &principal_eigenmode, py::arg("coupling"));
    py::class_<CophaseVector>(m, "CophaseVector")
        .def_readonly("values", &CophaseVector::values)
        .def_readonly("zero_amplitude_indices", &CophaseVector::zero_amplitude_indices);
    m.def("cophase_vector", &cophase_vector, py::arg("eigenmode"));

    // shaping
    py::enum_<PhaseTag>(m, "PhaseTag")
        .value("binary", PhaseTag::binary)
        .value("ppf", PhaseTag::ppf)
        .value("cophase", PhaseTag::cophase)
        .value("composed", PhaseTag::composed)
        .value("optimized", PhaseTag::optimized);
    py::class_<PhaseProfile>(m, "PhaseProfile")
        .def(py::init([](const Eigen::VectorXcd& values, PhaseTag tag) {
                 return PhaseProfile::checked(values, tag);
             }),
             py::arg("values"), py::arg("tag") = PhaseTag::composed)
        .def_readonly("values", &PhaseProfile::values)
        .def_readonly("tag", &PhaseProfile::tag);
    py::class_<IndexRange>(m, "IndexRange")
        .def(py::init<int, int>(), py::arg("first"), py::arg("last"))
        .def_readonly("first", &IndexRange::first)
        .def_readonly("last", &IndexRange::last);
    py::class_<BinaryGrouping>(m, "BinaryGrouping")
        .def(py::init<std::vector<IndexRange>, int>(), py::arg("pi_ranges"),
             py::arg("n_elements"))
        .def_static("from_fraction", &BinaryGrouping::from_fraction, py::arg("n_elements"),
                    py::arg("fraction"))
        .def_readonly("pi_ranges", &BinaryGrouping::pi_ranges)
        .def_readonly("n_elements", &BinaryGrouping::n_elements);
    m.def("binary_vector", &binary_vector, py::arg("grouping"));
    m.def("ppf_value", &ppf_value, py::arg("n"), py::arg("n_elements"), py::arg("c"),
          py::arg("p"));
    m.def("widening_vector", &widening_vector, py::arg("n_elements"), py::arg("c"),
          py::arg("p"));
    m.def("compose_template", &compose_template, py::arg("cophase"), py::arg("binary"),
          py::arg("ppf"));
    py::class_<EffectiveWeights>(m, "EffectiveWeights")
        .def_readonly("weights", &EffectiveWeights::weights);
    m.def("effective_weights", &effective_weights, py::arg("phase"), py::arg("eigenmode"));
    m.def("effective_weights_from_modulus", &effective_weights_from_modulus,
          py::arg("phase"), py::arg("modulus"));

    // pattern
    py::class_<AngularGrid>(m, "AngularGrid")
        .def_static("uniform", &AngularGrid::uniform, py::arg("lo"), py::arg("hi"),
                    py::arg("n"))
        .def_static("dense", &AngularGrid::dense)
        .def_readonly("angles", &AngularGrid::angles);
    py::enum_<Normalization>(m, "Normalization")
        .value("peak_zero_db", Normalization::peak_zero_db)
        .value("absolute", Normalization::absolute);
    py::class_<RadiationPattern>(m, "RadiationPattern")
        .def_property_readonly("angles",
                               [](const RadiationPattern& p) { return p.grid.angles; })
        .def_readonly("power_db", &RadiationPattern::power_db);
    m.def("steering_vector", &steering_vector, py::arg("theta"), py::arg("n"));
    m.def("linear_pattern", &linear_pattern, py::arg("weights"), py::arg("grid"),
          py::arg("element"), py::arg("normalization") = Normalization::peak_zero_db);
    m.def("planar_weights", &planar_weights, py::arg("w_el"), py::arg("w_az"));
    py::class_<PlanarPattern>(m, "PlanarPattern")
        .def_property_readonly("az_angles",
                               [](const PlanarPattern& p) { return p.az_grid.angles; })
        .def_property_readonly("el_angles",
                               [](const PlanarPattern& p) { return p.el_grid.angles; })
        .def_readonly("power_db", &PlanarPattern::power_db);
    m.def("planar_pattern", &planar_pattern, py::arg("weights"), py::arg("az_grid"),
          py::arg("el_grid"), py::arg("element"),
          py::arg("normalization") = Normalization::peak_zero_db);
    py::class_<FlatTopMetrics>(m, "FlatTopMetrics")
        .def_readonly("passband_ripple_db", &FlatTopMetrics::passband_ripple_db)
        .def_readonly("passband_mean_db", &FlatTopMetrics::passband_mean_db)
        .def_readonly("max_sidelobe_db", &FlatTopMetrics::max_sidelobe_db)
        .def_readonly("transition_width_deg", &FlatTopMetrics::transition_width_deg);
    m.def("flat_top_metrics", &flat_top_metrics, py::arg("pattern"), py::arg("passband_lo"),
          py::arg("passband_hi"));
    m.def("width_at_drop", &width_at_drop, py::arg("pattern"), py::arg("drop_db"));

    // optimizer
    py::class_<FlatTopSpec>(m, "FlatTopSpec")
        .def(py::init<>())
        .def_readwrite("passband_lo", &FlatTopSpec::passband_lo)
        .def_readwrite("passband_hi", &FlatTopSpec::passband_hi)
        .def_readwrite("stopbands", &FlatTopSpec::stopbands)
        .def_readwrite("grid_points", &FlatTopSpec::grid_points)
        .def_readwrite("sidelobe_target_db", &FlatTopSpec::sidelobe_target_db)
        .def_readwrite("ripple_weight", &FlatTopSpec::ripple_weight)
        .def_readwrite("sidelobe_weight", &FlatTopSpec::sidelobe_weight);
    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("max_iterations", &OptimizerConfig::max_iterations)
        .def_readwrite("tolerance_db", &OptimizerConfig::tolerance_db)
        .def_readwrite("stall_window", &OptimizerConfig::stall_window)
        .def_readwrite("initial_step", &OptimizerConfig::initial_step)
        .def_readwrite("temperature_db", &OptimizerConfig::temperature_db)
        .def_readwrite("anneal_every", &OptimizerConfig::anneal_every)
        .def_readwrite("seed", &OptimizerConfig::seed)
        .def_readwrite("random_init", &OptimizerConfig::random_init);
    py::class_<OptimizationReport>(m, "OptimizationReport")
        .def_readonly("phases", &OptimizationReport::phases)
        .def_readonly("iterations", &OptimizationReport::iterations)
        .def_readonly("objective_trace", &OptimizationReport::objective_trace)
        .def_readonly("converged", &OptimizationReport::converged)
        .def_readonly("initial_grid_ripple_db", &OptimizationReport::initial_grid_ripple_db)
        .def_readonly("final_grid_ripple_db", &OptimizationReport::final_grid_ripple_db)
        .def_readonly("metrics", &OptimizationReport::metrics);
    m.def("optimize_phases", &optimize_phases, py::arg("modulus"), py::arg("init"),
          py::arg("spec"), py::arg("config"),
          py::arg("element") = ElementPattern::isotropic());
    py::class_<GridSensitivityEntry>(m, "GridSensitivityEntry")
        .def_readonly("grid_points", &GridSensitivityEntry::grid_points)
        .def_readonly("report", &GridSensitivityEntry::report)
        .def_readonly("useful", &GridSensitivityEntry::useful)
        .def_readonly("dense_ripple_db", &GridSensitivityEntry::dense_ripple_db)
        .def_readonly("coverage_gap_db", &GridSensitivityEntry::coverage_gap_db);
    py::class_<GridSensitivityReport>(m, "GridSensitivityReport")
        .def_readonly("entries", &GridSensitivityReport::entries);
    m.def("grid_sensitivity_experiment", &grid_sensitivity_experiment, py::arg("modulus"),
          py::arg("init"), py::arg("spec"), py::arg("grid_point_variants"), py::arg("config"),
          py::arg("element") = ElementPattern::isotropic());

    // footprint
    py::class_<DeploymentScenario>(m, "DeploymentScenario")
        .def(py::init<>())
        .def_readwrite("mount_height_m", &DeploymentScenario::mount_height_m)
        .def_readwrite("downtilt_rad", &DeploymentScenario::downtilt_rad)
        .def_readwrite("x_min_m", &DeploymentScenario::x_min_m)
        .def_readwrite("x_max_m", &DeploymentScenario::x_max_m)
        .def_readwrite("y_min_m", &DeploymentScenario::y_min_m)
        .def_readwrite("y_max_m", &DeploymentScenario::y_max_m)
        .def_readwrite("resolution_m", &DeploymentScenario::resolution_m)
        .def_readwrite("carrier_wavelength_m", &DeploymentScenario::carrier_wavelength_m);
    py::class_<FootprintGrid>(m, "FootprintGrid")
        .def_readonly("power_db", &FootprintGrid::power_db)
        .def_readonly("x_m", &FootprintGrid::x_m)
        .def_readonly("y_m", &FootprintGrid::y_m);
    m.def("ground_footprint",
          py::overload_cast<const Eigen::MatrixXcd&, const ElementPattern&,
                            const DeploymentScenario&>(&ground_footprint),
          py::arg("weights"), py::arg("element"), py::arg("scenario"));
    m.def("ground_footprint",
          py::overload_cast<const Eigen::VectorXcd&, const Eigen::VectorXcd&,
                            const ElementPattern&, const DeploymentScenario&>(
              &ground_footprint),
          py::arg("w_el"), py::arg("w_az"), py::arg("element"), py::arg("scenario"));
    m.def("footprint_extent_m", &footprint_extent_m, py::arg("grid"), py::arg("along_x"),
          py::arg("drop_db") = 3.0);

    // energy
    py::class_<SplitterStage>(m, "SplitterStage")
        .def(py::init<int, double>(), py::arg("ways"), py::arg("insertion_loss_db"))
        .def_readwrite("ways", &SplitterStage::ways)
        .def_readwrite("insertion_loss_db", &SplitterStage::insertion_loss_db);
    py::class_<PowerBudget>(m, "PowerBudget")
        .def(py::init<>())
        .def_readwrite("p_rf_dbm", &PowerBudget::p_rf_dbm)
        .def_readwrite("pa_efficiency", &PowerBudget::pa_efficiency)
        .def_readwrite("splitter_stages", &PowerBudget::splitter_stages);
    py::class_<DcPowerReport>(m, "DcPowerReport")
        .def_readonly("architecture", &DcPowerReport::architecture)
        .def_readonly("pa_count", &DcPowerReport::pa_count)
        .def_readonly("per_pa_max_dbm", &DcPowerReport::per_pa_max_dbm)
        .def_readonly("per_pa_max_mw", &DcPowerReport::per_pa_max_mw)
        .def_readonly("total_dc_mw", &DcPowerReport::total_dc_mw);
    m.def("amaf_ris_dc_power", &amaf_ris_dc_power, py::arg("v1"), py::arg("budget"));
    m.def("splitter_loss_db", &splitter_loss_db, py::arg("stages"));
    m.def("active_array_dc_power", &active_array_dc_power, py::arg("n_elements"),
          py::arg("budget"));
}
