#ifndef RISBEAM_CONFIG_HPP
#define RISBEAM_CONFIG_HPP

#include <string>
#include <vector>

#include "risbeam/energy.hpp"
#include "risbeam/footprint.hpp"
#include "risbeam/optimizer.hpp"
#include "risbeam/propagation.hpp"
#include "risbeam/shaping.hpp"

namespace risbeam {

struct TemplateParams {
    std::vector<IndexRange> binary_groups;  // inclusive [first, last] pi ranges
    double ppf_scale = 2.0;
    double ppf_exponent = 1.0;
};

enum class FootprintMode { confined, az_widened, el_widened };

// One experiment = one config document. JSON with // comments; unknown keys
// are rejected, and a present "layout" section must be complete.
struct RunConfig {
    int ris_elements = 40;
    int amaf_elements = 2;
    double focal_length = 9.4;
    double ris_spacing = 1.0;
    double amaf_spacing = 1.0;

    ElementPattern amaf_element = ElementPattern::patch();
    ElementPattern ris_element = ElementPattern::patch();

    TemplateParams template_params;
    int pattern_grid_points = 1801;

    FlatTopSpec wide_spec;
    FlatTopSpec narrow_spec;
    std::vector<int> grid_sensitivity_points = {5, 15};
    OptimizerConfig optimizer;

    FootprintMode footprint_mode = FootprintMode::confined;
    DeploymentScenario scenario;

    PowerBudget budget;
    int active_elements = 1600;
    int amaf_pa_count = 4;

    bool export_coupling = false;
    std::string output_dir = "out";

    AmafRisLayout linear_layout() const;
    AmafRisLayout planar_layout() const;
    void validate() const;
};

RunConfig default_config();
RunConfig load_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// Canonical emission; load(dump(cfg)) is the identity on configs.
std::string dump_config(const RunConfig& config);

}  // namespace risbeam

#endif
