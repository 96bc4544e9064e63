#include "risbeam/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace risbeam {

namespace {

using nlohmann::json;

constexpr double kDegToRad = std::numbers::pi / 180.0;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key))
            throw std::invalid_argument("config: unknown key '" + where + key + "'");
    }
}

const json* find(const json& j, const char* key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

double number(const json& j, const std::string& where) {
    if (!j.is_number())
        throw std::invalid_argument("config: '" + where + "' must be a number");
    return j.get<double>();
}

int integer(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw std::invalid_argument("config: '" + where + "' must be an integer");
    return j.get<int>();
}

double get_number(const json& j, const char* key, double fallback, const std::string& where) {
    const json* v = find(j, key);
    return v ? number(*v, where + key) : fallback;
}

int get_integer(const json& j, const char* key, int fallback, const std::string& where) {
    const json* v = find(j, key);
    return v ? integer(*v, where + key) : fallback;
}

std::pair<double, double> deg_pair(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("config: '" + where + "' must be a [lo, hi] pair");
    return {number(j[0], where), number(j[1], where)};
}

ElementPattern parse_element(const json& j, const std::string& where, ElementPattern fallback) {
    check_keys(j, {"peak_gain", "exponent"}, where);
    ElementPattern p = fallback;
    p.peak_gain = get_number(j, "peak_gain", p.peak_gain, where);
    p.exponent = get_number(j, "exponent", p.exponent, where);
    return p;
}

FlatTopSpec parse_spec(const json& j, const std::string& where, FlatTopSpec fallback) {
    check_keys(j,
               {"passband_deg", "stopbands_deg", "grid_points", "sidelobe_target_db",
                "ripple_weight", "sidelobe_weight"},
               where);
    FlatTopSpec s = fallback;
    if (const json* v = find(j, "passband_deg")) {
        const auto [lo, hi] = deg_pair(*v, where + "passband_deg");
        s.passband_lo = lo * kDegToRad;
        s.passband_hi = hi * kDegToRad;
    }
    if (const json* v = find(j, "stopbands_deg")) {
        if (!v->is_array())
            throw std::invalid_argument("config: '" + where + "stopbands_deg' must be an array");
        s.stopbands.clear();
        for (const json& band : *v) {
            const auto [lo, hi] = deg_pair(band, where + "stopbands_deg");
            s.stopbands.emplace_back(lo * kDegToRad, hi * kDegToRad);
        }
    }
    s.grid_points = get_integer(j, "grid_points", s.grid_points, where);
    s.sidelobe_target_db = get_number(j, "sidelobe_target_db", s.sidelobe_target_db, where);
    s.ripple_weight = get_number(j, "ripple_weight", s.ripple_weight, where);
    s.sidelobe_weight = get_number(j, "sidelobe_weight", s.sidelobe_weight, where);
    return s;
}

json spec_to_json(const FlatTopSpec& s) {
    json j;
    j["passband_deg"] = {s.passband_lo / kDegToRad, s.passband_hi / kDegToRad};
    json bands = json::array();
    for (const auto& [lo, hi] : s.stopbands)
        bands.push_back({lo / kDegToRad, hi / kDegToRad});
    j["stopbands_deg"] = bands;
    j["grid_points"] = s.grid_points;
    j["sidelobe_target_db"] = s.sidelobe_target_db;
    j["ripple_weight"] = s.ripple_weight;
    j["sidelobe_weight"] = s.sidelobe_weight;
    return j;
}

}  // namespace

AmafRisLayout RunConfig::linear_layout() const {
    return AmafRisLayout::linear(ris_elements, amaf_elements, focal_length, ris_spacing,
                                 amaf_spacing);
}

AmafRisLayout RunConfig::planar_layout() const {
    return AmafRisLayout::planar(ris_elements, amaf_elements, focal_length, ris_spacing,
                                 amaf_spacing);
}

void RunConfig::validate() const {
    linear_layout();  // throws on bad layout numbers
    if (pattern_grid_points < 2)
        throw std::invalid_argument("config: pattern.grid_points must be >= 2");
    wide_spec.validate();
    narrow_spec.validate();
    optimizer.validate();
    scenario.validate();
    budget.validate();
    if (active_elements < 1 || amaf_pa_count < 1)
        throw std::invalid_argument("config: energy element counts must be >= 1");
    for (int g : grid_sensitivity_points)
        if (g < 2)
            throw std::invalid_argument("config: grid_sensitivity_points entries must be >= 2");
    binary_vector({template_params.binary_groups, ris_elements});  // symmetry check
    if (template_params.ppf_scale < 0.0 || !(template_params.ppf_exponent > 0.0))
        throw std::invalid_argument("config: invalid PPF parameters");
}

RunConfig default_config() {
    RunConfig c;
    c.template_params.binary_groups = {{6, 12}, {27, 33}};

    // Passband edges for the tunable-width runs (the source figures carry no
    // printed numbers; these are the shipped defaults).
    c.wide_spec.passband_lo = -20.0 * kDegToRad;
    c.wide_spec.passband_hi = 20.0 * kDegToRad;
    c.wide_spec.stopbands = {{-90.0 * kDegToRad, -26.0 * kDegToRad},
                             {26.0 * kDegToRad, 90.0 * kDegToRad}};
    c.narrow_spec.passband_lo = -10.0 * kDegToRad;
    c.narrow_spec.passband_hi = 10.0 * kDegToRad;
    c.narrow_spec.stopbands = {{-90.0 * kDegToRad, -16.0 * kDegToRad},
                               {16.0 * kDegToRad, 90.0 * kDegToRad}};

    // Illustrative picocell defaults: 10 m mast, boresight meets the ground
    // 20 m out, 80 m x 80 m map.
    c.scenario.mount_height_m = 10.0;
    c.scenario.downtilt_rad = std::atan(2.0);
    c.scenario.x_min_m = -20.0;
    c.scenario.x_max_m = 60.0;
    c.scenario.y_min_m = -40.0;
    c.scenario.y_max_m = 40.0;
    c.scenario.resolution_m = 0.5;

    c.budget.p_rf_dbm = 20.0;
    c.budget.pa_efficiency = 0.3;
    c.budget.splitter_stages = {{4, 1.0}, {4, 1.0}, {10, 1.0}, {10, 1.0}};
    return c;
}

RunConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: parse error: ") + e.what());
    }
    check_keys(j,
               {"layout", "elements", "template", "pattern", "optimize", "footprint", "energy",
                "export_coupling", "output_dir"},
               "");

    RunConfig c = default_config();

    if (const json* layout = find(j, "layout")) {
        check_keys(*layout,
                   {"ris_elements", "amaf_elements", "focal_length", "ris_spacing",
                    "amaf_spacing"},
                   "layout.");
        for (const char* required : {"ris_elements", "amaf_elements", "focal_length"}) {
            if (!find(*layout, required))
                throw std::invalid_argument(std::string("config: layout.") + required +
                                            " is required");
        }
        c.ris_elements = integer((*layout)["ris_elements"], "layout.ris_elements");
        c.amaf_elements = integer((*layout)["amaf_elements"], "layout.amaf_elements");
        c.focal_length = number((*layout)["focal_length"], "layout.focal_length");
        c.ris_spacing = get_number(*layout, "ris_spacing", c.ris_spacing, "layout.");
        c.amaf_spacing = get_number(*layout, "amaf_spacing", c.amaf_spacing, "layout.");
        c.active_elements = c.ris_elements * c.ris_elements;
        c.amaf_pa_count = c.amaf_elements * c.amaf_elements;
        // re-derive the default grouping from the 0.15..0.18 rule; an explicit
        // template section below still overrides it
        c.template_params.binary_groups =
            BinaryGrouping::from_fraction(c.ris_elements, 0.175).pi_ranges;
    }

    if (const json* elements = find(j, "elements")) {
        check_keys(*elements, {"amaf", "ris"}, "elements.");
        if (const json* e = find(*elements, "amaf"))
            c.amaf_element = parse_element(*e, "elements.amaf.", c.amaf_element);
        if (const json* e = find(*elements, "ris"))
            c.ris_element = parse_element(*e, "elements.ris.", c.ris_element);
    }

    if (const json* tpl = find(j, "template")) {
        check_keys(*tpl, {"binary_groups", "binary_fraction", "ppf_scale", "ppf_exponent"},
                   "template.");
        if (find(*tpl, "binary_groups") && find(*tpl, "binary_fraction"))
            throw std::invalid_argument(
                "config: template.binary_groups and template.binary_fraction are exclusive");
        if (const json* groups = find(*tpl, "binary_groups")) {
            c.template_params.binary_groups.clear();
            for (const json& g : *groups) {
                if (!g.is_array() || g.size() != 2)
                    throw std::invalid_argument(
                        "config: template.binary_groups entries must be [first, last]");
                c.template_params.binary_groups.push_back(
                    {integer(g[0], "template.binary_groups"),
                     integer(g[1], "template.binary_groups")});
            }
        }
        if (const json* frac = find(*tpl, "binary_fraction")) {
            c.template_params.binary_groups =
                BinaryGrouping::from_fraction(c.ris_elements,
                                              number(*frac, "template.binary_fraction"))
                    .pi_ranges;
        }
        c.template_params.ppf_scale =
            get_number(*tpl, "ppf_scale", c.template_params.ppf_scale, "template.");
        c.template_params.ppf_exponent =
            get_number(*tpl, "ppf_exponent", c.template_params.ppf_exponent, "template.");
    }

    if (const json* pat = find(j, "pattern")) {
        check_keys(*pat, {"grid_points"}, "pattern.");
        c.pattern_grid_points = get_integer(*pat, "grid_points", c.pattern_grid_points,
                                            "pattern.");
    }

    if (const json* opt = find(j, "optimize")) {
        check_keys(*opt, {"wide", "narrow", "grid_sensitivity_points", "config"}, "optimize.");
        if (const json* s = find(*opt, "wide"))
            c.wide_spec = parse_spec(*s, "optimize.wide.", c.wide_spec);
        if (const json* s = find(*opt, "narrow"))
            c.narrow_spec = parse_spec(*s, "optimize.narrow.", c.narrow_spec);
        if (const json* g = find(*opt, "grid_sensitivity_points")) {
            c.grid_sensitivity_points.clear();
            for (const json& v : *g)
                c.grid_sensitivity_points.push_back(
                    integer(v, "optimize.grid_sensitivity_points"));
        }
        if (const json* oc = find(*opt, "config")) {
            check_keys(*oc,
                       {"max_iterations", "tolerance_db", "stall_window", "initial_step",
                        "temperature_db", "anneal_every", "seed", "random_init"},
                       "optimize.config.");
            c.optimizer.max_iterations = get_integer(*oc, "max_iterations",
                                                     c.optimizer.max_iterations,
                                                     "optimize.config.");
            c.optimizer.tolerance_db = get_number(*oc, "tolerance_db",
                                                  c.optimizer.tolerance_db,
                                                  "optimize.config.");
            c.optimizer.stall_window = get_integer(*oc, "stall_window",
                                                   c.optimizer.stall_window,
                                                   "optimize.config.");
            c.optimizer.initial_step = get_number(*oc, "initial_step",
                                                  c.optimizer.initial_step,
                                                  "optimize.config.");
            c.optimizer.temperature_db = get_number(*oc, "temperature_db",
                                                    c.optimizer.temperature_db,
                                                    "optimize.config.");
            c.optimizer.anneal_every = get_integer(*oc, "anneal_every",
                                                   c.optimizer.anneal_every,
                                                   "optimize.config.");
            if (const json* seed = find(*oc, "seed")) {
                if (!seed->is_number_unsigned())
                    throw std::invalid_argument(
                        "config: optimize.config.seed must be a nonnegative integer");
                c.optimizer.seed = seed->get<std::uint64_t>();
            }
            if (const json* r = find(*oc, "random_init")) {
                if (!r->is_boolean())
                    throw std::invalid_argument(
                        "config: optimize.config.random_init must be a boolean");
                c.optimizer.random_init = r->get<bool>();
            }
        }
    }

    if (const json* fp = find(j, "footprint")) {
        check_keys(*fp, {"mode", "scenario"}, "footprint.");
        if (const json* mode = find(*fp, "mode")) {
            const std::string m = mode->get<std::string>();
            if (m == "confined")
                c.footprint_mode = FootprintMode::confined;
            else if (m == "az_widened")
                c.footprint_mode = FootprintMode::az_widened;
            else if (m == "el_widened")
                c.footprint_mode = FootprintMode::el_widened;
            else
                throw std::invalid_argument("config: footprint.mode must be one of "
                                            "confined|az_widened|el_widened");
        }
        if (const json* sc = find(*fp, "scenario")) {
            check_keys(*sc,
                       {"height_m", "downtilt_deg", "x_range_m", "y_range_m", "resolution_m",
                        "wavelength_m"},
                       "footprint.scenario.");
            c.scenario.mount_height_m = get_number(*sc, "height_m", c.scenario.mount_height_m,
                                                   "footprint.scenario.");
            if (const json* v = find(*sc, "downtilt_deg"))
                c.scenario.downtilt_rad =
                    number(*v, "footprint.scenario.downtilt_deg") * kDegToRad;
            if (const json* v = find(*sc, "x_range_m")) {
                const auto [lo, hi] = deg_pair(*v, "footprint.scenario.x_range_m");
                c.scenario.x_min_m = lo;
                c.scenario.x_max_m = hi;
            }
            if (const json* v = find(*sc, "y_range_m")) {
                const auto [lo, hi] = deg_pair(*v, "footprint.scenario.y_range_m");
                c.scenario.y_min_m = lo;
                c.scenario.y_max_m = hi;
            }
            c.scenario.resolution_m = get_number(*sc, "resolution_m", c.scenario.resolution_m,
                                                 "footprint.scenario.");
            c.scenario.carrier_wavelength_m =
                get_number(*sc, "wavelength_m", c.scenario.carrier_wavelength_m,
                           "footprint.scenario.");
        }
    }

    if (const json* en = find(j, "energy")) {
        check_keys(*en,
                   {"p_rf_dbm", "pa_efficiency", "splitter_stages", "active_elements",
                    "amaf_pa_count"},
                   "energy.");
        c.budget.p_rf_dbm = get_number(*en, "p_rf_dbm", c.budget.p_rf_dbm, "energy.");
        c.budget.pa_efficiency = get_number(*en, "pa_efficiency", c.budget.pa_efficiency,
                                            "energy.");
        if (const json* stages = find(*en, "splitter_stages")) {
            c.budget.splitter_stages.clear();
            for (const json& s : *stages) {
                if (!s.is_array() || s.size() != 2)
                    throw std::invalid_argument(
                        "config: energy.splitter_stages entries must be [ways, loss_db]");
                c.budget.splitter_stages.push_back(
                    {integer(s[0], "energy.splitter_stages"),
                     number(s[1], "energy.splitter_stages")});
            }
        }
        c.active_elements = get_integer(*en, "active_elements", c.active_elements, "energy.");
        c.amaf_pa_count = get_integer(*en, "amaf_pa_count", c.amaf_pa_count, "energy.");
    }

    if (const json* v = find(j, "export_coupling")) {
        if (!v->is_boolean())
            throw std::invalid_argument("config: export_coupling must be a boolean");
        c.export_coupling = v->get<bool>();
    }
    if (const json* v = find(j, "output_dir")) {
        if (!v->is_string())
            throw std::invalid_argument("config: output_dir must be a string");
        c.output_dir = v->get<std::string>();
    }

    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string dump_config(const RunConfig& c) {
    json j;
    j["layout"] = {{"ris_elements", c.ris_elements},
                   {"amaf_elements", c.amaf_elements},
                   {"focal_length", c.focal_length},
                   {"ris_spacing", c.ris_spacing},
                   {"amaf_spacing", c.amaf_spacing}};
    j["elements"] = {{"amaf", {{"peak_gain", c.amaf_element.peak_gain},
                               {"exponent", c.amaf_element.exponent}}},
                     {"ris", {{"peak_gain", c.ris_element.peak_gain},
                              {"exponent", c.ris_element.exponent}}}};
    json groups = json::array();
    for (const IndexRange& r : c.template_params.binary_groups)
        groups.push_back({r.first, r.last});
    j["template"] = {{"binary_groups", groups},
                     {"ppf_scale", c.template_params.ppf_scale},
                     {"ppf_exponent", c.template_params.ppf_exponent}};
    j["pattern"] = {{"grid_points", c.pattern_grid_points}};
    j["optimize"] = {{"wide", spec_to_json(c.wide_spec)},
                     {"narrow", spec_to_json(c.narrow_spec)},
                     {"grid_sensitivity_points", c.grid_sensitivity_points},
                     {"config",
                      {{"max_iterations", c.optimizer.max_iterations},
                       {"tolerance_db", c.optimizer.tolerance_db},
                       {"stall_window", c.optimizer.stall_window},
                       {"initial_step", c.optimizer.initial_step},
                       {"temperature_db", c.optimizer.temperature_db},
                       {"anneal_every", c.optimizer.anneal_every},
                       {"seed", c.optimizer.seed},
                       {"random_init", c.optimizer.random_init}}}};
    const char* mode = c.footprint_mode == FootprintMode::confined    ? "confined"
                       : c.footprint_mode == FootprintMode::az_widened ? "az_widened"
                                                                        : "el_widened";
    j["footprint"] = {{"mode", mode},
                      {"scenario",
                       {{"height_m", c.scenario.mount_height_m},
                        {"downtilt_deg", c.scenario.downtilt_rad / kDegToRad},
                        {"x_range_m", {c.scenario.x_min_m, c.scenario.x_max_m}},
                        {"y_range_m", {c.scenario.y_min_m, c.scenario.y_max_m}},
                        {"resolution_m", c.scenario.resolution_m},
                        {"wavelength_m", c.scenario.carrier_wavelength_m}}}};
    json stages = json::array();
    for (const SplitterStage& s : c.budget.splitter_stages)
        stages.push_back({s.ways, s.insertion_loss_db});
    j["energy"] = {{"p_rf_dbm", c.budget.p_rf_dbm},
                   {"pa_efficiency", c.budget.pa_efficiency},
                   {"splitter_stages", stages},
                   {"active_elements", c.active_elements},
                   {"amaf_pa_count", c.amaf_pa_count}};
    j["export_coupling"] = c.export_coupling;
    j["output_dir"] = c.output_dir;
    return j.dump(2) + "\n";
}

}  // namespace risbeam
