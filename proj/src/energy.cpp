#include "risbeam/energy.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace risbeam {

namespace {

double dbm_to_mw(double dbm) {
    return std::pow(10.0, dbm / 10.0);
}

double mw_to_dbm(double mw) {
    return 10.0 * std::log10(mw);
}

}  // namespace

void PowerBudget::validate() const {
    if (!(pa_efficiency > 0.0 && pa_efficiency <= 1.0))
        throw std::invalid_argument("PowerBudget: pa_efficiency must be in (0, 1]");
    for (const SplitterStage& s : splitter_stages) {
        if (s.ways < 2)
            throw std::invalid_argument("PowerBudget: splitter stage needs >= 2 ways");
        if (s.insertion_loss_db < 0.0)
            throw std::invalid_argument("PowerBudget: insertion loss must be >= 0");
    }
}

DcPowerReport amaf_ris_dc_power(const Eigen::VectorXcd& v1, const PowerBudget& budget) {
    budget.validate();
    if (v1.size() == 0 || v1.norm() == 0.0)
        throw std::invalid_argument("amaf_ris_dc_power: zero-norm v1");
    double max_sq = 0.0;
    for (Eigen::Index i = 0; i < v1.size(); ++i)
        max_sq = std::max(max_sq, std::norm(v1(i)));

    DcPowerReport r;
    r.architecture = "amaf-ris";
    r.pa_count = static_cast<int>(v1.size());
    r.per_pa_max_mw = max_sq * dbm_to_mw(budget.p_rf_dbm);
    r.per_pa_max_dbm = mw_to_dbm(r.per_pa_max_mw);
    r.total_dc_mw = r.pa_count * r.per_pa_max_mw / budget.pa_efficiency;
    return r;
}

double splitter_loss_db(const std::vector<SplitterStage>& stages) {
    if (stages.empty())
        throw std::invalid_argument("splitter_loss_db: empty stage list");
    double loss = 0.0;
    for (const SplitterStage& s : stages) {
        if (s.ways < 2)
            throw std::invalid_argument("splitter_loss_db: stage needs >= 2 ways");
        if (s.insertion_loss_db < 0.0)
            throw std::invalid_argument("splitter_loss_db: insertion loss must be >= 0");
        loss += 10.0 * std::log10(static_cast<double>(s.ways)) + s.insertion_loss_db;
    }
    return loss;
}

DcPowerReport active_array_dc_power(int n_elements, const PowerBudget& budget) {
    budget.validate();
    if (n_elements < 1)
        throw std::invalid_argument("active_array_dc_power: need >= 1 element");
    double fan_out = 1.0;
    for (const SplitterStage& s : budget.splitter_stages)
        fan_out *= s.ways;
    if (fan_out < n_elements)
        throw std::invalid_argument("active_array_dc_power: splitter fan-out below element count");

    const double per_element_dbm = budget.p_rf_dbm - 10.0 * std::log10(n_elements);
    DcPowerReport r;
    r.architecture = "active-array";
    r.pa_count = 1;  // single PA drives the splitter network
    r.per_pa_max_dbm = per_element_dbm + splitter_loss_db(budget.splitter_stages);
    r.per_pa_max_mw = dbm_to_mw(r.per_pa_max_dbm);
    r.total_dc_mw = r.per_pa_max_mw / budget.pa_efficiency;
    return r;
}

void write_energy_report(std::ostream& os, const DcPowerReport& amaf_ris,
                         const DcPowerReport& active) {
    os << std::fixed << std::setprecision(1);
    for (const DcPowerReport* r : {&amaf_ris, &active}) {
        os << "architecture: " << r->architecture << '\n'
           << "  pa_count: " << r->pa_count << '\n'
           << "  per_pa_max_dbm: " << r->per_pa_max_dbm << '\n'
           << "  per_pa_max_mw: " << r->per_pa_max_mw << '\n'
           << "  total_dc_mw: " << r->total_dc_mw << '\n';
    }
    os << "winner: "
       << (amaf_ris.total_dc_mw < active.total_dc_mw ? amaf_ris.architecture
                                                     : active.architecture)
       << '\n';
}

}  // namespace risbeam
