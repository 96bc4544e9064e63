#ifndef RISBEAM_ENERGY_HPP
#define RISBEAM_ENERGY_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

namespace risbeam {

struct SplitterStage {
    int ways = 2;
    double insertion_loss_db = 0.0;
};

struct PowerBudget {
    double p_rf_dbm = 20.0;
    double pa_efficiency = 0.3;
    std::vector<SplitterStage> splitter_stages;

    void validate() const;
};

struct DcPowerReport {
    std::string architecture;
    int pa_count = 0;
    double per_pa_max_dbm = 0.0;
    double per_pa_max_mw = 0.0;
    double total_dc_mw = 0.0;
};

// AMAF PAs all biased for the worst element: per-PA max = max|v1_i|^2 P_RF,
// total DC = N_a * per-PA max / eta.
DcPowerReport amaf_ris_dc_power(const Eigen::VectorXcd& v1, const PowerBudget& budget);

// Input-to-per-output-port ratio: sum of 10 log10(ways) plus insertion losses.
double splitter_loss_db(const std::vector<SplitterStage>& stages);

// Constant-modulus active array fed by a single PA through the splitter
// network: requested PA power = (P_RF / n) * loss, total DC = that / eta.
DcPowerReport active_array_dc_power(int n_elements, const PowerBudget& budget);

void write_energy_report(std::ostream& os, const DcPowerReport& amaf_ris,
                         const DcPowerReport& active);

}  // namespace risbeam

#endif
