#ifndef RISBEAM_FOOTPRINT_HPP
#define RISBEAM_FOOTPRINT_HPP

#include <Eigen/Dense>
#include <iosfwd>

#include "risbeam/pattern.hpp"

namespace risbeam {

// Ground-projection scenario. World frame: ground is the z = 0 plane, the
// array phase center sits at (0, 0, mount_height). With zero downtilt the
// boresight points straight down; downtilt rotates it toward +x, so the
// boresight meets the ground at x = mount_height * tan(downtilt). The array
// azimuth axis stays horizontal (world y); the elevation axis tilts in the
// x-z plane. Ground x therefore carries the elevation cut and ground y the
// azimuth cut.
struct DeploymentScenario {
    double mount_height_m = 10.0;
    double downtilt_rad = 0.0;
    double x_min_m = -40.0;
    double x_max_m = 40.0;
    double y_min_m = -40.0;
    double y_max_m = 40.0;
    double resolution_m = 0.5;
    double carrier_wavelength_m = 0.01;  // kept for absolute budgets; cancels
                                         // in these peak-normalized maps

    void validate() const;
};

struct FootprintGrid {
    Eigen::MatrixXd power_db;  // rows: y, cols: x; peak-normalized to 0 dB
    Eigen::VectorXd x_m;
    Eigen::VectorXd y_m;
};

// Relative received power per ground cell: planar pattern power in the cell
// direction (far-field point-source model) times free-space 1/d^2, then
// peak-normalized. Cells behind the array plane get the dB floor.
FootprintGrid ground_footprint(const Eigen::MatrixXcd& W, const ElementPattern& element,
                               const DeploymentScenario& scenario);

// Rank-1 fast path for W = w_el w_az^H.
FootprintGrid ground_footprint(const Eigen::VectorXcd& w_el, const Eigen::VectorXcd& w_az,
                               const ElementPattern& element,
                               const DeploymentScenario& scenario);

// -3 dB extent (meters) of the footprint along the x or y axis through the
// peak cell, outermost-crossing convention.
double footprint_extent_m(const FootprintGrid& grid, bool along_x, double drop_db = 3.0);

void write_footprint_csv(std::ostream& os, const FootprintGrid& grid);
void write_footprint_raster(std::ostream& os, const FootprintGrid& grid);

}  // namespace risbeam

#endif
