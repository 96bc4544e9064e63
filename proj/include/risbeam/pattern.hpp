#ifndef RISBEAM_PATTERN_HPP
#define RISBEAM_PATTERN_HPP

#include <Eigen/Dense>
#include <iosfwd>

#include "risbeam/propagation.hpp"
#include "risbeam/shaping.hpp"

namespace risbeam {

// Sorted angles in radians within [-pi/2, pi/2].
struct AngularGrid {
    Eigen::VectorXd angles;

    static AngularGrid uniform(double lo, double hi, int n);
    // 1801 points over [-90, 90] deg (0.1 deg step), resolves the skirts.
    static AngularGrid dense();
    void validate() const;
};

enum class Normalization { peak_zero_db, absolute };

struct RadiationPattern {
    AngularGrid grid;
    Eigen::VectorXd power_db;
    Normalization normalization = Normalization::peak_zero_db;
};

// Printed Hermitian convention: a(theta) = [1, e^{-j pi sin}, ...]^H, so the
// returned entries are e^{+j pi k sin(theta)} and patterns use |a^H w|^2.
Eigen::VectorXcd steering_vector(double theta, int n);

// power(theta) = |a^H(theta) w|^2 E(theta). Every evaluation checks the
// Cauchy-Schwarz peak bound N ||w||^2.
RadiationPattern linear_pattern(const EffectiveWeights& weights, const AngularGrid& grid,
                                const ElementPattern& element,
                                Normalization normalization = Normalization::peak_zero_db);

// W = w_el w_az^H.
Eigen::MatrixXcd planar_weights(const Eigen::VectorXcd& w_el, const Eigen::VectorXcd& w_az);

struct PlanarPattern {
    AngularGrid az_grid;
    AngularGrid el_grid;
    Eigen::MatrixXd power_db;  // rows = elevation, cols = azimuth
    Normalization normalization = Normalization::peak_zero_db;
};

// power(az, el) = |a_el^H(el) W a_az(az)|^2 E(psi) in the direction-cosine
// model u = sin(az), v = sin(el); grid points with u^2 + v^2 > 1 lie outside
// the visible region and get the dB floor.
PlanarPattern planar_pattern(const Eigen::MatrixXcd& W, const AngularGrid& az_grid,
                             const AngularGrid& el_grid, const ElementPattern& element,
                             Normalization normalization = Normalization::peak_zero_db);

struct FlatTopMetrics {
    double passband_ripple_db = 0.0;    // max - min over passband samples
    double passband_mean_db = 0.0;
    double max_sidelobe_db = 0.0;       // relative to passband mean
    double transition_width_deg = 0.0;  // worse of the two skirts
};

// Sidelobes are measured outside the passband plus a 2 deg guard; the
// transition width runs from the passband edge to the first crossing of
// (passband min - 10 dB), clamped to the grid span when never crossed.
FlatTopMetrics flat_top_metrics(const RadiationPattern& pattern, double passband_lo,
                                double passband_hi);

// Width in degrees between the first and last grid angle within drop_db of
// the peak, with linear interpolation at the two boundary crossings.
double width_at_drop(const RadiationPattern& pattern, double drop_db);

void write_pattern_csv(std::ostream& os, const RadiationPattern& pattern);
void write_planar_pattern_csv(std::ostream& os, const PlanarPattern& pattern);

// dB floor standing in for -inf (zero power, invisible directions).
inline constexpr double pattern_db_floor = -300.0;

}  // namespace risbeam

#endif
