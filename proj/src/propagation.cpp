#include "risbeam/propagation.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace risbeam {

double element_gain(const ElementPattern& pattern, double psi) {
    if (!(pattern.peak_gain > 0.0))
        throw std::invalid_argument("ElementPattern: peak_gain must be > 0");
    if (pattern.exponent < 0.0)
        throw std::invalid_argument("ElementPattern: exponent must be >= 0");
    if (psi < 0.0)
        throw std::invalid_argument("element_gain: negative angle");
    if (psi >= std::numbers::pi / 2.0)
        return pattern.exponent > 0.0 ? 0.0 : pattern.peak_gain;
    if (pattern.exponent == 0.0)
        return pattern.peak_gain;
    return pattern.peak_gain * std::pow(std::cos(psi), pattern.exponent);
}

CouplingMatrix coupling_matrix(const AmafRisLayout& layout, const ElementPattern& amaf_pattern,
                               const ElementPattern& ris_pattern) {
    layout.validate();
    const int n_p = layout.ris.size();
    const int n_a = layout.amaf.size();
    Eigen::MatrixXcd t(n_p, n_a);
    for (int n = 0; n < n_p; ++n) {
        for (int m = 0; m < n_a; ++m) {
            const RayGeometry g = ray_geometry(layout, m, n);
            const double amp = std::sqrt(element_gain(amaf_pattern, g.departure_angle) *
                                         element_gain(ris_pattern, g.arrival_angle)) /
                               (2.0 * std::numbers::pi * g.distance);
            t(n, m) = std::polar(amp, -std::numbers::pi * g.distance);
        }
    }
    return {std::move(t), layout};
}

void write_coupling_csv(std::ostream& os, const CouplingMatrix& T) {
    os << "# coupling matrix, row-major: RIS element per row, re/im per AMAF element\n";
    os.precision(17);
    for (Eigen::Index n = 0; n < T.entries.rows(); ++n) {
        for (Eigen::Index m = 0; m < T.entries.cols(); ++m) {
            if (m > 0)
                os << ',';
            os << T.entries(n, m).real() << ',' << T.entries(n, m).imag();
        }
        os << '\n';
    }
}

}  // namespace risbeam
