#ifndef RISBEAM_PROPAGATION_HPP
#define RISBEAM_PROPAGATION_HPP

#include <Eigen/Dense>
#include <iosfwd>

#include "risbeam/geometry.hpp"

namespace risbeam {

// Axisymmetric cosine power pattern G(psi) = peak_gain * cos(psi)^exponent.
struct ElementPattern {
    double peak_gain = 1.0;
    double exponent = 0.0;

    // 6 dBi microstrip patch, 90 deg HPBW: G(psi) = 4 cos^2(psi).
    static ElementPattern patch() { return {4.0, 2.0}; }
    static ElementPattern isotropic() { return {1.0, 0.0}; }
};

// Linear power gain at angle psi from the element boresight. Angles beyond
// pi/2 (behind the element) return 0; negative psi is an error.
double element_gain(const ElementPattern& pattern, double psi);

struct CouplingMatrix {
    Eigen::MatrixXcd entries;  // N_p x N_a
    AmafRisLayout layout;
};

// Friis feed model: T_{n,m} = sqrt(E_A(theta) E_R(phi)) exp(-j pi r) / (2 pi r)
// with r in half-wavelength units.
CouplingMatrix coupling_matrix(const AmafRisLayout& layout, const ElementPattern& amaf_pattern,
                               const ElementPattern& ris_pattern);

// Row-major CSV, one RIS element per row, columns re(m),im(m) per AMAF element.
void write_coupling_csv(std::ostream& os, const CouplingMatrix& T);

}  // namespace risbeam

#endif
