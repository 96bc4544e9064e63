#ifndef RISBEAM_EIGENMODE_HPP
#define RISBEAM_EIGENMODE_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "risbeam/propagation.hpp"

namespace risbeam {

// Principal singular triple of T with a fixed phase convention: (u1, v1) are
// rotated jointly so that sum(v1) is real positive; if that sum vanishes the
// mean phase of u1's central pair is pinned to zero instead.
struct PrincipalEigenmode {
    double sigma1 = 0.0;
    Eigen::VectorXcd u1;  // length N_p, unit norm
    Eigen::VectorXcd v1;  // length N_a, unit norm
};

PrincipalEigenmode principal_eigenmode(const CouplingMatrix& T);

// w~ = exp(-j angle(u1)); entries where u1 is exactly zero are set to 1 and
// recorded (phase is immaterial where the amplitude vanishes).
struct CophaseVector {
    Eigen::VectorXcd values;  // unit modulus, length N_p
    std::vector<int> zero_amplitude_indices;
};

CophaseVector cophase_vector(const PrincipalEigenmode& em);

// (index, magnitude) rows; reproduces the PEM taper curve.
void write_magnitude_csv(std::ostream& os, const Eigen::VectorXcd& v);

}  // namespace risbeam

#endif
