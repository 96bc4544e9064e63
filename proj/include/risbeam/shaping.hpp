#ifndef RISBEAM_SHAPING_HPP
#define RISBEAM_SHAPING_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "risbeam/eigenmode.hpp"

namespace risbeam {

enum class PhaseTag { binary, ppf, cophase, composed, optimized };

// Unit-modulus phase vector. Construction validates |values(n)| = 1 to 1e-12.
struct PhaseProfile {
    Eigen::VectorXcd values;
    PhaseTag tag = PhaseTag::composed;

    static PhaseProfile checked(Eigen::VectorXcd values, PhaseTag tag);
};

// Inclusive index ranges [first, last] that receive phase pi. The set must be
// symmetric about the array center.
struct IndexRange {
    int first = 0;
    int last = 0;
};

struct BinaryGrouping {
    std::vector<IndexRange> pi_ranges;
    int n_elements = 0;

    // Two symmetric interior groups of round(fraction * n) elements with a
    // center run of twice the group size, mirroring the printed 40-element
    // layout (groups of 7 at [6..12] and [27..33]).
    static BinaryGrouping from_fraction(int n_elements, double fraction);
};

// +1 outside the pi ranges and -1 inside; asymmetric groupings are rejected.
PhaseProfile binary_vector(const BinaryGrouping& grouping);

// Phase perturbation f(n) = |4 pi c s(x)|, x = 0.5/(N-1) + (n - 0.5 N)/(N-1),
// s(x) = sign(x) |x|^p (identical to the plain power for p = 1).
double ppf_value(int n, int n_elements, double c, double p);

// w_PPF(n) = exp(j f(n)).
PhaseProfile widening_vector(int n_elements, double c, double p);

// w = w_PPF o w_binary o w~ (elementwise, order-independent).
PhaseProfile compose_template(const CophaseVector& cophase, const PhaseProfile& binary,
                              const PhaseProfile& ppf);

// Amplitude-bearing aperture weights phase o u1. When the phase profile
// carries the co-phasing factor w~ this equals (shaping phase) o |u1|.
struct EffectiveWeights {
    Eigen::VectorXcd weights;
};

EffectiveWeights effective_weights(const PhaseProfile& phase, const PrincipalEigenmode& em);

// Same weights expressed against a given nonnegative modulus (phase o modulus);
// used where the optimizer works directly on |u1|.
EffectiveWeights effective_weights_from_modulus(const PhaseProfile& phase,
                                                const Eigen::VectorXd& modulus);

// (index, phase_rad) rows; the deliverable a RIS controller consumes.
void write_phase_csv(std::ostream& os, const PhaseProfile& profile);

}  // namespace risbeam

#endif
