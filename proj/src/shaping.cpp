#include "risbeam/shaping.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace risbeam {

PhaseProfile PhaseProfile::checked(Eigen::VectorXcd values, PhaseTag tag) {
    for (Eigen::Index n = 0; n < values.size(); ++n) {
        if (std::abs(std::abs(values(n)) - 1.0) > 1e-12)
            throw std::invalid_argument("PhaseProfile: entries must be unit modulus");
    }
    return {std::move(values), tag};
}

BinaryGrouping BinaryGrouping::from_fraction(int n_elements, double fraction) {
    if (n_elements < 1)
        throw std::invalid_argument("BinaryGrouping: n_elements must be >= 1");
    if (!(fraction >= 0.0 && fraction < 0.5))
        throw std::invalid_argument("BinaryGrouping: fraction must be in [0, 0.5)");
    const int group = static_cast<int>(std::lround(fraction * n_elements));
    BinaryGrouping g;
    g.n_elements = n_elements;
    if (group == 0)
        return g;
    // Right group sits one group-width away from the center; left group mirrors.
    const int right_first = (n_elements + 1) / 2 + group;
    const int right_last = right_first + group - 1;
    if (right_last >= n_elements)
        throw std::invalid_argument("BinaryGrouping: fraction leaves no room for edge elements");
    g.pi_ranges.push_back({n_elements - 1 - right_last, n_elements - 1 - right_first});
    g.pi_ranges.push_back({right_first, right_last});
    return g;
}

PhaseProfile binary_vector(const BinaryGrouping& grouping) {
    if (grouping.n_elements < 1)
        throw std::invalid_argument("binary_vector: n_elements must be >= 1");
    const int n = grouping.n_elements;
    std::vector<int> mask(static_cast<size_t>(n), 0);
    for (const IndexRange& r : grouping.pi_ranges) {
        if (r.first > r.last || r.first < 0 || r.last >= n)
            throw std::invalid_argument("binary_vector: range out of bounds");
        for (int i = r.first; i <= r.last; ++i) {
            if (mask[static_cast<size_t>(i)])
                throw std::invalid_argument("binary_vector: overlapping ranges");
            mask[static_cast<size_t>(i)] = 1;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (mask[static_cast<size_t>(i)] != mask[static_cast<size_t>(n - 1 - i)])
            throw std::invalid_argument("binary_vector: grouping not symmetric about the center");
    }
    Eigen::VectorXcd values(n);
    for (int i = 0; i < n; ++i)
        values(i) = mask[static_cast<size_t>(i)] ? -1.0 : 1.0;
    return {std::move(values), PhaseTag::binary};
}

double ppf_value(int n, int n_elements, double c, double p) {
    if (n_elements < 2)
        throw std::invalid_argument("ppf_value: n_elements must be >= 2");
    if (n < 0 || n >= n_elements)
        throw std::invalid_argument("ppf_value: element index out of range");
    if (c < 0.0)
        throw std::invalid_argument("ppf_value: c must be >= 0");
    if (!(p > 0.0))
        throw std::invalid_argument("ppf_value: p must be > 0");
    const double x = 0.5 / (n_elements - 1) + (n - 0.5 * n_elements) / (n_elements - 1);
    const double s = (x < 0.0 ? -1.0 : 1.0) * std::pow(std::abs(x), p);
    return std::abs(4.0 * std::numbers::pi * c * s);
}

PhaseProfile widening_vector(int n_elements, double c, double p) {
    Eigen::VectorXcd values(n_elements);
    for (int n = 0; n < n_elements; ++n)
        values(n) = std::polar(1.0, ppf_value(n, n_elements, c, p));
    return {std::move(values), PhaseTag::ppf};
}

PhaseProfile compose_template(const CophaseVector& cophase, const PhaseProfile& binary,
                              const PhaseProfile& ppf) {
    if (cophase.values.size() != binary.values.size() ||
        cophase.values.size() != ppf.values.size())
        throw std::invalid_argument("compose_template: length mismatch");
    Eigen::VectorXcd values =
        ppf.values.cwiseProduct(binary.values).cwiseProduct(cophase.values);
    return {std::move(values), PhaseTag::composed};
}

EffectiveWeights effective_weights(const PhaseProfile& phase, const PrincipalEigenmode& em) {
    if (phase.values.size() != em.u1.size())
        throw std::invalid_argument("effective_weights: length mismatch");
    return {phase.values.cwiseProduct(em.u1)};
}

EffectiveWeights effective_weights_from_modulus(const PhaseProfile& phase,
                                                const Eigen::VectorXd& modulus) {
    if (phase.values.size() != modulus.size())
        throw std::invalid_argument("effective_weights: length mismatch");
    return {phase.values.cwiseProduct(modulus.cast<std::complex<double>>())};
}

void write_phase_csv(std::ostream& os, const PhaseProfile& profile) {
    os << "index,phase_rad\n";
    os.precision(17);
    for (Eigen::Index n = 0; n < profile.values.size(); ++n)
        os << n << ',' << std::arg(profile.values(n)) << '\n';
}

}  // namespace risbeam
