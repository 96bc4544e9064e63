#include "risbeam/eigenmode.hpp"

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

namespace risbeam {

PrincipalEigenmode principal_eigenmode(const CouplingMatrix& T) {
    if (T.entries.size() == 0)
        throw std::invalid_argument("principal_eigenmode: empty matrix");

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T.entries, Eigen::ComputeThinU | Eigen::ComputeThinV);
    PrincipalEigenmode em;
    em.sigma1 = svd.singularValues()(0);
    if (!(em.sigma1 > 0.0) || em.sigma1 < 1e-300 * T.entries.norm())
        throw std::runtime_error("principal_eigenmode: degenerate geometry, sigma1 is zero");
    em.u1 = svd.matrixU().col(0);
    em.v1 = svd.matrixV().col(0);

    // Gauge fix: joint rotation leaves T v1 = sigma1 u1 invariant.
    const std::complex<double> s = em.v1.sum();
    double alpha;
    if (std::abs(s) > 1e-12) {
        alpha = -std::arg(s);
    } else {
        const Eigen::Index h = em.u1.size() / 2;
        const std::complex<double> central =
            em.u1.size() % 2 == 1 ? em.u1(h) : em.u1(h - 1) + em.u1(h);
        alpha = -std::arg(central);
    }
    const std::complex<double> rot = std::polar(1.0, alpha);
    em.u1 *= rot;
    em.v1 *= rot;
    return em;
}

CophaseVector cophase_vector(const PrincipalEigenmode& em) {
    CophaseVector w;
    w.values.resize(em.u1.size());
    for (Eigen::Index n = 0; n < em.u1.size(); ++n) {
        if (em.u1(n) == std::complex<double>(0.0, 0.0)) {
            w.values(n) = 1.0;
            w.zero_amplitude_indices.push_back(static_cast<int>(n));
        } else {
            w.values(n) = std::polar(1.0, -std::arg(em.u1(n)));
        }
    }
    return w;
}

void write_magnitude_csv(std::ostream& os, const Eigen::VectorXcd& v) {
    os << "index,magnitude\n";
    os.precision(17);
    for (Eigen::Index n = 0; n < v.size(); ++n)
        os << n << ',' << std::abs(v(n)) << '\n';
}

}  // namespace risbeam
