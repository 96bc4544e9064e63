#include <cmath>
#include <complex>
#include <sstream>

#include "doctest.h"
#include "risbeam/eigenmode.hpp"

using namespace risbeam;
using namespace std::complex_literals;

namespace {

CouplingMatrix paper_linear_coupling() {
    return coupling_matrix(AmafRisLayout::linear(40, 2, 9.4), ElementPattern::patch(),
                           ElementPattern::patch());
}

}  // namespace

TEST_SUITE_BEGIN("eigenmode");

TEST_CASE("principal eigenmode of the linear design") {
    const CouplingMatrix T = paper_linear_coupling();
    const PrincipalEigenmode em = principal_eigenmode(T);

    CHECK(em.sigma1 > 0.0);
    CHECK(std::abs(em.u1.norm() - 1.0) < 1e-12);
    CHECK(std::abs(em.v1.norm() - 1.0) < 1e-12);
    CHECK((T.entries * em.v1 - em.sigma1 * em.u1).norm() <= 1e-10 * em.sigma1);

    SUBCASE("centered two-element feed excites both ports equally") {
        CHECK(std::abs(std::abs(em.v1(0)) - std::abs(em.v1(1))) < 1e-6);
        CHECK(std::abs(std::abs(em.v1(0)) - 1.0 / std::sqrt(2.0)) < 1e-6);
    }

    SUBCASE("gauge convention: sum of v1 is real positive") {
        const std::complex<double> s = em.v1.sum();
        CHECK(s.real() > 0.0);
        CHECK(std::abs(s.imag()) < 1e-12);
    }

    SUBCASE("taper magnitude is symmetric and unimodal") {
        for (int n = 0; n < 40; ++n)
            CHECK(std::abs(std::abs(em.u1(n)) - std::abs(em.u1(39 - n))) < 1e-9);
        for (int n = 19; n > 0; --n)
            CHECK(std::abs(em.u1(n - 1)) <= std::abs(em.u1(n)) + 1e-9);
        for (int n = 20; n < 39; ++n)
            CHECK(std::abs(em.u1(n + 1)) <= std::abs(em.u1(n)) + 1e-9);
    }

    SUBCASE("singular values satisfy the Frobenius identity") {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T.entries);
        const Eigen::VectorXd s = svd.singularValues();
        CHECK(s(0) == doctest::Approx(em.sigma1).epsilon(1e-12));
        CHECK(s.squaredNorm() ==
              doctest::Approx(T.entries.squaredNorm()).epsilon(1e-10));
        for (Eigen::Index i = 1; i < s.size(); ++i)
            CHECK(s(i) <= s(i - 1));
    }
}

TEST_CASE("planar 2x2 feed gives the uniform eigenmode") {
    const CouplingMatrix T = coupling_matrix(AmafRisLayout::planar(40, 2, 9.4),
                                             ElementPattern::patch(), ElementPattern::patch());
    REQUIRE(T.entries.rows() == 1600);
    REQUIRE(T.entries.cols() == 4);
    const PrincipalEigenmode em = principal_eigenmode(T);
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(em.v1(i)) == doctest::Approx(0.5).epsilon(1e-2));
    CHECK((T.entries * em.v1 - em.sigma1 * em.u1).norm() <= 1e-10 * em.sigma1);
}

TEST_CASE("single-feed eigenmode reduces to the normalized column") {
    const CouplingMatrix T = coupling_matrix(AmafRisLayout::linear(16, 1, 5.0),
                                             ElementPattern::patch(), ElementPattern::patch());
    const PrincipalEigenmode em = principal_eigenmode(T);
    CHECK(em.sigma1 == doctest::Approx(T.entries.col(0).norm()).epsilon(1e-12));
    const Eigen::VectorXcd expected = T.entries.col(0) / T.entries.col(0).norm();
    // up to the fixed gauge rotation
    const std::complex<double> ratio = expected.dot(em.u1) /
                                       std::complex<double>(expected.squaredNorm(), 0.0);
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-10);
    for (int n = 0; n < 16; ++n)
        CHECK(std::abs(em.u1(n) - ratio * expected(n)) < 1e-10);
}

TEST_CASE("cophase vector flattens the taper phase") {
    const PrincipalEigenmode em = principal_eigenmode(paper_linear_coupling());
    const CophaseVector w = cophase_vector(em);
    CHECK(w.zero_amplitude_indices.empty());
    for (int n = 0; n < 40; ++n) {
        CHECK(std::abs(std::abs(w.values(n)) - 1.0) < 1e-12);
        const std::complex<double> flattened = w.values(n) * em.u1(n);
        CHECK(std::abs(flattened.imag()) < 1e-10);
        CHECK(flattened.real() >= -1e-12);
    }
}

TEST_CASE("cophase handles synthetic eigenmodes") {
    PrincipalEigenmode em;
    em.sigma1 = 1.0;

    SUBCASE("real positive taper maps to all ones") {
        em.u1 = Eigen::VectorXcd::Constant(4, 0.5);
        const CophaseVector w = cophase_vector(em);
        for (int n = 0; n < 4; ++n)
            CHECK(std::abs(w.values(n) - 1.0) < 1e-15);
    }

    SUBCASE("quarter-turn entry") {
        em.u1 = Eigen::VectorXcd::Constant(2, 1.0 / std::sqrt(2.0));
        em.u1(1) = 1i * (1.0 / std::sqrt(2.0));
        const CophaseVector w = cophase_vector(em);
        CHECK(std::abs(w.values(1) - (-1i)) < 1e-15);
    }

    SUBCASE("zero entries are pinned to one and reported") {
        em.u1 = Eigen::VectorXcd::Zero(3);
        em.u1(0) = 1.0;
        const CophaseVector w = cophase_vector(em);
        CHECK(w.zero_amplitude_indices == std::vector<int>{1, 2});
        CHECK(w.values(1) == std::complex<double>(1.0, 0.0));
    }
}

TEST_CASE("magnitude CSV export") {
    const PrincipalEigenmode em = principal_eigenmode(paper_linear_coupling());
    std::ostringstream os;
    write_magnitude_csv(os, em.u1);
    CHECK(os.str().rfind("index,magnitude\n", 0) == 0);
    int lines = 0;
    for (char ch : os.str())
        if (ch == '\n')
            ++lines;
    CHECK(lines == 41);
}

TEST_SUITE_END();
