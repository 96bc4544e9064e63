#include "risbeam/pattern.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace risbeam {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPowerFloor = 1e-30;  // 10*log10 -> -300 dB

double to_db(double power) {
    return 10.0 * std::log10(std::max(power, kPowerFloor));
}

// Row of the pattern sum: a^H(theta) w = sum_n e^{-j pi n s} w_n, s = sin(theta).
std::complex<double> array_response(const Eigen::VectorXcd& w, double sine) {
    std::complex<double> acc = 0.0;
    const std::complex<double> step = std::polar(1.0, -kPi * sine);
    std::complex<double> phase = 1.0;
    for (Eigen::Index n = 0; n < w.size(); ++n) {
        acc += phase * w(n);
        phase *= step;
    }
    return acc;
}

void check_peak_bound(double max_power, const Eigen::VectorXcd& w) {
    const double bound = static_cast<double>(w.size()) * w.squaredNorm();
    if (max_power > bound * (1.0 + 1e-9))
        throw std::runtime_error("pattern: Cauchy-Schwarz peak bound violated");
}

}  // namespace

AngularGrid AngularGrid::uniform(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo))
        throw std::invalid_argument("AngularGrid: need n >= 2 and hi > lo");
    AngularGrid g;
    g.angles.resize(n);
    for (int i = 0; i < n; ++i)
        g.angles(i) = lo + (hi - lo) * i / (n - 1);
    g.validate();
    return g;
}

AngularGrid AngularGrid::dense() {
    return uniform(-kPi / 2.0, kPi / 2.0, 1801);
}

void AngularGrid::validate() const {
    if (angles.size() == 0)
        throw std::invalid_argument("AngularGrid: empty grid");
    const double lim = kPi / 2.0 + 1e-12;
    for (Eigen::Index i = 0; i < angles.size(); ++i) {
        if (std::abs(angles(i)) > lim)
            throw std::invalid_argument("AngularGrid: angle outside [-pi/2, pi/2]");
        if (i > 0 && !(angles(i) > angles(i - 1)))
            throw std::invalid_argument("AngularGrid: angles must be strictly increasing");
    }
}

Eigen::VectorXcd steering_vector(double theta, int n) {
    if (std::abs(theta) > kPi / 2.0 + 1e-12)
        throw std::invalid_argument("steering_vector: |theta| must be <= pi/2");
    Eigen::VectorXcd a(n);
    const double s = std::sin(theta);
    for (int k = 0; k < n; ++k)
        a(k) = std::polar(1.0, kPi * k * s);
    return a;
}

RadiationPattern linear_pattern(const EffectiveWeights& weights, const AngularGrid& grid,
                                const ElementPattern& element, Normalization normalization) {
    grid.validate();
    const Eigen::VectorXcd& w = weights.weights;
    if (w.size() == 0)
        throw std::invalid_argument("linear_pattern: empty weights");

    RadiationPattern p;
    p.grid = grid;
    p.normalization = normalization;
    p.power_db.resize(grid.angles.size());
    double max_array_power = 0.0;
    for (Eigen::Index i = 0; i < grid.angles.size(); ++i) {
        const double theta = grid.angles(i);
        const double af = std::norm(array_response(w, std::sin(theta)));
        max_array_power = std::max(max_array_power, af);
        p.power_db(i) = to_db(af * element_gain(element, std::abs(theta)));
    }
    check_peak_bound(max_array_power, w);
    if (normalization == Normalization::peak_zero_db)
        p.power_db.array() -= p.power_db.maxCoeff();
    return p;
}

Eigen::MatrixXcd planar_weights(const Eigen::VectorXcd& w_el, const Eigen::VectorXcd& w_az) {
    return w_el * w_az.adjoint();
}

PlanarPattern planar_pattern(const Eigen::MatrixXcd& W, const AngularGrid& az_grid,
                             const AngularGrid& el_grid, const ElementPattern& element,
                             Normalization normalization) {
    az_grid.validate();
    el_grid.validate();
    if (W.size() == 0)
        throw std::invalid_argument("planar_pattern: empty weights");

    const Eigen::Index n_az = az_grid.angles.size();
    const Eigen::Index n_el = el_grid.angles.size();

    // a_el^H W a_az on the whole grid: columns of A hold steering vectors.
    Eigen::MatrixXcd a_az(W.cols(), n_az);
    for (Eigen::Index j = 0; j < n_az; ++j)
        a_az.col(j) = steering_vector(az_grid.angles(j), static_cast<int>(W.cols()));
    Eigen::MatrixXcd a_el(W.rows(), n_el);
    for (Eigen::Index i = 0; i < n_el; ++i)
        a_el.col(i) = steering_vector(el_grid.angles(i), static_cast<int>(W.rows()));
    const Eigen::MatrixXcd response = a_el.adjoint() * W * a_az;  // n_el x n_az

    PlanarPattern p;
    p.az_grid = az_grid;
    p.el_grid = el_grid;
    p.normalization = normalization;
    p.power_db.resize(n_el, n_az);
    for (Eigen::Index i = 0; i < n_el; ++i) {
        const double v = std::sin(el_grid.angles(i));
        for (Eigen::Index j = 0; j < n_az; ++j) {
            const double u = std::sin(az_grid.angles(j));
            const double w2 = 1.0 - u * u - v * v;
            if (w2 <= 0.0) {
                p.power_db(i, j) = pattern_db_floor;  // outside visible region
                continue;
            }
            const double psi = std::acos(std::min(1.0, std::sqrt(w2)));
            p.power_db(i, j) = to_db(std::norm(response(i, j)) * element_gain(element, psi));
        }
    }
    if (normalization == Normalization::peak_zero_db)
        p.power_db.array() -= p.power_db.maxCoeff();
    return p;
}

FlatTopMetrics flat_top_metrics(const RadiationPattern& pattern, double passband_lo,
                                double passband_hi) {
    if (!(passband_hi > passband_lo))
        throw std::invalid_argument("flat_top_metrics: empty passband");
    const Eigen::VectorXd& ang = pattern.grid.angles;
    if (passband_lo < ang(0) || passband_hi > ang(ang.size() - 1))
        throw std::invalid_argument("flat_top_metrics: passband outside grid span");

    constexpr double guard = 2.0 * kPi / 180.0;

    double pass_min = std::numeric_limits<double>::infinity();
    double pass_max = -std::numeric_limits<double>::infinity();
    double pass_sum = 0.0;
    int pass_count = 0;
    double side_max = -std::numeric_limits<double>::infinity();
    int side_count = 0;
    for (Eigen::Index i = 0; i < ang.size(); ++i) {
        const double a = ang(i);
        const double db = pattern.power_db(i);
        if (a >= passband_lo && a <= passband_hi) {
            pass_min = std::min(pass_min, db);
            pass_max = std::max(pass_max, db);
            pass_sum += db;
            ++pass_count;
        } else if (a < passband_lo - guard || a > passband_hi + guard) {
            side_max = std::max(side_max, db);
            ++side_count;
        }
    }
    if (pass_count < 10)
        throw std::invalid_argument("flat_top_metrics: need >= 10 grid samples in the passband");
    if (side_count == 0)
        throw std::invalid_argument("flat_top_metrics: grid does not extend beyond the passband");

    FlatTopMetrics m;
    m.passband_ripple_db = pass_max - pass_min;
    m.passband_mean_db = pass_sum / pass_count;
    m.max_sidelobe_db = side_max - m.passband_mean_db;

    const double threshold = pass_min - 10.0;
    auto skirt_width = [&](bool right) {
        const double edge = right ? passband_hi : passband_lo;
        if (right) {
            for (Eigen::Index i = 0; i < ang.size(); ++i)
                if (ang(i) > edge && pattern.power_db(i) < threshold)
                    return ang(i) - edge;
            return ang(ang.size() - 1) - edge;
        }
        for (Eigen::Index i = ang.size() - 1; i >= 0; --i)
            if (ang(i) < edge && pattern.power_db(i) < threshold)
                return edge - ang(i);
        return edge - ang(0);
    };
    m.transition_width_deg =
        std::max(skirt_width(false), skirt_width(true)) * 180.0 / kPi;
    return m;
}

double width_at_drop(const RadiationPattern& pattern, double drop_db) {
    if (!(drop_db > 0.0))
        throw std::invalid_argument("width_at_drop: drop must be > 0 dB");
    const Eigen::VectorXd& ang = pattern.grid.angles;
    const Eigen::VectorXd& db = pattern.power_db;
    const double threshold = db.maxCoeff() - drop_db;

    Eigen::Index first = -1, last = -1;
    for (Eigen::Index i = 0; i < db.size(); ++i) {
        if (db(i) >= threshold) {
            if (first < 0)
                first = i;
            last = i;
        }
    }
    if (first < 0)
        throw std::runtime_error("width_at_drop: no sample above threshold");

    auto interpolate = [&](Eigen::Index inside, Eigen::Index outside) {
        const double t = (threshold - db(outside)) / (db(inside) - db(outside));
        return ang(outside) + t * (ang(inside) - ang(outside));
    };
    const double lo = first > 0 ? interpolate(first, first - 1) : ang(first);
    const double hi = last < db.size() - 1 ? interpolate(last, last + 1) : ang(last);
    return (hi - lo) * 180.0 / kPi;
}

void write_pattern_csv(std::ostream& os, const RadiationPattern& pattern) {
    os << "angle_deg,power_db\n";
    os.precision(17);
    for (Eigen::Index i = 0; i < pattern.grid.angles.size(); ++i)
        os << pattern.grid.angles(i) * 180.0 / kPi << ',' << pattern.power_db(i) << '\n';
}

void write_planar_pattern_csv(std::ostream& os, const PlanarPattern& pattern) {
    os << "az_deg,el_deg,power_db\n";
    os.precision(17);
    for (Eigen::Index i = 0; i < pattern.el_grid.angles.size(); ++i)
        for (Eigen::Index j = 0; j < pattern.az_grid.angles.size(); ++j)
            os << pattern.az_grid.angles(j) * 180.0 / kPi << ','
               << pattern.el_grid.angles(i) * 180.0 / kPi << ',' << pattern.power_db(i, j)
               << '\n';
}

}  // namespace risbeam
