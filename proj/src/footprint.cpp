#include "risbeam/footprint.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace risbeam {

namespace {

constexpr double kPowerFloor = 1e-30;

Eigen::VectorXd axis_nodes(double lo, double hi, double res) {
    const int n = static_cast<int>(std::round((hi - lo) / res)) + 1;
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i)
        v(i) = lo + i * res;
    return v;
}

// a^H(sine) w with the same convention as the pattern module.
std::complex<double> response_1d(const Eigen::VectorXcd& w, double sine) {
    const std::complex<double> step = std::polar(1.0, -std::numbers::pi * sine);
    std::complex<double> phase = 1.0, acc = 0.0;
    for (Eigen::Index n = 0; n < w.size(); ++n) {
        acc += phase * w(n);
        phase *= step;
    }
    return acc;
}

FootprintGrid footprint_impl(const std::function<double(double, double)>& array_power,
                             const ElementPattern& element,
                             const DeploymentScenario& sc) {
    sc.validate();
    FootprintGrid g;
    g.x_m = axis_nodes(sc.x_min_m, sc.x_max_m, sc.resolution_m);
    g.y_m = axis_nodes(sc.y_min_m, sc.y_max_m, sc.resolution_m);
    g.power_db.resize(g.y_m.size(), g.x_m.size());

    const double h = sc.mount_height_m;
    const double sin_t = std::sin(sc.downtilt_rad);
    const double cos_t = std::cos(sc.downtilt_rad);

    for (Eigen::Index r = 0; r < g.y_m.size(); ++r) {
        const double y = g.y_m(r);
        for (Eigen::Index c = 0; c < g.x_m.size(); ++c) {
            const double x = g.x_m(c);
            const double dist = std::sqrt(x * x + y * y + h * h);
            // direction cosines in the tilted array frame
            const double u = y / dist;                        // azimuth axis (world y)
            const double v = (x * cos_t - h * sin_t) / dist;  // elevation axis
            const double w = (x * sin_t + h * cos_t) / dist;  // boresight
            if (w <= 0.0) {
                g.power_db(r, c) = pattern_db_floor;  // behind the array plane
                continue;
            }
            const double psi = std::acos(std::min(1.0, w));
            const double p = array_power(u, v) * element_gain(element, psi) / (dist * dist);
            g.power_db(r, c) = 10.0 * std::log10(std::max(p, kPowerFloor));
        }
    }
    g.power_db.array() -= g.power_db.maxCoeff();
    return g;
}

}  // namespace

void DeploymentScenario::validate() const {
    if (!(mount_height_m > 0.0))
        throw std::invalid_argument("DeploymentScenario: mount_height must be > 0");
    if (!(resolution_m > 0.0))
        throw std::invalid_argument("DeploymentScenario: resolution must be > 0");
    if (!(x_max_m > x_min_m) || !(y_max_m > y_min_m))
        throw std::invalid_argument("DeploymentScenario: empty ground extent");
    if (!(carrier_wavelength_m > 0.0))
        throw std::invalid_argument("DeploymentScenario: wavelength must be > 0");
}

FootprintGrid ground_footprint(const Eigen::MatrixXcd& W, const ElementPattern& element,
                               const DeploymentScenario& scenario) {
    if (W.size() == 0)
        throw std::invalid_argument("ground_footprint: empty weights");
    auto power = [&W](double u, double v) {
        Eigen::VectorXcd a_az(W.cols());
        for (Eigen::Index c = 0; c < W.cols(); ++c)
            a_az(c) = std::polar(1.0, std::numbers::pi * c * u);
        const Eigen::VectorXcd m = W * a_az;
        return std::norm(response_1d(m, v));  // a_el^H (W a_az)
    };
    return footprint_impl(power, element, scenario);
}

FootprintGrid ground_footprint(const Eigen::VectorXcd& w_el, const Eigen::VectorXcd& w_az,
                               const ElementPattern& element,
                               const DeploymentScenario& scenario) {
    if (w_el.size() == 0 || w_az.size() == 0)
        throw std::invalid_argument("ground_footprint: empty weights");
    auto power = [&](double u, double v) {
        // |a_el^H w_el|^2 |a_az^H w_az|^2, the rank-1 separable form
        return std::norm(response_1d(w_el, v)) * std::norm(response_1d(w_az, u));
    };
    return footprint_impl(power, element, scenario);
}

double footprint_extent_m(const FootprintGrid& grid, bool along_x, double drop_db) {
    Eigen::Index peak_r = 0, peak_c = 0;
    grid.power_db.maxCoeff(&peak_r, &peak_c);
    const Eigen::VectorXd& axis = along_x ? grid.x_m : grid.y_m;
    Eigen::VectorXd line(axis.size());
    for (Eigen::Index i = 0; i < axis.size(); ++i)
        line(i) = along_x ? grid.power_db(peak_r, i) : grid.power_db(i, peak_c);

    const double threshold = line.maxCoeff() - drop_db;
    Eigen::Index first = -1, last = -1;
    for (Eigen::Index i = 0; i < line.size(); ++i) {
        if (line(i) >= threshold) {
            if (first < 0)
                first = i;
            last = i;
        }
    }
    auto interpolate = [&](Eigen::Index inside, Eigen::Index outside) {
        const double t = (threshold - line(outside)) / (line(inside) - line(outside));
        return axis(outside) + t * (axis(inside) - axis(outside));
    };
    const double lo = first > 0 ? interpolate(first, first - 1) : axis(first);
    const double hi = last < line.size() - 1 ? interpolate(last, last + 1) : axis(last);
    return hi - lo;
}

void write_footprint_csv(std::ostream& os, const FootprintGrid& grid) {
    os << "x_m,y_m,power_db\n";
    os.precision(17);
    for (Eigen::Index r = 0; r < grid.y_m.size(); ++r)
        for (Eigen::Index c = 0; c < grid.x_m.size(); ++c)
            os << grid.x_m(c) << ',' << grid.y_m(r) << ',' << grid.power_db(r, c) << '\n';
}

void write_footprint_raster(std::ostream& os, const FootprintGrid& grid) {
    os << "# rows: y from " << grid.y_m(0) << " m, cols: x from " << grid.x_m(0)
       << " m, step " << (grid.x_m.size() > 1 ? grid.x_m(1) - grid.x_m(0) : 0.0)
       << " m, values: dB rel peak\n";
    os.precision(6);
    for (Eigen::Index r = 0; r < grid.y_m.size(); ++r) {
        for (Eigen::Index c = 0; c < grid.x_m.size(); ++c) {
            if (c > 0)
                os << ' ';
            os << grid.power_db(r, c);
        }
        os << '\n';
    }
}

}  // namespace risbeam
