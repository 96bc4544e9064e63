#include "risbeam/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace risbeam {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPowerFloor = 1e-30;
constexpr double kStopbandStepRad = 0.25 * kPi / 180.0;
constexpr double kMinTemperature = 1e-3;

struct SampleSet {
    Eigen::MatrixXcd steering;   // rows: samples, entries e^{-j pi n sin(theta)}
    Eigen::VectorXd element_db;  // 10 log10 E(theta) per sample
    int n_pass = 0;              // passband samples come first
};

SampleSet build_samples(const FlatTopSpec& spec, int n_elements,
                        const ElementPattern& element) {
    std::vector<double> angles;
    for (int k = 0; k < spec.grid_points; ++k)
        angles.push_back(spec.passband_lo +
                         (spec.passband_hi - spec.passband_lo) * k / (spec.grid_points - 1));
    const int n_pass = static_cast<int>(angles.size());
    for (const auto& [lo, hi] : spec.stopbands) {
        const int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / kStopbandStepRad)) + 1);
        for (int k = 0; k < n; ++k)
            angles.push_back(lo + (hi - lo) * k / (n - 1));
    }

    SampleSet s;
    s.n_pass = n_pass;
    const int total = static_cast<int>(angles.size());
    s.steering.resize(total, n_elements);
    s.element_db.resize(total);
    for (int k = 0; k < total; ++k) {
        const double sine = std::sin(angles[static_cast<size_t>(k)]);
        for (int n = 0; n < n_elements; ++n)
            s.steering(k, n) = std::polar(1.0, -kPi * n * sine);
        s.element_db(k) = 10.0 * std::log10(std::max(
            element_gain(element, std::abs(angles[static_cast<size_t>(k)])), kPowerFloor));
    }
    return s;
}

struct Evaluation {
    Eigen::VectorXd power_db;  // per sample
    double hard_ripple = 0.0;
    double hard_sidelobe = 0.0;  // max(0, excess over target)
    double hard_objective = 0.0;
    double smooth_objective = 0.0;
};

Eigen::VectorXcd weights_from_phases(const Eigen::VectorXd& modulus,
                                     const Eigen::VectorXd& phi) {
    Eigen::VectorXcd w(modulus.size());
    for (Eigen::Index n = 0; n < modulus.size(); ++n)
        w(n) = std::polar(modulus(n), phi(n));
    return w;
}

double log_sum_exp(const Eigen::VectorXd& x, double tau) {
    const double m = x.maxCoeff();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        acc += std::exp((x(i) - m) / tau);
    return m + tau * std::log(acc);
}

Evaluation evaluate(const SampleSet& s, const FlatTopSpec& spec,
                    const Eigen::VectorXcd& w, double tau) {
    Evaluation ev;
    const Eigen::VectorXcd f = s.steering * w;
    ev.power_db.resize(f.size());
    for (Eigen::Index k = 0; k < f.size(); ++k)
        ev.power_db(k) =
            10.0 * std::log10(std::max(std::norm(f(k)), kPowerFloor)) + s.element_db(k);

    const auto pass = ev.power_db.head(s.n_pass);
    const double mean = pass.mean();
    const Eigen::VectorXd dev = pass.array() - mean;
    ev.hard_ripple = dev.maxCoeff() - dev.minCoeff();

    const Eigen::Index n_stop = ev.power_db.size() - s.n_pass;
    double smooth_side = 0.0;
    if (n_stop > 0) {
        const Eigen::VectorXd excess =
            ev.power_db.tail(n_stop).array() - mean - spec.sidelobe_target_db;
        ev.hard_sidelobe = std::max(0.0, excess.maxCoeff());
        // hinge smooth-max over {excess, 0}
        const double m = std::max(0.0, excess.maxCoeff());
        double acc = std::exp(-m / tau);
        for (Eigen::Index j = 0; j < n_stop; ++j)
            acc += std::exp((excess(j) - m) / tau);
        smooth_side = m + tau * std::log(acc);
    }
    ev.hard_objective =
        spec.ripple_weight * ev.hard_ripple + spec.sidelobe_weight * ev.hard_sidelobe;
    ev.smooth_objective =
        spec.ripple_weight * (log_sum_exp(dev, tau) + log_sum_exp(-dev, tau)) +
        spec.sidelobe_weight * smooth_side;
    return ev;
}

// d smooth_objective / d phi, via the chain through per-sample dB powers.
Eigen::VectorXd smooth_gradient(const SampleSet& s, const FlatTopSpec& spec,
                                const Eigen::VectorXd& modulus, const Eigen::VectorXd& phi,
                                double tau) {
    const Eigen::VectorXcd w = weights_from_phases(modulus, phi);
    const Eigen::VectorXcd f = s.steering * w;
    const Eigen::Index total = f.size();

    Eigen::VectorXd power_db(total);
    Eigen::VectorXd array_power(total);
    for (Eigen::Index k = 0; k < total; ++k) {
        array_power(k) = std::norm(f(k));
        power_db(k) =
            10.0 * std::log10(std::max(array_power(k), kPowerFloor)) + s.element_db(k);
    }
    const auto pass = power_db.head(s.n_pass);
    const double mean = pass.mean();
    const Eigen::VectorXd dev = pass.array() - mean;

    // dJ/dP per sample
    Eigen::VectorXd dj_dp = Eigen::VectorXd::Zero(total);
    {
        const double m_pos = dev.maxCoeff();
        const double m_neg = (-dev).maxCoeff();
        Eigen::VectorXd sp(s.n_pass), sn(s.n_pass);
        double acc_p = 0.0, acc_n = 0.0;
        for (int k = 0; k < s.n_pass; ++k) {
            sp(k) = std::exp((dev(k) - m_pos) / tau);
            sn(k) = std::exp((-dev(k) - m_neg) / tau);
            acc_p += sp(k);
            acc_n += sn(k);
        }
        for (int k = 0; k < s.n_pass; ++k)
            dj_dp(k) += spec.ripple_weight * (sp(k) / acc_p - sn(k) / acc_n);
    }
    const Eigen::Index n_stop = total - s.n_pass;
    if (n_stop > 0) {
        const Eigen::VectorXd excess =
            power_db.tail(n_stop).array() - mean - spec.sidelobe_target_db;
        const double m = std::max(0.0, excess.maxCoeff());
        double acc = std::exp(-m / tau);
        Eigen::VectorXd sig(n_stop);
        for (Eigen::Index j = 0; j < n_stop; ++j) {
            sig(j) = std::exp((excess(j) - m) / tau);
            acc += sig(j);
        }
        double sum_sig = 0.0;
        for (Eigen::Index j = 0; j < n_stop; ++j) {
            sig(j) /= acc;
            sum_sig += sig(j);
        }
        for (Eigen::Index j = 0; j < n_stop; ++j)
            dj_dp(s.n_pass + j) += spec.sidelobe_weight * sig(j);
        // the passband mean is the sidelobe reference level
        for (int k = 0; k < s.n_pass; ++k)
            dj_dp(k) -= spec.sidelobe_weight * sum_sig / s.n_pass;
    }

    // dP_k/dphi_n = C * (-2 Im(conj(f_k) A_kn w_n)) / |f_k|^2
    constexpr double c_db = 10.0 / std::numbers::ln10;
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(phi.size());
    for (Eigen::Index k = 0; k < total; ++k) {
        if (dj_dp(k) == 0.0 || array_power(k) <= kPowerFloor)
            continue;
        const double scale = dj_dp(k) * c_db / array_power(k);
        const std::complex<double> fk_conj = std::conj(f(k));
        for (Eigen::Index n = 0; n < phi.size(); ++n)
            grad(n) -= 2.0 * scale * std::imag(fk_conj * s.steering(k, n) * w(n));
    }
    grad(0) = 0.0;  // gauge: one element's phase is pinned
    return grad;
}

}  // namespace

void FlatTopSpec::validate() const {
    if (!(passband_hi > passband_lo))
        throw std::invalid_argument("FlatTopSpec: empty passband");
    if (grid_points < 2)
        throw std::invalid_argument("FlatTopSpec: grid_points must be >= 2");
    if (ripple_weight < 0.0 || sidelobe_weight < 0.0)
        throw std::invalid_argument("FlatTopSpec: weights must be nonnegative");
    for (const auto& [lo, hi] : stopbands) {
        if (!(hi > lo))
            throw std::invalid_argument("FlatTopSpec: empty stopband interval");
        if (lo < passband_hi && hi > passband_lo)
            throw std::invalid_argument("FlatTopSpec: stopband overlaps passband");
    }
}

void OptimizerConfig::validate() const {
    if (max_iterations < 1 || stall_window < 1 || anneal_every < 1)
        throw std::invalid_argument("OptimizerConfig: iteration counts must be positive");
    if (!(tolerance_db > 0.0) || !(initial_step > 0.0) || !(min_step > 0.0) ||
        !(temperature_db > 0.0))
        throw std::invalid_argument("OptimizerConfig: tolerances and steps must be positive");
    if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0) ||
        !(anneal_factor > 0.0 && anneal_factor <= 1.0) || !(armijo_c1 > 0.0))
        throw std::invalid_argument("OptimizerConfig: invalid line-search parameters");
}

OptimizationReport optimize_phases(const Eigen::VectorXd& modulus, const PhaseProfile& init,
                                   const FlatTopSpec& spec, const OptimizerConfig& config,
                                   const ElementPattern& element) {
    spec.validate();
    config.validate();
    if (modulus.size() != init.values.size())
        throw std::invalid_argument("optimize_phases: modulus/init length mismatch");
    if (modulus.size() == 0)
        throw std::invalid_argument("optimize_phases: empty problem");
    if (modulus.minCoeff() < 0.0)
        throw std::invalid_argument("optimize_phases: modulus must be nonnegative");

    const int n = static_cast<int>(modulus.size());
    const SampleSet samples = build_samples(spec, n, element);

    Eigen::VectorXd phi(n);
    if (config.random_init) {
        std::mt19937_64 rng(config.seed);
        std::uniform_real_distribution<double> uni(-kPi, kPi);
        for (int i = 0; i < n; ++i)
            phi(i) = uni(rng);
    } else {
        for (int i = 0; i < n; ++i)
            phi(i) = std::arg(init.values(i));
    }

    double tau = config.temperature_db;
    Evaluation cur = evaluate(samples, spec, weights_from_phases(modulus, phi), tau);

    OptimizationReport report;
    report.initial_grid_ripple_db = cur.hard_ripple;
    // Trace records the (smooth) objective; Armijo acceptance keeps it
    // nonincreasing, and annealing tau only lowers the log-sum-exp value.
    report.objective_trace.push_back(cur.smooth_objective);

    // Returned iterate: lowest hard objective among visited iterates whose
    // grid ripple does not exceed the initial one (init itself qualifies).
    Eigen::VectorXd best_phi = phi;
    double best_ripple = cur.hard_ripple;
    double best_hard = cur.hard_objective;

    int accepted = 0;
    double step = config.initial_step;
    for (int iter = 0; iter < config.max_iterations; ++iter) {
        const Eigen::VectorXd grad = smooth_gradient(samples, spec, modulus, phi, tau);
        const double grad_norm2 = grad.squaredNorm();
        report.iterations = iter + 1;
        if (grad_norm2 < 1e-28) {
            report.objective_trace.push_back(cur.smooth_objective);
            report.converged = true;
            break;
        }

        bool moved = false;
        double alpha = step;
        while (alpha >= config.min_step) {
            const Eigen::VectorXd cand_phi = phi - alpha * grad;
            const Evaluation cand =
                evaluate(samples, spec, weights_from_phases(modulus, cand_phi), tau);
            if (cand.smooth_objective <=
                cur.smooth_objective - config.armijo_c1 * alpha * grad_norm2) {
                phi = cand_phi;
                cur = cand;
                moved = true;
                ++accepted;
                if (cur.hard_ripple <= report.initial_grid_ripple_db &&
                    cur.hard_objective <= best_hard) {
                    best_phi = phi;
                    best_ripple = cur.hard_ripple;
                    best_hard = cur.hard_objective;
                }
                step = std::min(alpha * 2.0, config.initial_step * 16.0);
                if (accepted % config.anneal_every == 0)
                    tau = std::max(tau * config.anneal_factor, kMinTemperature);
                break;
            }
            alpha *= config.backtrack_factor;
        }
        if (!moved)
            step = std::max(step * config.backtrack_factor, config.min_step);

        // re-evaluate only when tau changed this iteration
        if (moved && accepted % config.anneal_every == 0)
            cur = evaluate(samples, spec, weights_from_phases(modulus, phi), tau);
        report.objective_trace.push_back(cur.smooth_objective);

        const size_t t = report.objective_trace.size();
        if (static_cast<int>(t) > config.stall_window) {
            const double drop = report.objective_trace[t - 1 - config.stall_window] -
                                report.objective_trace[t - 1];
            if (drop < config.tolerance_db) {
                if (tau > kMinTemperature) {
                    // graduated sharpening: stalled at this smoothing level
                    tau = std::max(tau * config.anneal_factor, kMinTemperature);
                    cur = evaluate(samples, spec, weights_from_phases(modulus, phi), tau);
                    report.objective_trace.back() = cur.smooth_objective;
                    step = config.initial_step;
                } else {
                    report.converged = true;
                    break;
                }
            }
        }
    }

    Eigen::VectorXcd final_phase(n);
    for (int i = 0; i < n; ++i)
        final_phase(i) = std::polar(1.0, best_phi(i));
    report.phases = PhaseProfile{std::move(final_phase), PhaseTag::optimized};
    report.final_grid_ripple_db = best_ripple;

    const EffectiveWeights w = effective_weights_from_modulus(report.phases, modulus);
    const RadiationPattern dense = linear_pattern(w, AngularGrid::dense(), element);
    report.metrics = flat_top_metrics(dense, spec.passband_lo, spec.passband_hi);
    return report;
}

GridSensitivityReport grid_sensitivity_experiment(
    const Eigen::VectorXd& modulus, const PhaseProfile& init, const FlatTopSpec& spec,
    const std::vector<int>& grid_point_variants, const OptimizerConfig& config,
    const ElementPattern& element) {
    GridSensitivityReport report;
    for (int points : grid_point_variants) {
        FlatTopSpec variant = spec;  // only the grid sampling differs
        variant.grid_points = points;
        GridSensitivityEntry entry;
        entry.grid_points = points;
        entry.report = optimize_phases(modulus, init, variant, config, element);

        const EffectiveWeights w = effective_weights_from_modulus(entry.report.phases, modulus);
        const RadiationPattern dense = linear_pattern(w, AngularGrid::dense(), element);
        double pass_min = 0.0, pass_sum = 0.0;
        int count = 0;
        for (Eigen::Index i = 0; i < dense.grid.angles.size(); ++i) {
            const double a = dense.grid.angles(i);
            if (a < spec.passband_lo || a > spec.passband_hi)
                continue;
            const double db = dense.power_db(i);
            pass_min = count == 0 ? db : std::min(pass_min, db);
            pass_sum += db;
            ++count;
        }
        entry.dense_ripple_db = entry.report.metrics.passband_ripple_db;
        entry.coverage_gap_db = pass_sum / count - pass_min;
        entry.useful = entry.dense_ripple_db <= 3.0 && entry.coverage_gap_db <= 10.0;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

void write_grid_sensitivity_table(std::ostream& os, const GridSensitivityReport& report) {
    os << "grid_points converged iterations grid_ripple_db dense_ripple_db coverage_gap_db "
          "useful\n";
    for (const GridSensitivityEntry& e : report.entries) {
        os << e.grid_points << ' ' << (e.report.converged ? "yes" : "no") << ' '
           << e.report.iterations << ' ' << e.report.final_grid_ripple_db << ' '
           << e.dense_ripple_db << ' ' << e.coverage_gap_db << ' '
           << (e.useful ? "yes" : "no") << '\n';
    }
}

}  // namespace risbeam
