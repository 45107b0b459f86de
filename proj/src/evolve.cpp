#include "tlsho/evolve.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Cholesky>

#include "tlsho/errors.hpp"
#include "tlsho/measures.hpp"

namespace tlsho {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

long integral_ratio(double num, double den, const char* what) {
    const double r = num / den;
    const double rounded = std::round(r);
    if (!(rounded >= 1.0) || std::abs(r - rounded) > 1e-9 * std::max(1.0, rounded)) {
        std::ostringstream os;
        os << "IntegratorConfig: " << what << " (ratio " << r << ")";
        throw InvalidParameter(os.str());
    }
    return static_cast<long>(rounded);
}

bool wants(std::span<const Measure> measures, Measure m) {
    for (const Measure x : measures) {
        if (x == m) {
            return true;
        }
    }
    return false;
}

Sample record(const Matrix& rho, double t, Index n, std::span<const Measure> measures) {
    Sample s{t, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, Complex(kNaN, kNaN), kNaN};

    s.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
    // A Cholesky factorization of ρ + tol·I exists iff λ_min(ρ) > −tol; it is much cheaper
    // than the spectrum, which is only computed on request or on failure.
    bool positive = true;
    if (wants(measures, Measure::min_eig)) {
        s.min_eigenvalue = min_eigenvalue(rho);
        positive = s.min_eigenvalue >= -kPositivityTolerance;
    } else {
        const Eigen::LLT<Matrix> llt(rho + kPositivityTolerance * Matrix::Identity(rho.rows(), rho.cols()));
        if (llt.info() != Eigen::Success) {
            s.min_eigenvalue = min_eigenvalue(rho);
            positive = s.min_eigenvalue >= -kPositivityTolerance;
        }
    }
    if (s.trace_error > kTraceTolerance || !positive) {
        std::ostringstream os;
        os << "evolve: invariant violated at t=" << t << " (trace error " << s.trace_error
           << ", min eigenvalue " << s.min_eigenvalue << "); reduce dt or raise n_max";
        throw InvariantViolation(os.str());
    }
    const double edge = (rho(n - 1, n - 1) + rho(n - 2, n - 2) + rho(2 * n - 1, 2 * n - 1) +
                         rho(2 * n - 2, 2 * n - 2))
                            .real();
    if (edge > kEdgePopulationTolerance) {
        std::ostringstream os;
        os << "evolve: population " << edge << " on the top two Fock levels at t=" << t
           << "; raise n_max";
        throw TruncationError(os.str());
    }

    const DensityMatrix dm(rho, Basis::composite);
    if (wants(measures, Measure::negativity)) {
        s.negativity = negativity(dm);
    }
    if (wants(measures, Measure::k_r)) {
        s.k_r = participation_ratio(partial_trace(dm, Subsystem::oscillator));
    }
    if (wants(measures, Measure::k_sigma)) {
        s.k_sigma = participation_ratio(partial_trace(dm, Subsystem::qubit));
    }
    if (wants(measures, Measure::purity)) {
        s.purity = purity(dm);
    }
    if (wants(measures, Measure::mean_a)) {
        Complex mean(0.0, 0.0);
        for (Index b = 0; b < 2; ++b) {
            for (Index k = 1; k < n; ++k) {
                mean += std::sqrt(static_cast<double>(k)) * rho(b * n + k, b * n + k - 1);
            }
        }
        s.mean_a = mean;
    }
    if (wants(measures, Measure::sigma_z)) {
        s.sigma_z = (rho.topLeftCorner(n, n).trace() - rho.bottomRightCorner(n, n).trace()).real();
    }
    return s;
}

} // namespace

IntegratorConfig IntegratorConfig::per_period(const ModelParams& params, int steps_per_tau0,
                                              int samples_per_tau0, double periods,
                                              bool pulses_enabled) {
    if (steps_per_tau0 < 1 || samples_per_tau0 < 1) {
        throw InvalidParameter("IntegratorConfig: steps and samples per period must be >= 1");
    }
    IntegratorConfig cfg;
    cfg.dt = params.tau0 / steps_per_tau0;
    cfg.sample_interval = params.tau0 / samples_per_tau0;
    cfg.t_end = periods * params.tau0;
    cfg.pulses_enabled = pulses_enabled;
    return cfg;
}

void IntegratorConfig::validate(double tau0) const {
    if (!(dt > 0.0)) {
        throw InvalidParameter("IntegratorConfig: dt must be > 0");
    }
    if (!(sample_interval >= dt * (1.0 - 1e-12))) {
        throw InvalidParameter("IntegratorConfig: sample_interval must be >= dt");
    }
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
        throw InvalidParameter("IntegratorConfig: t_end must be finite and >= 0");
    }
    steps_per_period(tau0);
    steps_per_sample();
}

long IntegratorConfig::steps_per_period(double tau0) const {
    return integral_ratio(tau0, dt, "dt must divide tau0");
}

long IntegratorConfig::steps_per_sample() const {
    return integral_ratio(sample_interval, dt, "sample_interval must be a multiple of dt");
}

long IntegratorConfig::total_steps() const {
    if (t_end == 0.0) {
        return 0;
    }
    return integral_ratio(t_end, dt, "t_end must be a multiple of dt");
}

std::vector<Measure> all_measures() {
    return {Measure::negativity, Measure::k_r,     Measure::k_sigma, Measure::purity,
            Measure::trace_error, Measure::min_eig, Measure::mean_a,  Measure::sigma_z};
}

std::string_view measure_name(Measure m) {
    switch (m) {
    case Measure::negativity:
        return "negativity";
    case Measure::k_r:
        return "K_r";
    case Measure::k_sigma:
        return "K_sigma";
    case Measure::purity:
        return "purity";
    case Measure::trace_error:
        return "trace_error";
    case Measure::min_eig:
        return "min_eig";
    case Measure::mean_a:
        return "a";
    case Measure::sigma_z:
        return "sz";
    }
    return "?";
}

std::optional<Measure> parse_measure(std::string_view name) {
    for (const Measure m : all_measures()) {
        if (measure_name(m) == name) {
            return m;
        }
    }
    if (name == "re_a" || name == "im_a") {
        return Measure::mean_a;
    }
    return std::nullopt;
}

EvolveResult evolve(const DensityMatrix& rho0, const Liouvillian& generator,
                    const IntegratorConfig& cfg, std::span<const Measure> measures) {
    const FockSpace& space = generator.space();
    if (rho0.basis() != Basis::composite || rho0.dim() != space.dim()) {
        throw DimensionError("evolve: initial state does not match the Liouvillian space");
    }
    rho0.require_valid();
    const double tau0 = generator.params().tau0;
    cfg.validate(tau0);

    const long per_period = cfg.steps_per_period(tau0);
    const long per_sample = cfg.steps_per_sample();
    const long steps = cfg.total_steps();
    const Index n = space.n_max();
    const double dt = cfg.dt;

    Trajectory traj;
    traj.measures.assign(measures.begin(), measures.end());
    traj.samples.reserve(static_cast<std::size_t>(steps / per_sample + 1));

    Matrix rho = rho0.matrix();
    Matrix k1, k2, k3, k4, stage;
    traj.samples.push_back(record(rho, 0.0, n, measures));

    for (long k = 1; k <= steps; ++k) {
        const double t = static_cast<double>(k - 1) * dt;
        generator.rhs(rho, t, k1);
        stage = rho + (0.5 * dt) * k1;
        generator.rhs(stage, t + 0.5 * dt, k2);
        stage = rho + (0.5 * dt) * k2;
        generator.rhs(stage, t + 0.5 * dt, k3);
        stage = rho + dt * k3;
        generator.rhs(stage, t + dt, k4);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
        if (herm > kHermiticityTolerance) {
            std::ostringstream os;
            os << "evolve: hermiticity defect " << herm << " at t=" << (k * dt);
            throw InvariantViolation(os.str());
        }
        if (cfg.pulses_enabled && k % per_period == 0) {
            apply_pulse(rho);
        }
        if (k % per_sample == 0) {
            traj.samples.push_back(record(rho, static_cast<double>(k) * dt, n, measures));
        }
    }
    return EvolveResult{std::move(traj), DensityMatrix(std::move(rho), Basis::composite)};
}

DensityMatrix prepare_initial(const InitialState& initial, const ModelParams& params,
                              const FockSpace& space) {
    Matrix plus(2, 2);
    plus.setConstant(0.5);
    const DensityMatrix qubit(plus, Basis::qubit);
    switch (initial.kind) {
    case InitialKind::ground: {
        Matrix ground = Matrix::Zero(space.n_max(), space.n_max());
        ground(0, 0) = 1.0;
        return tensor(qubit, DensityMatrix(ground, Basis::oscillator));
    }
    case InitialKind::thermal:
        return tensor(qubit, thermal_density(params.nbar_r, space));
    case InitialKind::coherent:
        return tensor(qubit, DensityMatrix::from_pure(coherent_state(initial.alpha, space)));
    }
    throw InvalidParameter("prepare_initial: unknown initial state");
}

namespace {

std::vector<Sample> negativity_run(const InitialState& initial, const ModelParams& params,
                                   const FockSpace& space, const IntegratorConfig& cfg) {
    const Liouvillian generator(params, space);
    const std::vector<Measure> measures{Measure::negativity, Measure::k_r};
    return evolve(prepare_initial(initial, params, space), generator, cfg, measures)
        .trajectory.samples;
}

} // namespace

ConvergenceReport convergence_check(const InitialState& initial, const ModelParams& params,
                                    const FockSpace& space, const IntegratorConfig& cfg) {
    ConvergenceReport report;
    try {
        const auto base = negativity_run(initial, params, space, cfg);

        IntegratorConfig fine = cfg;
        fine.dt = cfg.dt / 2.0;
        const auto halved = negativity_run(initial, params, space, fine);
        const auto wider = negativity_run(initial, params, FockSpace(space.n_max() + 16), cfg);

        if (halved.size() != base.size() || wider.size() != base.size()) {
            throw InvalidParameter("convergence_check: sample grids differ");
        }
        for (std::size_t i = 0; i < base.size(); ++i) {
            report.negativity_deviation_dt = std::max(
                report.negativity_deviation_dt, std::abs(base[i].negativity - halved[i].negativity));
            report.negativity_deviation_nmax = std::max(
                report.negativity_deviation_nmax, std::abs(base[i].negativity - wider[i].negativity));
            report.k_r_deviation = std::max({report.k_r_deviation,
                                             std::abs(base[i].k_r - halved[i].k_r),
                                             std::abs(base[i].k_r - wider[i].k_r)});
        }
        report.max_negativity_deviation =
            std::max(report.negativity_deviation_dt, report.negativity_deviation_nmax);
        report.pass = report.max_negativity_deviation < kConvergenceTolerance;
    } catch (const Error& e) {
        report.pass = false;
        report.error = e.what();
    }
    return report;
}

} // namespace tlsho
