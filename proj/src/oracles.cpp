#include "tlsho/oracles.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tlsho/errors.hpp"

namespace tlsho::oracles {

namespace {

constexpr double kSegmentTolerance = 1e-9;
const Complex kI(0.0, 1.0);

double sign_pow(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// Offset s = t − nτ₀ after checking nτ₀ ≤ t ≤ (n+1)τ₀ (right edge = pre-pulse limit).
double segment_offset(double t, int n, const ModelParams& params) {
    const double tau0 = params.tau0;
    const double s = t - n * tau0;
    if (n < 0 || s < -kSegmentTolerance * tau0 || s > (1.0 + kSegmentTolerance) * tau0) {
        std::ostringstream os;
        os << "t=" << t << " lies outside segment n=" << n;
        throw InvalidParameter(os.str());
    }
    return std::max(0.0, s);
}

double effective_width(double t, const ModelParams& params, OscillatorStart start) {
    if (start == OscillatorStart::thermal) {
        return params.nbar_r;
    }
    return -params.nbar_r * std::expm1(-params.c * t);
}

} // namespace

int segment_index(double t, const ModelParams& params) {
    return static_cast<int>(std::floor(t / params.tau0 + kSegmentTolerance));
}

CoherentAmplitude alpha_tilde_nodecoh(double t, int n, const ModelParams& params) {
    const double s = segment_offset(t, n, params);
    const double a0 = params.alpha0;
    const Complex value = 2.0 * n * a0 + a0 * (1.0 - std::polar(1.0, params.omega0 * s));
    return {value, Regime::no_decoherence, n, t};
}

CoherentAmplitude alpha_tilde_decoh(double t, int n, const ModelParams& params) {
    const double s = segment_offset(t, n, params);
    const double w = params.omega0;
    const double c = params.c;
    const double tau0 = params.tau0;
    const Complex prefactor =
        params.alpha0 * w * std::exp(-0.5 * c * (n - 1) * tau0) / Complex(w, -0.5 * c);
    const double q = std::exp(-0.5 * c * tau0);
    const Complex bracket = static_cast<double>(n) * (1.0 + q) +
                            std::polar(1.0, w * s) * q *
                                (std::exp(-Complex(0.5 * c, w) * s) - 1.0);
    return {prefactor * bracket, Regime::decoherence, n, t};
}

CoherentAmplitude alpha_tilde_driven(double t, int n, const ModelParams& params) {
    const double s = segment_offset(t, n, params);
    const double w = params.omega0;
    const double c = params.c;
    const Complex gain = params.alpha0 * w / Complex(w, -0.5 * c);
    const double q = std::exp(-0.5 * c * params.tau0);
    // Σ_{k<n} q^k, written so that 𝒞 → 0 gives n.
    const double geometric = (c == 0.0) ? static_cast<double>(n)
                                        : std::expm1(-0.5 * c * params.tau0 * n) /
                                              std::expm1(-0.5 * c * params.tau0);
    const Complex at_pulse = gain * (1.0 + q) * geometric;
    const double decay = std::exp(-0.5 * c * s);
    const Complex value = decay * at_pulse + gain * (decay - std::polar(1.0, w * s));
    return {value, Regime::decoherence, n, t};
}

PureState cat_state(double t, int n, const ModelParams& params, const FockSpace& space) {
    const Complex amp = alpha_tilde_nodecoh(t, n, params).value;
    const double sign = sign_pow(n);
    const Index m = space.n_max();
    Vector psi(space.dim());
    psi.head(m) = coherent_state(-sign * amp, space).amplitudes();
    psi.tail(m) = coherent_state(sign * amp, space).amplitudes();
    psi /= std::sqrt(2.0);
    psi /= psi.norm();
    return PureState(std::move(psi), Basis::composite);
}

double k_pure(double abs_alpha_tilde) {
    return 2.0 / (1.0 + std::exp(-4.0 * abs_alpha_tilde * abs_alpha_tilde));
}

double n_pure(double abs_alpha_tilde) {
    return 0.5 * std::sqrt(-std::expm1(-4.0 * abs_alpha_tilde * abs_alpha_tilde));
}

Matrix spin_displacement(Complex beta, const FockSpace& space) {
    const Index m = space.n_max();
    Matrix out = Matrix::Zero(space.dim(), space.dim());
    out.topLeftCorner(m, m) = displacement(beta, space);
    out.bottomRightCorner(m, m) = displacement(-beta, space);
    return out;
}

Matrix one_period_unitary(const ModelParams& params, const FockSpace& space) {
    const Matrix d = spin_displacement(params.alpha0, space);
    const Matrix flip = kron(Matrix::Identity(2, 2), parity(space));
    return d * flip * d.adjoint();
}

Matrix composed_unitary(int n, const ModelParams& params, const FockSpace& space) {
    if (n < 1) {
        throw InvalidParameter("composed_unitary: n must be >= 1");
    }
    const Matrix kick = kron(-kI * pauli(Pauli::x), Matrix::Identity(space.n_max(), space.n_max()));
    const Matrix step = kick * one_period_unitary(params, space);
    Matrix u = step;
    for (int k = 1; k < n; ++k) {
        u = step * u;
    }
    return u;
}

Matrix stroboscopic_unitary(int n, const ModelParams& params, const FockSpace& space) {
    if (n < 1) {
        throw InvalidParameter("stroboscopic_unitary: n must be >= 1");
    }
    const Complex phase = std::pow(-kI, n);
    const Matrix d_dag = spin_displacement(-2.0 * n * params.alpha0, space);
    if (n % 2 == 0) {
        return phase * d_dag;
    }
    return phase * kron(pauli(Pauli::x), parity(space)) * d_dag;
}

Matrix interaction_frame(int n, const ModelParams& params, const FockSpace& space) {
    const Index m = space.n_max();
    const double t = n * params.tau0;
    Vector diag(space.dim());
    for (Index k = 0; k < m; ++k) {
        const double osc = params.omega0 * static_cast<double>(k);
        diag(k) = std::polar(1.0, (osc - 0.5 * params.epsilon_z) * t);
        diag(m + k) = std::polar(1.0, (osc + 0.5 * params.epsilon_z) * t);
    }
    return diag.asDiagonal();
}

double GaussianP::value(Complex alpha) const {
    if (width <= 0.0) {
        return 0.0;
    }
    return weight / (std::numbers::pi * width) * std::exp(-std::norm(alpha - center) / width);
}

Matrix p_to_matrix(const GaussianP& p, const FockSpace& space) {
    const Matrix d = displacement(p.center, space);
    Matrix base;
    if (p.width > 0.0) {
        base = thermal_density(p.width, space).matrix();
    } else {
        base = Matrix::Zero(space.n_max(), space.n_max());
        base(0, 0) = 1.0;
    }
    return p.weight * d * base * d.adjoint();
}

double k_from_p(std::span<const GaussianP> mixture) {
    double inverse = 0.0;
    for (const GaussianP& a : mixture) {
        for (const GaussianP& b : mixture) {
            const double spread = 1.0 + a.width + b.width;
            inverse += a.weight * b.weight * std::exp(-std::norm(a.center - b.center) / spread) /
                       spread;
        }
    }
    return 1.0 / inverse;
}

Complex ThermalPBlocks::up_down(Complex alpha) const {
    const double kappa = 1.0 / nbar + 2.0;
    const double b = n * alpha0;
    const double magnitude = std::exp(4.0 * kappa * b * b - std::norm(alpha) / nbar) /
                             (2.0 * std::numbers::pi * nbar);
    // (α − α*) = 2i Im α, so the last factor is a pure phase.
    const double phase = 4.0 * sign_pow(n) * kappa * b * alpha.imag();
    return std::polar(magnitude, phase);
}

Complex ThermalPBlocks::down_up(Complex alpha) const { return std::conj(up_down(alpha)); }

ThermalPBlocks thermal_p_blocks(int n, const ModelParams& params) {
    if (n < 0) {
        throw InvalidParameter("thermal_p_blocks: n must be >= 0");
    }
    if (!(params.nbar_r > 0.0)) {
        throw InvalidParameter("thermal_p_blocks: requires a finite temperature (nbar_r > 0)");
    }
    const double shift = 2.0 * n * params.alpha0 * sign_pow(n);
    ThermalPBlocks blocks;
    blocks.up_up = GaussianP{0.5, Complex(-shift, 0.0), params.nbar_r};
    blocks.down_down = GaussianP{0.5, Complex(shift, 0.0), params.nbar_r};
    blocks.n = n;
    blocks.nbar = params.nbar_r;
    blocks.alpha0 = params.alpha0;
    return blocks;
}

Matrix thermal_state_at_period(int n, const ModelParams& params, const FockSpace& space) {
    const ThermalPBlocks blocks = thermal_p_blocks(n, params);
    const Index m = space.n_max();
    const Matrix d = displacement(blocks.up_up.center, space);
    const Matrix coherence = 0.5 * d * thermal_density(params.nbar_r, space).matrix() * d;
    Matrix rho(space.dim(), space.dim());
    rho.topLeftCorner(m, m) = p_to_matrix(blocks.up_up, space);
    rho.bottomRightCorner(m, m) = p_to_matrix(blocks.down_down, space);
    rho.topRightCorner(m, m) = coherence;
    rho.bottomLeftCorner(m, m) = coherence.adjoint();
    return rho;
}

double k_sigma_thermal(int n, const ModelParams& params) {
    const double a0 = params.alpha0;
    return 2.0 / (1.0 + std::exp(-16.0 * n * n * a0 * a0 * (1.0 + 2.0 * params.nbar_r)));
}

double k_r_thermal_stroboscopic(int n, const ModelParams& params) {
    const double a0 = params.alpha0;
    const double mix = 1.0 + 2.0 * params.nbar_r;
    return 2.0 * mix / (1.0 + std::exp(-16.0 * n * n * a0 * a0 / mix));
}

double k_r_thermal_nodecoh_bare(double t, int n, const ModelParams& params) {
    const double amp = std::abs(alpha_tilde_nodecoh(t, n, params).value);
    return 2.0 / (1.0 + std::exp(-4.0 * amp * amp / (2.0 * params.nbar_r + 1.0)));
}

double k_r_thermal_nodecoh(double t, int n, const ModelParams& params) {
    return (1.0 + 2.0 * params.nbar_r) * k_r_thermal_nodecoh_bare(t, n, params);
}

double k_r_decoh_from_amplitude(double t, double abs_alpha_tilde, const ModelParams& params,
                                OscillatorStart start) {
    const double mix = 2.0 * effective_width(t, params, start) + 1.0;
    return 2.0 * mix / (1.0 + std::exp(-4.0 * abs_alpha_tilde * abs_alpha_tilde / mix));
}

double k_r_decoh(double t, int n, const ModelParams& params, OscillatorStart start) {
    return k_r_decoh_from_amplitude(t, std::abs(alpha_tilde_decoh(t, n, params).value), params,
                                    start);
}

GaussianP decohered_block(Complex alpha_tilde, double t, int n, const ModelParams& params,
                          OscillatorStart start, Spin spin) {
    const double sign = -sign_pow(n) * (spin == Spin::up ? 1.0 : -1.0);
    return GaussianP{0.5, sign * alpha_tilde, effective_width(t, params, start)};
}

Complex fp_drive_shift(double t, int n, const ModelParams& params, Spin spin) {
    const double s = segment_offset(t, n, params);
    const double w = params.omega0;
    const double c = params.c;
    const double spin_sign = (spin == Spin::up) ? 1.0 : -1.0;
    const Complex from_zero = spin_sign * sign_pow(n) * params.alpha0 * w *
                              std::polar(1.0, w * t) *
                              (std::exp(-Complex(0.5 * c, w) * s) - 1.0) / Complex(w, -0.5 * c);
    return sign_pow(n) * std::exp(-0.5 * c * n * params.tau0) * from_zero;
}

double fp_green(Complex alpha, Complex alpha_src, double t, int n, const ModelParams& params,
                Spin spin) {
    const double s = segment_offset(t, n, params);
    if (!(s > 0.0) || !(params.c > 0.0) || !(params.nbar_r > 0.0)) {
        throw InvalidParameter("fp_green: requires t > n*tau0, C > 0 and nbar_r > 0");
    }
    const double var = -params.nbar_r * std::expm1(-params.c * s);
    const Complex shift = fp_drive_shift(t, n, params, spin);
    const Complex d = alpha - alpha_src * std::exp(-0.5 * params.c * s) + shift;
    return std::exp(-std::norm(d) / var) / (std::numbers::pi * var);
}

GaussianP fp_propagate(const GaussianP& p, double t, int n, const ModelParams& params, Spin spin) {
    const double s = segment_offset(t, n, params);
    const double decay = std::exp(-params.c * s);
    GaussianP out;
    out.weight = p.weight;
    out.center = p.center * std::exp(-0.5 * params.c * s) - fp_drive_shift(t, n, params, spin);
    out.width = p.width * decay - params.nbar_r * std::expm1(-params.c * s);
    return out;
}

} // namespace tlsho::oracles
