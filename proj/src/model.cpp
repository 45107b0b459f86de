#include "tlsho/model.hpp"

#include <cmath>
#include <numbers>

#include "tlsho/errors.hpp"

namespace tlsho {

double bose_occupation(double x) {
    if (std::isinf(x) && x > 0.0) {
        return 0.0;
    }
    return 1.0 / std::expm1(x);
}

ModelParams derive_params(double omega0, double epsilon_z, double lambda0, double gamma, double c,
                          double temperature_ratio) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
        throw InvalidParameter("omega0 must be positive and finite");
    }
    if (!(epsilon_z > 0.0) || !std::isfinite(epsilon_z)) {
        throw InvalidParameter("epsilon_z must be positive and finite");
    }
    if (!(lambda0 >= 0.0) || !std::isfinite(lambda0)) {
        throw InvalidParameter("lambda0 must be >= 0");
    }
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
        throw InvalidParameter("Gamma must be >= 0");
    }
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw InvalidParameter("C must be >= 0");
    }
    if (!(temperature_ratio > 0.0)) {
        throw InvalidParameter("temperature_ratio (hbar*omega0/kT) must be > 0 (inf for T = 0)");
    }

    ModelParams p;
    p.omega0 = omega0;
    p.epsilon_z = epsilon_z;
    p.lambda0 = lambda0;
    p.gamma = gamma;
    p.c = c;
    p.temperature_ratio = temperature_ratio;
    p.alpha0 = lambda0 / (2.0 * omega0);
    p.tau0 = std::numbers::pi / omega0;
    p.nbar_r = bose_occupation(temperature_ratio);
    p.nbar_sigma = bose_occupation(temperature_ratio * epsilon_z / omega0);
    return p;
}

Liouvillian::Liouvillian(const ModelParams& params, const FockSpace& space)
    : params_(params), space_(space) {
    const Index n = space.n_max();
    rate_up_ = params.nbar_sigma * params.gamma;
    rate_down_ = (params.nbar_sigma + 1.0) * params.gamma;
    rate_create_ = params.nbar_r * params.c;
    rate_annihilate_ = (params.nbar_r + 1.0) * params.c;

    sqrt_k_ = Eigen::VectorXd::LinSpaced(n - 1, 1.0, static_cast<double>(n - 1)).cwiseSqrt();
    sqrt_outer_ = sqrt_k_ * sqrt_k_.transpose();

    // Σ rate·L†L is diagonal for all four channels.
    half_decay_.resize(space.dim());
    for (Index b = 0; b < 2; ++b) {
        const double spin = b == 0 ? rate_down_ : rate_up_;
        for (Index k = 0; k < n; ++k) {
            // a a† is truncated too: a†|n_max−1⟩ = 0 keeps the trace exactly conserved.
            const double kk = static_cast<double>(k);
            const double raised = k + 1 < n ? kk + 1.0 : 0.0;
            half_decay_(b * n + k) = 0.5 * (spin + rate_create_ * raised + rate_annihilate_ * kk);
        }
    }
}

// Every operator is banded within a spin block, so products reduce to shifted rows
// or columns scaled by √k.
void Liouvillian::rhs(const Matrix& rho, double t, Matrix& out) const {
    if (rho.rows() != space_.dim() || rho.cols() != space_.dim()) {
        throw DimensionError("master_rhs: density matrix does not match the Liouvillian space");
    }
    const Index n = space_.n_max();
    const Index m = n - 1;
    const Complex phase = std::polar(1.0, -params_.omega0 * t);
    const Complex coupling(0.0, params_.alpha0 * params_.omega0);

    // i α₀ω₀ (σ_b K ρ_bc − σ_c ρ_bc K) with K|k⟩ = φ√k|k−1⟩ + φ*√(k+1)|k+1⟩.
    out.resize(rho.rows(), rho.cols());
    const Complex down = coupling * phase;
    const Complex up = coupling * std::conj(phase);
    const Index dim = space_.dim();
    for (Index j = 0; j < dim; ++j) {
        const Index c = j / n;
        const Index l = j % n;
        const double sign_col = c == 0 ? 1.0 : -1.0;
        // ρK column j = φ √l ρ(:, j−1) + φ* √(l+1) ρ(:, j+1)
        const double wl_lo = l > 0 ? sqrt_k_(l - 1) : 0.0;
        const double wl_hi = l + 1 < n ? sqrt_k_(l) : 0.0;
        const Complex* col = rho.col(j).data();
        const Complex* col_lo = l > 0 ? rho.col(j - 1).data() : col;
        const Complex* col_hi = l + 1 < n ? rho.col(j + 1).data() : col;
        Complex* dst = out.col(j).data();
        for (Index b = 0; b < 2; ++b) {
            const double sign_row = b == 0 ? 1.0 : -1.0;
            const Index base = b * n;
            for (Index k = 0; k < n; ++k) {
                const Index i = base + k;
                Complex kr(0.0, 0.0);
                if (k + 1 < n) {
                    kr += down * sqrt_k_(k) * col[i + 1];
                }
                if (k > 0) {
                    kr += up * sqrt_k_(k - 1) * col[i - 1];
                }
                const Complex rk = down * wl_lo * col_lo[i] + up * wl_hi * col_hi[i];
                dst[i] = sign_row * kr - sign_col * rk;
            }
        }
    }

    for (Index b = 0; b < 2; ++b) {
        for (Index c = 0; c < 2; ++c) {
            const auto blk = rho.block(b * n, c * n, n, n);
            auto o = out.block(b * n, c * n, n, n);
            if (rate_annihilate_ != 0.0) {
                o.topLeftCorner(m, m) +=
                    rate_annihilate_ * sqrt_outer_.cwiseProduct(blk.bottomRightCorner(m, m));
            }
            if (rate_create_ != 0.0) {
                o.bottomRightCorner(m, m) +=
                    rate_create_ * sqrt_outer_.cwiseProduct(blk.topLeftCorner(m, m));
            }
        }
    }
    if (rate_up_ != 0.0) {
        out.topLeftCorner(n, n) += rate_up_ * rho.bottomRightCorner(n, n);
    }
    if (rate_down_ != 0.0) {
        out.bottomRightCorner(n, n) += rate_down_ * rho.topLeftCorner(n, n);
    }
    out -= half_decay_.asDiagonal() * rho;
    out -= rho * half_decay_.asDiagonal();
}

Matrix Liouvillian::rhs(const Matrix& rho, double t) const {
    Matrix out;
    rhs(rho, t, out);
    return out;
}

Matrix Liouvillian::interaction_hamiltonian(double t) const {
    const Complex phase = std::polar(1.0, -params_.omega0 * t);
    const Matrix a = annihilation(space_);
    const Matrix sz = pauli(Pauli::z);
    return -0.5 * params_.lambda0 * (phase * kron(sz, a) + std::conj(phase) * kron(sz, a.adjoint()));
}

Matrix master_rhs(const Liouvillian& generator, const DensityMatrix& rho, double t) {
    if (rho.basis() != Basis::composite) {
        throw BasisError("master_rhs: expected a composite density matrix");
    }
    return generator.rhs(rho.matrix(), t);
}

Matrix pulse_unitary(const FockSpace& space) {
    const Complex minus_i(0.0, -1.0);
    return kron(minus_i * pauli(Pauli::x), Matrix::Identity(space.n_max(), space.n_max()));
}

void apply_pulse(Matrix& rho) {
    const Index n = rho.rows() / 2;
    rho.topLeftCorner(n, n).swap(rho.bottomRightCorner(n, n));
    rho.topRightCorner(n, n).swap(rho.bottomLeftCorner(n, n));
}

DensityMatrix apply_pulse(const DensityMatrix& rho) {
    if (rho.basis() != Basis::composite) {
        throw BasisError("apply_pulse: expected a composite density matrix");
    }
    Matrix m = rho.matrix();
    apply_pulse(m);
    return DensityMatrix(std::move(m), Basis::composite);
}

} // namespace tlsho
