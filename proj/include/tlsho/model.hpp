// model.hpp — physical parameters and the interaction-picture master-equation generator
//
// Natural units: ħ = 1, and ω₀ = 1 by default so that τ₀ = π.

#pragma once

#include "tlsho/hilbert.hpp"

namespace tlsho {

struct ModelParams {
    double omega0{1.0};
    double epsilon_z{2.0};        // qubit splitting; ε_z τ₀ = 2π makes the pulse phases trivial
    double lambda0{0.0};          // qubit–oscillator coupling
    double gamma{0.0};            // qubit dissipation rate Γ
    double c{0.0};                // oscillator dissipation rate 𝒞
    double temperature_ratio{0.0}; // ħω₀ / k_B T; +inf means zero temperature

    // Derived by derive_params.
    double alpha0{0.0};
    double nbar_sigma{0.0};
    double nbar_r{0.0};
    double tau0{0.0};
};

// Throws InvalidParameter for non-positive ω₀, ε_z or temperature ratio and
// for negative rates or coupling.
ModelParams derive_params(double omega0, double epsilon_z, double lambda0, double gamma, double c,
                          double temperature_ratio);

// Bose occupation 1/(e^x − 1); zero for x = +inf.
double bose_occupation(double x);

class Liouvillian {
public:
    Liouvillian(const ModelParams& params, const FockSpace& space);

    const ModelParams& params() const { return params_; }
    const FockSpace& space() const { return space_; }

    // dρ/dt without the δ-pulse term. `out` must not alias `rho`.
    void rhs(const Matrix& rho, double t, Matrix& out) const;
    Matrix rhs(const Matrix& rho, double t) const;

    // H̃_I(t) = −(λ₀/2)(a e^{−iω₀t} + a† e^{iω₀t}) σ_z, dense.
    Matrix interaction_hamiltonian(double t) const;

private:
    ModelParams params_;
    FockSpace space_;
    // Jump rates for σ₊⊗I, σ₋⊗I, I⊗a†, I⊗a.
    double rate_up_{0.0};
    double rate_down_{0.0};
    double rate_create_{0.0};
    double rate_annihilate_{0.0};
    Eigen::VectorXd sqrt_k_;       // √1 … √(n_max−1)
    Eigen::MatrixXd sqrt_outer_;   // √k √l
    Eigen::VectorXd half_decay_;   // diag of Σ rate·L†L / 2
};

Matrix master_rhs(const Liouvillian& generator, const DensityMatrix& rho, double t);

// (−iσ_x) ⊗ I.
Matrix pulse_unitary(const FockSpace& space);

// ρ → (σ_x⊗I) ρ (σ_x⊗I): swaps the ↑/↓ blocks in place, exactly.
void apply_pulse(Matrix& rho);
DensityMatrix apply_pulse(const DensityMatrix& rho);

} // namespace tlsho
