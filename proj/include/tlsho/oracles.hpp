// oracles.hpp — closed-form reference results for the pulsed qubit–oscillator model
//
// Everything here is evaluated analytically (or from exact operator algebra) and
// never calls the integrator, so it can be used to validate evolve().
// Segment index n labels nτ₀ ≤ t < (n+1)τ₀; states at t = nτ₀ are post-pulse.

#pragma once

#include <span>

#include "tlsho/hilbert.hpp"
#include "tlsho/model.hpp"

namespace tlsho::oracles {

enum class Regime { no_decoherence, decoherence };
enum class Spin { up, down };
enum class OscillatorStart { ground, thermal };

struct CoherentAmplitude {
    Complex value;
    Regime regime;
    int segment;
    double t;
};

// floor(t/τ₀) with a small tolerance so t = nτ₀ maps to segment n.
int segment_index(double t, const ModelParams& params);

// α̃(t, nτ₀) = 2nα₀ + α₀(1 − e^{iω₀(t−nτ₀)}). Throws InvalidParameter outside the segment.
CoherentAmplitude alpha_tilde_nodecoh(double t, int n, const ModelParams& params);

// Reference closed form of the decohered amplitude:
//   α₀ω₀ e^{−𝒞(n−1)τ₀/2}/(ω₀ − i𝒞/2) · {n(1+e^{−𝒞τ₀/2})
//     + e^{iω₀(t−nτ₀)} e^{−𝒞τ₀/2}[e^{−(iω₀+𝒞/2)(t−nτ₀)} − 1]}
// It agrees with the damped driven oscillator only for n = 0; see alpha_tilde_driven.
CoherentAmplitude alpha_tilde_decoh(double t, int n, const ModelParams& params);

// Branch amplitude of the damped, pulse-rectified driven oscillator obtained by
// integrating d⟨a⟩/dt = −(𝒞/2)⟨a⟩ ± iα₀ω₀e^{iω₀t} segment by segment:
//   α̃(nτ₀) = α₀ω₀(1+q)/(ω₀ − i𝒞/2) · Σ_{k<n} q^k,  q = e^{−𝒞τ₀/2}
//   α̃(t)   = e^{−𝒞s/2} α̃(nτ₀) + α₀ω₀(e^{−𝒞s/2} − e^{iω₀s})/(ω₀ − i𝒞/2),  s = t − nτ₀
// Reduces to alpha_tilde_nodecoh at 𝒞 = 0.
CoherentAmplitude alpha_tilde_driven(double t, int n, const ModelParams& params);

// (|↑⟩|−(−1)ⁿα̃⟩ + |↓⟩|(−1)ⁿα̃⟩)/√2 with the no-decoherence α̃.
PureState cat_state(double t, int n, const ModelParams& params, const FockSpace& space);

double k_pure(double abs_alpha_tilde);
double n_pure(double abs_alpha_tilde);

// Schrödinger-picture evolution over one period between pulses, D(α₀σ_z) e^{−iπa†a} D†(α₀σ_z).
Matrix one_period_unitary(const ModelParams& params, const FockSpace& space);

// (−iσ_x U₁)ⁿ by repeated multiplication.
Matrix composed_unitary(int n, const ModelParams& params, const FockSpace& space);

// Closed form of (−iσ_x U₁)ⁿ: (−i)ⁿ D†(2nα₀σ_z) for even n and
// (−i)ⁿ σ_x e^{−iπa†a} D†(2nα₀σ_z) for odd n.
Matrix stroboscopic_unitary(int n, const ModelParams& params, const FockSpace& space);

// e^{iH₀nτ₀} with H₀ = ω₀a†a − (ε_z/2)σ_z; maps Schrödinger states at nτ₀ to the
// interaction picture used by evolve().
Matrix interaction_frame(int n, const ModelParams& params, const FockSpace& space);

// Composite displacement D(β σ_z) = diag(D(β), D(−β)).
Matrix spin_displacement(Complex beta, const FockSpace& space);

// weight/(π·width) · exp(−|α − center|²/width); width = 0 is a δ at center.
struct GaussianP {
    double weight{1.0};
    Complex center{0.0, 0.0};
    double width{0.0};

    double value(Complex alpha) const;
};

// The oscillator operator ∫ P |α⟩⟨α| d²α = weight · D(center) ρ_th(width) D†(center).
Matrix p_to_matrix(const GaussianP& p, const FockSpace& space);

// 1/K = Σ_ij w_i w_j exp(−|c_i − c_j|²/(1 + v_i + v_j)) / (1 + v_i + v_j).
double k_from_p(std::span<const GaussianP> mixture);

// P-functions of the thermal start at t = nτ₀ without decoherence.
struct ThermalPBlocks {
    GaussianP up_up;
    GaussianP down_down;
    int n{0};
    double nbar{0.0};
    double alpha0{0.0};

    // Off-diagonal P_{↑↓}; complex-valued, integrates to e^{−8(1+2n̄)n²α₀²}/2.
    Complex up_down(Complex alpha) const;
    // Hermitian partner, conj(P_{↑↓}).
    Complex down_up(Complex alpha) const;
};

// Requires n̄_r > 0.
ThermalPBlocks thermal_p_blocks(int n, const ModelParams& params);

// Composite ρ(nτ₀) for the thermal start: diagonal blocks from the P-functions,
// coherences ½D(β)ρ_thD(β) with β = −(−1)ⁿ2nα₀.
Matrix thermal_state_at_period(int n, const ModelParams& params, const FockSpace& space);

double k_sigma_thermal(int n, const ModelParams& params);

// K_r(nτ₀) = 2(1+2n̄_r)/(1+exp[−16n²α₀²/(1+2n̄_r)]).
double k_r_thermal_stroboscopic(int n, const ModelParams& params);

// Any-time form without the mixedness factor, 2/(1+exp[−4|α̃|²/(2n̄_r+1)]).
double k_r_thermal_nodecoh_bare(double t, int n, const ModelParams& params);

// Bare form times the mixedness factor (1+2n̄_r); equals the stroboscopic
// value at t = nτ₀ and the exact purity of the reduced oscillator state.
double k_r_thermal_nodecoh(double t, int n, const ModelParams& params);

// K_r = 2m/(1+exp(−4|α̃|²/m)) with m = 2n̄_r(1−e^{−𝒞t})+1 (ground) or 2n̄_r+1 (thermal).
double k_r_decoh_from_amplitude(double t, double abs_alpha_tilde, const ModelParams& params,
                                OscillatorStart start);

// Same, using the reference closed-form amplitude alpha_tilde_decoh.
double k_r_decoh(double t, int n, const ModelParams& params, OscillatorStart start);

// Diagonal P-blocks under oscillator damping (𝒞 ≥ 0), centred at ±(−1)^{n+1}α̃ for ↑/↓.
GaussianP decohered_block(Complex alpha_tilde, double t, int n, const ModelParams& params,
                          OscillatorStart start, Spin spin);

// Drive shift w(t, nτ₀) = (−1)ⁿ e^{−𝒞nτ₀/2} w(t−nτ₀, 0) with
// w(t−nτ₀, 0) = ±(−1)ⁿ α₀ω₀ e^{iω₀t}(e^{−(iω₀+𝒞/2)(t−nτ₀)} − 1)/(ω₀ − i𝒞/2).
Complex fp_drive_shift(double t, int n, const ModelParams& params, Spin spin);

// Fokker–Planck Green's function
//   1/(πn̄_r(1−e^{−𝒞s})) · exp(−|α − α′e^{−𝒞s/2} + w|²/(n̄_r(1−e^{−𝒞s}))),  s = t − nτ₀.
// Requires s > 0, 𝒞 > 0 and n̄_r > 0.
double fp_green(Complex alpha, Complex alpha_src, double t, int n, const ModelParams& params,
                Spin spin);

// Closed-form convolution of a Gaussian P-function with fp_green.
GaussianP fp_propagate(const GaussianP& p, double t, int n, const ModelParams& params, Spin spin);

} // namespace tlsho::oracles
