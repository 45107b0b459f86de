// evolve.hpp — fixed-step RK4 integration of the master equation with instantaneous pulses

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlsho/hilbert.hpp"
#include "tlsho/model.hpp"

namespace tlsho {

struct IntegratorConfig {
    double dt{0.0};
    double sample_interval{0.0};
    double t_end{0.0};
    bool pulses_enabled{true};

    // dt = τ₀/steps_per_tau0, sample_interval = τ₀/samples_per_tau0, t_end = periods·τ₀.
    static IntegratorConfig per_period(const ModelParams& params, int steps_per_tau0,
                                       int samples_per_tau0, double periods,
                                       bool pulses_enabled = true);

    // dt > 0, τ₀/dt integral, sample_interval an integral multiple of dt, t_end ≥ 0.
    void validate(double tau0) const;

    long steps_per_period(double tau0) const;
    long steps_per_sample() const;
    long total_steps() const;
};

enum class Measure { negativity, k_r, k_sigma, purity, trace_error, min_eig, mean_a, sigma_z };

std::vector<Measure> all_measures();
std::string_view measure_name(Measure m);
// Accepts the CSV column names; "a" and "re_a"/"im_a" select mean_a.
std::optional<Measure> parse_measure(std::string_view name);

// Unrequested measures stay NaN, except trace_error, which is always filled because
// it gates the run. Positivity is always checked; the eigenvalue itself is only
// stored when min_eig is requested.
struct Sample {
    double t{0.0};
    double negativity;
    double k_r;
    double k_sigma;
    double purity;
    double trace_error;
    double min_eigenvalue;
    Complex mean_a;
    double sigma_z;
};

struct Trajectory {
    std::vector<Measure> measures;
    std::vector<Sample> samples;
};

struct EvolveResult {
    Trajectory trajectory;
    DensityMatrix final_state;
};

// Largest population on the two top Fock levels tolerated at a sample.
inline constexpr double kEdgePopulationTolerance = 1e-6;

// Pulses fire after the step that lands on nτ₀ (n ≥ 1) and before the sample at nτ₀.
// Throws InvariantViolation or TruncationError when a sample fails its checks.
EvolveResult evolve(const DensityMatrix& rho0, const Liouvillian& generator,
                    const IntegratorConfig& cfg, std::span<const Measure> measures);

enum class InitialKind { ground, thermal, coherent };

// Qubit in (|↑⟩+|↓⟩)/√2; oscillator in |0⟩, the thermal state at n̄_r, or |α⟩.
struct InitialState {
    InitialKind kind{InitialKind::ground};
    Complex alpha{0.0, 0.0};
};

DensityMatrix prepare_initial(const InitialState& initial, const ModelParams& params,
                              const FockSpace& space);

inline constexpr double kConvergenceTolerance = 1e-5;

struct ConvergenceReport {
    double negativity_deviation_dt{0.0};
    double negativity_deviation_nmax{0.0};
    double k_r_deviation{0.0};
    double max_negativity_deviation{0.0};
    bool pass{false};
    std::string error;
};

// Reruns with dt/2 and with n_max+16 and compares negativity on the shared sample grid.
ConvergenceReport convergence_check(const InitialState& initial, const ModelParams& params,
                                    const FockSpace& space, const IntegratorConfig& cfg);

} // namespace tlsho
