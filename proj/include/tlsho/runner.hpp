// runner.hpp — scenario execution, decoherence sweeps, jump detection and oracle reports
//
// CSV and report times are in units of τ₀, sweep rates in units of 1/τ₀.

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tlsho/config.hpp"
#include "tlsho/evolve.hpp"

namespace tlsho {

// %.12g: 12 significant digits, locale independent.
std::string format_number(double value);

EvolveResult run_scenario(const Scenario& scenario);

// Header `t` followed by the requested measure columns in canonical order
// (negativity,K_r,K_sigma,purity,trace_error,min_eig,re_a,im_a,sz).
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory, double tau0);

struct SweepRow {
    double gamma_c{0.0}; // Γ = 𝒞 in 1/τ₀
    double n_max{0.0};   // maximum negativity on the sample grid
    double t_max{0.0};   // earliest grid time attaining n_max, in τ₀
    bool converged{false};
    std::string error;
};

struct SweepTable {
    std::vector<SweepRow> rows;
};

// start, start+step, … up to end inclusive (end reached within step·1e-9).
std::vector<double> gamma_grid(double start, double end, double step);

// A row is unconverged when its run fails or when Γ > 0 and 𝒩(t_end) > 0.99·𝒩_max.
inline constexpr double kSweepGuardFraction = 0.99;

// Rows run on up to `workers` threads and are returned in input order.
// Throws InvalidParameter if gamma_values is unsorted or negative.
SweepTable sweep_decoherence(const Scenario& base, std::span<const double> gamma_values,
                             int workers);

void write_sweep_csv(std::ostream& out, const SweepTable& table);
SweepTable read_sweep_csv(std::istream& in);

struct TmaxJump {
    double gamma_left;
    double gamma_right;
    double delta_t;
};

// Adjacent converged rows with |Δt_max| > threshold (τ₀ units).
std::vector<TmaxJump> detect_jumps(const SweepTable& table, double threshold = 1.0);

// Worker count from TLSHO_WORKERS, else the hardware concurrency.
int worker_count_from_env();

enum class CheckStatus { pass, fail, info };

struct OracleRow {
    std::string name;
    double max_deviation{0.0};
    double tolerance{0.0};
    CheckStatus status{CheckStatus::pass};
    std::string note;
};

struct OracleReport {
    std::vector<OracleRow> rows;
    bool pass() const;
};

// Oracle-vs-numerics comparisons that apply to the scenario's parameters.
// Rows whose closed form does not cover Γ > 0 are reported with status info.
OracleReport oracle_report(const Scenario& scenario);

void write_oracle_report(std::ostream& out, const OracleReport& report);

} // namespace tlsho
