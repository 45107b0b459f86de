// config.hpp — key = value scenario files
//
// Three sections, every key optional, unknown keys and sections rejected:
//
//   [scenario]   name, initial_state, alpha_re, alpha_im, measures, output
//   [params]     omega0, epsilon_z, lambda0, gamma, c, temperature_ratio
//   [integrator] n_max, steps_per_tau0, samples_per_tau0, t_end, pulses
//
// Rates (gamma, c) are in units of 1/τ₀ and t_end in units of τ₀.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tlsho/evolve.hpp"
#include "tlsho/model.hpp"

namespace tlsho {

struct Scenario {
    std::string name{"scenario"};
    InitialState initial;
    ModelParams params;
    FockSpace space{64};
    IntegratorConfig integrator;
    std::vector<Measure> measures;
    std::string output;
};

// Throws ConfigError with the offending line on any syntax error, unknown key or
// bad value; TruncationError if the initial state does not fit in n_max.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::string& path);

// Copy of `base` with Γ = 𝒞 = gamma_per_tau0 / τ₀.
Scenario with_decoherence(const Scenario& base, double gamma_per_tau0);

// Key reference printed by --help.
std::string config_reference();

} // namespace tlsho
