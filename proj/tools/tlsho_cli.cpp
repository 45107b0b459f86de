// tlsho_cli.cpp — command line front end: evolve, sweep, jumps, oracle-report, convergence
//
// Exit codes: 0 success, 1 a check failed, 2 bad input, 3 numerical invariant violated.

#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "tlsho/config.hpp"
#include "tlsho/errors.hpp"
#include "tlsho/runner.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNumerical = 3;

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw tlsho::ConfigError("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int cmd_evolve(const std::string& config, const std::string& out) {
    const tlsho::Scenario sc = tlsho::load_scenario(config);
    const tlsho::EvolveResult result = tlsho::run_scenario(sc);
    Output o(out.empty() ? sc.output : out);
    tlsho::write_trajectory_csv(o.stream(), result.trajectory, sc.params.tau0);
    return 0;
}

int cmd_sweep(const std::string& config, double start, double end, double step,
              const std::string& out) {
    const tlsho::Scenario sc = tlsho::load_scenario(config);
    const auto gammas = tlsho::gamma_grid(start, end, step);
    const tlsho::SweepTable table =
        tlsho::sweep_decoherence(sc, gammas, tlsho::worker_count_from_env());
    Output o(out);
    tlsho::write_sweep_csv(o.stream(), table);
    for (const auto& row : table.rows) {
        if (!row.error.empty()) {
            std::cerr << "gamma_c=" << tlsho::format_number(row.gamma_c) << ": " << row.error
                      << '\n';
        }
    }
    return 0;
}

int cmd_jumps(const std::string& in, double threshold) {
    std::ifstream file(in, std::ios::binary);
    if (!file) {
        throw tlsho::ConfigError("cannot open sweep CSV '" + in + "'");
    }
    const tlsho::SweepTable table = tlsho::read_sweep_csv(file);
    std::cout << "gamma_left,gamma_right,delta_t\n";
    for (const auto& j : tlsho::detect_jumps(table, threshold)) {
        std::cout << tlsho::format_number(j.gamma_left) << ','
                  << tlsho::format_number(j.gamma_right) << ','
                  << tlsho::format_number(j.delta_t) << '\n';
    }
    return 0;
}

int cmd_oracle_report(const std::string& config) {
    const tlsho::Scenario sc = tlsho::load_scenario(config);
    const tlsho::OracleReport report = tlsho::oracle_report(sc);
    tlsho::write_oracle_report(std::cout, report);
    return report.pass() ? 0 : kExitCheckFailed;
}

int cmd_convergence(const std::string& config) {
    const tlsho::Scenario sc = tlsho::load_scenario(config);
    const tlsho::ConvergenceReport r =
        tlsho::convergence_check(sc.initial, sc.params, sc.space, sc.integrator);
    using tlsho::format_number;
    std::cout << "check,value\n"
              << "negativity_deviation_dt," << format_number(r.negativity_deviation_dt) << '\n'
              << "negativity_deviation_nmax," << format_number(r.negativity_deviation_nmax) << '\n'
              << "k_r_deviation," << format_number(r.k_r_deviation) << '\n'
              << "max_negativity_deviation," << format_number(r.max_negativity_deviation) << '\n'
              << "tolerance," << format_number(tlsho::kConvergenceTolerance) << '\n'
              << "status," << (r.pass ? "PASS" : "FAIL") << '\n';
    if (!r.error.empty()) {
        std::cerr << r.error << '\n';
    }
    return r.pass ? 0 : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Driven qubit-oscillator entanglement under periodic pulses"};
    app.footer("Worker threads for `sweep`: TLSHO_WORKERS (default: hardware concurrency).\n\n" +
               tlsho::config_reference());
    app.require_subcommand(1);

    std::string config;
    std::string out;
    std::string in;
    double g_start = 0.0;
    double g_end = 0.0;
    double g_step = 0.0;
    double threshold = 1.0;

    auto* evolve = app.add_subcommand("evolve", "Integrate one scenario and write its CSV");
    evolve->add_option("--config", config, "Scenario file")->required();
    evolve->add_option("--out", out, "CSV output (default: scenario output, else stdout)");

    auto* sweep = app.add_subcommand("sweep", "Maximum negativity versus Gamma = C");
    sweep->add_option("--config", config, "Base scenario file")->required();
    sweep->add_option("--gamma-start", g_start, "First rate, units of 1/tau0")->required();
    sweep->add_option("--gamma-end", g_end, "Last rate, units of 1/tau0")->required();
    sweep->add_option("--gamma-step", g_step, "Rate step, units of 1/tau0")->required();
    sweep->add_option("--out", out, "CSV output (default: stdout)");

    auto* jumps = app.add_subcommand("jumps", "Find t_max discontinuities in a sweep CSV");
    jumps->add_option("--in", in, "Sweep CSV")->required();
    jumps->add_option("--threshold", threshold, "Minimum |delta t_max|, units of tau0")
        ->default_val(1.0);

    auto* report = app.add_subcommand("oracle-report", "Compare numerics with closed forms");
    report->add_option("--config", config, "Scenario file")->required();

    auto* conv = app.add_subcommand("convergence", "Rerun at dt/2 and n_max+16 and compare");
    conv->add_option("--config", config, "Scenario file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*evolve) {
            return cmd_evolve(config, out);
        }
        if (*sweep) {
            return cmd_sweep(config, g_start, g_end, g_step, out);
        }
        if (*jumps) {
            return cmd_jumps(in, threshold);
        }
        if (*report) {
            return cmd_oracle_report(config);
        }
        return cmd_convergence(config);
    } catch (const tlsho::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const tlsho::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const tlsho::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
