#include "tlsho/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "tlsho/errors.hpp"
#include "tlsho/measures.hpp"
#include "tlsho/oracles.hpp"

namespace tlsho {

namespace {

namespace orc = oracles;

double operator_norm(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.adjoint() * m, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    return out;
}

EvolveResult run_with(const Scenario& sc, InitialKind kind, std::vector<Measure> measures) {
    InitialState initial;
    initial.kind = kind;
    IntegratorConfig cfg = sc.integrator;
    cfg.pulses_enabled = true;
    const Liouvillian generator(sc.params, sc.space);
    return evolve(prepare_initial(initial, sc.params, sc.space), generator, cfg, measures);
}

class ReportBuilder {
public:
    void add(std::string name, double deviation, double tolerance, bool asserted,
             std::string note = {}) {
        OracleRow row{std::move(name), deviation, tolerance, CheckStatus::info, std::move(note)};
        if (asserted) {
            row.status = (std::isfinite(deviation) && deviation <= tolerance) ? CheckStatus::pass
                                                                               : CheckStatus::fail;
        }
        report_.rows.push_back(std::move(row));
    }

    void failed(const std::vector<std::string>& names, double tolerance, const std::string& why) {
        for (const auto& name : names) {
            report_.rows.push_back(OracleRow{name, std::numeric_limits<double>::quiet_NaN(),
                                             tolerance, CheckStatus::fail, why});
        }
    }

    OracleReport take() { return std::move(report_); }

private:
    OracleReport report_;
};

void ground_rows(const Scenario& sc, bool asserted, ReportBuilder& rb) {
    const std::vector<std::string> names{"ground_negativity_vs_cat", "ground_K_r_vs_cat",
                                         "ground_cat_fidelity"};
    try {
        const auto [traj, final_state] =
            run_with(sc, InitialKind::ground, {Measure::negativity, Measure::k_r});
        double dn = 0.0;
        double dk = 0.0;
        for (const Sample& s : traj.samples) {
            const int n = orc::segment_index(s.t, sc.params);
            const double amp = std::abs(orc::alpha_tilde_nodecoh(s.t, n, sc.params).value);
            dn = std::max(dn, std::abs(s.negativity - orc::n_pure(amp)));
            dk = std::max(dk, std::abs(s.k_r - orc::k_pure(amp)));
        }
        rb.add(names[0], dn, 1e-5, asserted);
        rb.add(names[1], dk, 1e-5, asserted);

        const double t_end = traj.samples.back().t;
        const PureState cat = orc::cat_state(t_end, orc::segment_index(t_end, sc.params),
                                             sc.params, sc.space);
        const double df = 1.0 - fidelity(cat, final_state);
        rb.add(names[2], df, 1e-6, asserted, "1 - fidelity at t_end");
    } catch (const Error& e) {
        rb.failed(names, 1e-5, e.what());
    }
}

void thermal_rows(const Scenario& sc, bool asserted, ReportBuilder& rb) {
    const std::vector<std::string> names{"thermal_K_r_any_time", "thermal_K_r_at_pulses",
                                         "thermal_K_sigma_at_pulses", "thermal_K_r_bare_form"};
    try {
        const Trajectory traj =
            run_with(sc, InitialKind::thermal, {Measure::k_r, Measure::k_sigma}).trajectory;
        double dk = 0.0;
        double dk_pulse = 0.0;
        double ds_pulse = 0.0;
        double d_bare = 0.0;
        const long per_period = std::lround(sc.params.tau0 / sc.integrator.sample_interval);
        for (std::size_t i = 0; i < traj.samples.size(); ++i) {
            const Sample& s = traj.samples[i];
            const int n = orc::segment_index(s.t, sc.params);
            dk = std::max(dk, std::abs(s.k_r - orc::k_r_thermal_nodecoh(s.t, n, sc.params)));
            d_bare = std::max(
                d_bare, std::abs(s.k_r - orc::k_r_thermal_nodecoh_bare(s.t, n, sc.params)));
            if (static_cast<long>(i) % per_period == 0) {
                dk_pulse = std::max(dk_pulse,
                                    std::abs(s.k_r - orc::k_r_thermal_stroboscopic(n, sc.params)));
                ds_pulse =
                    std::max(ds_pulse, std::abs(s.k_sigma - orc::k_sigma_thermal(n, sc.params)));
            }
        }
        rb.add(names[0], dk, 1e-4, asserted, "mixedness-corrected any-time form");
        rb.add(names[1], dk_pulse, 1e-4, asserted);
        rb.add(names[2], ds_pulse, 1e-4, asserted);
        rb.add(names[3], d_bare, 1e-4, false, "form without the (1+2 nbar_r) factor");
    } catch (const Error& e) {
        rb.failed(names, 1e-4, e.what());
        return;
    }

    if (!(sc.params.nbar_r > 0.0)) {
        return;
    }
    const int n = std::min(3, static_cast<int>(std::floor(sc.integrator.t_end / sc.params.tau0 + 1e-9)));
    if (n < 1) {
        return;
    }
    try {
        IntegratorConfig cfg = sc.integrator;
        cfg.pulses_enabled = true;
        cfg.t_end = n * sc.params.tau0;
        const Liouvillian generator(sc.params, sc.space);
        InitialState initial;
        initial.kind = InitialKind::thermal;
        const DensityMatrix rho =
            evolve(prepare_initial(initial, sc.params, sc.space), generator, cfg, {}).final_state;
        const Matrix expected = orc::thermal_state_at_period(n, sc.params, sc.space);
        rb.add("thermal_state_from_P_blocks", (rho.matrix() - expected).cwiseAbs().maxCoeff(),
               1e-5, asserted, "entrywise at t = " + std::to_string(n) + " tau0");
    } catch (const Error& e) {
        rb.failed({"thermal_state_from_P_blocks"}, 1e-5, e.what());
    }
}

void decoherence_rows(const Scenario& sc, bool asserted, ReportBuilder& rb) {
    const std::vector<std::string> names{"decoh_K_r_ground_reference_amplitude",
                                         "decoh_K_r_thermal_reference_amplitude",
                                         "decoh_K_r_ground_driven_amplitude",
                                         "decoh_K_r_thermal_driven_amplitude"};
    try {
        const Trajectory ground = run_with(sc, InitialKind::ground, {Measure::k_r}).trajectory;
        const Trajectory thermal = run_with(sc, InitialKind::thermal, {Measure::k_r}).trajectory;
        double dev[4] = {0.0, 0.0, 0.0, 0.0};
        for (std::size_t i = 0; i < ground.samples.size(); ++i) {
            const double t = ground.samples[i].t;
            const int n = orc::segment_index(t, sc.params);
            const double reference = std::abs(orc::alpha_tilde_decoh(t, n, sc.params).value);
            const double driven = std::abs(orc::alpha_tilde_driven(t, n, sc.params).value);
            const double kg = ground.samples[i].k_r;
            const double kt = thermal.samples[i].k_r;
            using orc::OscillatorStart;
            dev[0] = std::max(dev[0], std::abs(kg - orc::k_r_decoh_from_amplitude(
                                                        t, reference, sc.params, OscillatorStart::ground)));
            dev[1] = std::max(dev[1], std::abs(kt - orc::k_r_decoh_from_amplitude(
                                                        t, reference, sc.params, OscillatorStart::thermal)));
            dev[2] = std::max(dev[2], std::abs(kg - orc::k_r_decoh_from_amplitude(
                                                        t, driven, sc.params, OscillatorStart::ground)));
            dev[3] = std::max(dev[3], std::abs(kt - orc::k_r_decoh_from_amplitude(
                                                        t, driven, sc.params, OscillatorStart::thermal)));
        }
        for (int k = 0; k < 4; ++k) {
            rb.add(names[k], dev[k], 1e-3, asserted);
        }
    } catch (const Error& e) {
        rb.failed(names, 1e-3, e.what());
    }
}

void stroboscopic_rows(const Scenario& sc, ReportBuilder& rb) {
    const std::vector<std::string> names{"stroboscopic_unitary_vs_product",
                                         "stroboscopic_cat_fidelity"};
    try {
        const Index m = sc.space.n_max();
        Vector psi0 = Vector::Zero(sc.space.dim());
        psi0(0) = 1.0 / std::sqrt(2.0);
        psi0(m) = 1.0 / std::sqrt(2.0);
        double du = 0.0;
        double df = 0.0;
        for (int n = 1; n <= 10; ++n) {
            const Matrix u = orc::stroboscopic_unitary(n, sc.params, sc.space);
            du = std::max(du, operator_norm(u - orc::composed_unitary(n, sc.params, sc.space)));
            Vector psi = orc::interaction_frame(n, sc.params, sc.space) * u * psi0;
            psi /= psi.norm();
            const PureState cat = orc::cat_state(n * sc.params.tau0, n, sc.params, sc.space);
            df = std::max(df, 1.0 - fidelity(cat, PureState(psi, Basis::composite)));
        }
        rb.add(names[0], du, 1e-7, true, "operator norm, n = 1..10");
        rb.add(names[1], df, 1e-7, true, "1 - fidelity, n = 1..10");
    } catch (const Error& e) {
        rb.failed(names, 1e-7, e.what());
    }
}

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "PASS";
    case CheckStatus::fail:
        return "FAIL";
    case CheckStatus::info:
        return "INFO";
    }
    return "?";
}

} // namespace

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

EvolveResult run_scenario(const Scenario& scenario) {
    const Liouvillian generator(scenario.params, scenario.space);
    return evolve(prepare_initial(scenario.initial, scenario.params, scenario.space), generator,
                  scenario.integrator, scenario.measures);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory, double tau0) {
    out << "t";
    for (const Measure m : trajectory.measures) {
        if (m == Measure::mean_a) {
            out << ",re_a,im_a";
        } else {
            out << ',' << measure_name(m);
        }
    }
    out << '\n';
    for (const Sample& s : trajectory.samples) {
        out << format_number(s.t / tau0);
        for (const Measure m : trajectory.measures) {
            switch (m) {
            case Measure::negativity:
                out << ',' << format_number(s.negativity);
                break;
            case Measure::k_r:
                out << ',' << format_number(s.k_r);
                break;
            case Measure::k_sigma:
                out << ',' << format_number(s.k_sigma);
                break;
            case Measure::purity:
                out << ',' << format_number(s.purity);
                break;
            case Measure::trace_error:
                out << ',' << format_number(s.trace_error);
                break;
            case Measure::min_eig:
                out << ',' << format_number(s.min_eigenvalue);
                break;
            case Measure::mean_a:
                out << ',' << format_number(s.mean_a.real()) << ','
                    << format_number(s.mean_a.imag());
                break;
            case Measure::sigma_z:
                out << ',' << format_number(s.sigma_z);
                break;
            }
        }
        out << '\n';
    }
}

std::vector<double> gamma_grid(double start, double end, double step) {
    if (!(step > 0.0) || !(start >= 0.0) || !(end >= start)) {
        throw InvalidParameter("gamma_grid: need 0 <= start <= end and step > 0");
    }
    std::vector<double> out;
    const long count = static_cast<long>(std::floor((end - start) / step + 1e-9));
    for (long k = 0; k <= count; ++k) {
        // Round to 12 digits so 0.029 + 3*0.001 prints as 0.032.
        out.push_back(std::stod(format_number(start + static_cast<double>(k) * step)));
    }
    return out;
}

SweepTable sweep_decoherence(const Scenario& base, std::span<const double> gamma_values,
                             int workers) {
    for (std::size_t i = 0; i < gamma_values.size(); ++i) {
        if (!(gamma_values[i] >= 0.0) || (i > 0 && !(gamma_values[i] > gamma_values[i - 1]))) {
            throw InvalidParameter("sweep: gamma values must be >= 0 and strictly increasing");
        }
    }
    SweepTable table;
    table.rows.resize(gamma_values.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i = next++; i < gamma_values.size(); i = next++) {
            SweepRow& row = table.rows[i];
            row.gamma_c = gamma_values[i];
            try {
                Scenario sc = with_decoherence(base, gamma_values[i]);
                sc.measures = {Measure::negativity};
                const Trajectory traj = run_scenario(sc).trajectory;
                const Sample* best = &traj.samples.front();
                for (const Sample& s : traj.samples) {
                    if (s.negativity > best->negativity) {
                        best = &s;
                    }
                }
                row.n_max = best->negativity;
                row.t_max = best->t / sc.params.tau0;
                const double last = traj.samples.back().negativity;
                row.converged = !(gamma_values[i] > 0.0 && last > kSweepGuardFraction * row.n_max);
            } catch (const Error& e) {
                row.converged = false;
                row.error = e.what();
            }
        }
    };

    const int count = std::max(1, std::min<int>(workers, static_cast<int>(gamma_values.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < count; ++w) {
        pool.emplace_back(work);
    }
    work();
    for (auto& th : pool) {
        th.join();
    }
    return table;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
    out << "gamma_c,N_max,t_max,converged,error\n";
    for (const SweepRow& r : table.rows) {
        std::string err = r.error;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        out << format_number(r.gamma_c) << ',' << format_number(r.n_max) << ','
            << format_number(r.t_max) << ',' << (r.converged ? 1 : 0) << ',' << err << '\n';
    }
}

SweepTable read_sweep_csv(std::istream& in) {
    SweepTable table;
    std::string line;
    if (!std::getline(in, line) || line.rfind("gamma_c,N_max,t_max,converged", 0) != 0) {
        throw ConfigError("sweep CSV: missing 'gamma_c,N_max,t_max,converged' header");
    }
    int number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) {
            continue;
        }
        const auto cells = split_csv(line);
        if (cells.size() < 4) {
            throw ConfigError("sweep CSV line " + std::to_string(number) + ": expected 4 columns");
        }
        SweepRow row;
        try {
            row.gamma_c = std::stod(cells[0]);
            row.n_max = std::stod(cells[1]);
            row.t_max = std::stod(cells[2]);
        } catch (const std::exception&) {
            throw ConfigError("sweep CSV line " + std::to_string(number) + ": bad number");
        }
        row.converged = cells[3] == "1" || cells[3] == "true";
        for (std::size_t k = 4; k < cells.size(); ++k) {
            row.error += (k > 4 ? "," : "") + cells[k];
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<TmaxJump> detect_jumps(const SweepTable& table, double threshold) {
    std::vector<TmaxJump> jumps;
    const SweepRow* prev = nullptr;
    for (const SweepRow& row : table.rows) {
        if (!row.converged) {
            continue;
        }
        if (prev != nullptr) {
            const double delta = row.t_max - prev->t_max;
            if (std::abs(delta) > threshold) {
                jumps.push_back({prev->gamma_c, row.gamma_c, delta});
            }
        }
        prev = &row;
    }
    return jumps;
}

int worker_count_from_env() {
    if (const char* env = std::getenv("TLSHO_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            return n;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

bool OracleReport::pass() const {
    return std::none_of(rows.begin(), rows.end(),
                        [](const OracleRow& r) { return r.status == CheckStatus::fail; });
}

OracleReport oracle_report(const Scenario& scenario) {
    ReportBuilder rb;
    const ModelParams& p = scenario.params;
    // The closed forms cover Γ = 0 only.
    const bool asserted = p.gamma == 0.0;
    if (p.c == 0.0) {
        ground_rows(scenario, asserted, rb);
        thermal_rows(scenario, asserted, rb);
    } else {
        decoherence_rows(scenario, asserted, rb);
    }
    stroboscopic_rows(scenario, rb);
    return rb.take();
}

void write_oracle_report(std::ostream& out, const OracleReport& report) {
    out << "check,max_deviation,tolerance,status,note\n";
    for (const OracleRow& r : report.rows) {
        std::string note = r.note;
        std::replace(note.begin(), note.end(), ',', ';');
        out << r.name << ',' << format_number(r.max_deviation) << ','
            << format_number(r.tolerance) << ',' << status_name(r.status) << ',' << note << '\n';
    }
    out << "overall," << (report.pass() ? "PASS" : "FAIL") << '\n';
}

} // namespace tlsho
