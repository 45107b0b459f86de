// acceptance.cpp — acceptance criteria 1–8, one PASS/FAIL line per criterion
//
// Supplementary measurements are printed as indented "info" lines under the
// criterion they belong to. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "tlsho/config.hpp"
#include "tlsho/errors.hpp"
#include "tlsho/evolve.hpp"
#include "tlsho/measures.hpp"
#include "tlsho/oracles.hpp"
#include "tlsho/runner.hpp"

using namespace tlsho;
namespace orc = tlsho::oracles;

namespace {

// Tolerances and limits, fixed here rather than taken from the library so that a
// change in a library default cannot loosen the gate.
constexpr double kPureTol = 1e-5;
constexpr double kPureRuntimeLimit = 60.0; // s
constexpr double kSaturation = 0.499;
constexpr double kThermalTol = 1e-4;
constexpr double kThermalLimit = 5.633;
constexpr double kThermalLimitTol = 0.01;
constexpr double kUnitaryTol = 1e-7;
constexpr double kFidelityTol = 1e-7;
constexpr double kPropagationTol = 1e-10;
constexpr double kDecohTol = 1e-3;
constexpr double kLateTimeRatio = 0.01; // |ΔK_r(t_end)| ≤ ratio · |ΔK_r(0)|
constexpr double kSweepRuntimeLimit = 1800.0; // s
constexpr double kJumpThreshold = 1.0;        // τ₀
constexpr double kUnitaryInvarianceTol = 1e-9;
constexpr double kExactTol = 1e-12;
constexpr double kIdentityTol = 1e-9;
constexpr double kConvergenceTol = 1e-5;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRatio = 0.74239;
constexpr double kLambda = 0.2;
constexpr int kNmax = 64;
constexpr int kSteps = 200;   // per τ₀
constexpr int kSamples = 20;  // per τ₀; 200 intervals over 10τ₀
constexpr int kThermalNmax = 80;
constexpr double kThermalLatePeriods = 20.0;
constexpr double kDecohC = 0.1;         // 1/τ₀
constexpr double kDecohWindow = 20.0;   // τ₀
constexpr double kDecohLate = 60.0;     // τ₀
constexpr double kSweepTend = 20.0;     // τ₀
constexpr int kSweepSamples = 100;      // per τ₀

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

struct Outcome {
    bool pass{false};
    std::string summary;
    std::vector<std::string> info;
};

ModelParams make_params(double gamma_per_tau0, double c_per_tau0, double ratio) {
    const double tau0 = 3.141592653589793;
    return derive_params(1.0, 2.0, kLambda, gamma_per_tau0 / tau0, c_per_tau0 / tau0, ratio);
}

struct RunSpec {
    ModelParams params;
    InitialKind kind{InitialKind::ground};
    int n_max{kNmax};
    int steps{kSteps};
    int samples{kSamples};
    double periods{10.0};
};

Trajectory run(const RunSpec& spec, std::span<const Measure> measures) {
    const FockSpace space(spec.n_max);
    InitialState init;
    init.kind = spec.kind;
    const auto cfg = IntegratorConfig::per_period(spec.params, spec.steps, spec.samples, spec.periods);
    return evolve(prepare_initial(init, spec.params, space), Liouvillian(spec.params, space), cfg,
                  measures)
        .trajectory;
}

const std::array<Measure, 3> kCoreMeasures{Measure::negativity, Measure::k_r, Measure::k_sigma};

// Shared state between the criteria and the convergence rerun.
struct Baselines {
    RunSpec pure;
    RunSpec thermal;
    RunSpec decoh_ground;
    RunSpec decoh_thermal;
    Trajectory pure_traj;
    Trajectory thermal_traj;
    Trajectory decoh_ground_traj;
    Trajectory decoh_thermal_traj;
};

double operator_norm(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.adjoint() * m, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

Outcome criterion1(Baselines& b) {
    b.pure = RunSpec{make_params(0, 0, kInf)};
    const auto start = Clock::now();
    b.pure_traj = run(b.pure, kCoreMeasures);
    const double elapsed = seconds_since(start);
    double dn = 0.0;
    double dk = 0.0;
    for (const Sample& s : b.pure_traj.samples) {
        const int n = orc::segment_index(s.t, b.pure.params);
        const double amp = std::abs(orc::alpha_tilde_nodecoh(s.t, n, b.pure.params).value);
        dn = std::max(dn, std::abs(s.negativity - orc::n_pure(amp)));
        dk = std::max(dk, std::abs(s.k_r - orc::k_pure(amp)));
    }
    Outcome o;
    o.pass = dn < kPureTol && dk < kPureTol && elapsed < kPureRuntimeLimit;
    o.summary = "pure dynamics vs cat oracle: max|dN|=" + fmt(dn) + " max|dK_r|=" + fmt(dk) +
                " (tol " + fmt(kPureTol) + ") over " + std::to_string(b.pure_traj.samples.size()) +
                " samples, runtime " + fmt(elapsed) + " s (limit " + fmt(kPureRuntimeLimit) + " s)";
    return o;
}

Outcome criterion2(const Baselines& b) {
    const Sample& last = b.pure_traj.samples.back();
    Outcome o;
    o.pass = last.negativity >= kSaturation;
    o.summary = "saturation: N(" + fmt(last.t / b.pure.params.tau0) + " tau0)=" +
                format_number(last.negativity) + " (need >= " + fmt(kSaturation) + ")";
    return o;
}

Outcome criterion3(Baselines& b) {
    // The limit needs |α̃| ≈ 4, i.e. 20τ₀; the thermal tail then needs more Fock levels.
    b.thermal = RunSpec{make_params(0, 0, kRatio), InitialKind::thermal, kThermalNmax};
    b.thermal.periods = kThermalLatePeriods;
    b.thermal_traj = run(b.thermal, kCoreMeasures);
    const ModelParams& p = b.thermal.params;
    double dk = 0.0;
    double dk_bare = 0.0;
    double dk_pulse = 0.0;
    double ds_pulse = 0.0;
    for (std::size_t i = 0; i < b.thermal_traj.samples.size(); ++i) {
        const Sample& s = b.thermal_traj.samples[i];
        if (s.t > 10.0 * p.tau0 * (1.0 + 1e-12)) {
            break;
        }
        const int n = orc::segment_index(s.t, p);
        dk = std::max(dk, std::abs(s.k_r - orc::k_r_thermal_nodecoh(s.t, n, p)));
        dk_bare = std::max(dk_bare, std::abs(s.k_r - orc::k_r_thermal_nodecoh_bare(s.t, n, p)));
        if (i % kSamples == 0) {
            dk_pulse = std::max(dk_pulse, std::abs(s.k_r - orc::k_r_thermal_stroboscopic(n, p)));
            ds_pulse = std::max(ds_pulse, std::abs(s.k_sigma - orc::k_sigma_thermal(n, p)));
        }
    }
    const double limit = 2.0 * (1.0 + 2.0 * p.nbar_r);
    const double late = b.thermal_traj.samples.back().k_r;
    Outcome o;
    o.pass = dk < kThermalTol && dk_pulse < kThermalTol &&
             std::abs(limit - kThermalLimit) <= kThermalLimitTol &&
             std::abs(late - kThermalLimit) <= kThermalLimitTol;
    o.summary = "thermal K_r: max|dK_r| any time=" + fmt(dk) + ", at pulses=" + fmt(dk_pulse) +
                " (tol " + fmt(kThermalTol) + "); 2(1+2nbar_r)=" + format_number(limit) +
                ", K_r(20 tau0)=" + format_number(late) + " (want " + fmt(kThermalLimit) + " +- " +
                fmt(kThermalLimitTol) + ")";
    o.info.push_back("any-time form includes the (1+2nbar_r) mixedness factor; the form without it deviates by " +
                     fmt(dk_bare));
    o.info.push_back("K_sigma at pulses: max deviation " + fmt(ds_pulse) + "; nbar_r=" +
                     format_number(p.nbar_r));
    return o;
}

struct StroboscopicResult {
    double unitary{0.0};
    double infidelity{0.0};
};

StroboscopicResult stroboscopic(int n_max) {
    const ModelParams p = make_params(0, 0, kInf);
    const FockSpace space(n_max);
    Vector psi0 = Vector::Zero(space.dim());
    psi0(0) = psi0(space.n_max()) = 1.0 / std::sqrt(2.0);
    StroboscopicResult r;
    for (int n = 1; n <= 10; ++n) {
        const Matrix u = orc::stroboscopic_unitary(n, p, space);
        r.unitary = std::max(r.unitary, operator_norm(u - orc::composed_unitary(n, p, space)));
        Vector psi = orc::interaction_frame(n, p, space) * u * psi0;
        psi /= psi.norm();
        const PureState cat = orc::cat_state(n * p.tau0, n, p, space);
        r.infidelity = std::max(r.infidelity, 1.0 - fidelity(cat, PureState(psi, Basis::composite)));
    }
    return r;
}

Outcome criterion4() {
    const StroboscopicResult r = stroboscopic(kNmax);
    Outcome o;
    o.pass = r.unitary < kUnitaryTol && r.infidelity <= kFidelityTol;
    o.summary = "stroboscopic unitary: max ||U_n - (-i sx U1)^n||=" + fmt(r.unitary) + " (tol " +
                fmt(kUnitaryTol) + "), max 1-F=" + fmt(r.infidelity) + " (tol " +
                fmt(kFidelityTol) + "), n=1..10";
    return o;
}

double propagation_deviation(const ModelParams& p) {
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k) {
        const double t = k * p.tau0 / 20.0;
        const Complex amp = orc::alpha_tilde_decoh(t, 0, p).value;
        for (const auto spin : {orc::Spin::up, orc::Spin::down}) {
            for (const auto start : {orc::OscillatorStart::thermal, orc::OscillatorStart::ground}) {
                const double width0 = start == orc::OscillatorStart::thermal ? p.nbar_r : 0.0;
                const orc::GaussianP moved = orc::fp_propagate({0.5, 0.0, width0}, t, 0, p, spin);
                const orc::GaussianP expected = orc::decohered_block(amp, t, 0, p, start, spin);
                for (double x = -3.0; x <= 3.0; x += 0.25) {
                    for (double y = -3.0; y <= 3.0; y += 0.25) {
                        worst = std::max(worst, std::abs(moved.value({x, y}) - expected.value({x, y})));
                    }
                }
                // Green's function itself, integrated against the initial P by the
                // closed-form convolution, must agree with the same Gaussian.
                worst = std::max(worst, std::abs(moved.width - expected.width));
                worst = std::max(worst, std::abs(moved.center - expected.center));
            }
        }
    }
    return worst;
}

Outcome criterion5(Baselines& b) {
    const ModelParams p = make_params(0, kDecohC, kRatio);
    const double propagation = propagation_deviation(p);

    b.decoh_ground = RunSpec{p, InitialKind::ground};
    b.decoh_ground.periods = kDecohLate;
    b.decoh_thermal = RunSpec{p, InitialKind::thermal};
    b.decoh_thermal.periods = kDecohLate;
    b.decoh_ground_traj = run(b.decoh_ground, kCoreMeasures);
    b.decoh_thermal_traj = run(b.decoh_thermal, kCoreMeasures);

    using orc::OscillatorStart;
    double reference[2] = {0.0, 0.0};
    double driven[2] = {0.0, 0.0};
    for (std::size_t i = 0; i < b.decoh_ground_traj.samples.size(); ++i) {
        const double t = b.decoh_ground_traj.samples[i].t;
        if (t > kDecohWindow * p.tau0 * (1.0 + 1e-12)) {
            break;
        }
        const int n = orc::segment_index(t, p);
        const double pub = std::abs(orc::alpha_tilde_decoh(t, n, p).value);
        const double drv = std::abs(orc::alpha_tilde_driven(t, n, p).value);
        const double kg = b.decoh_ground_traj.samples[i].k_r;
        const double kt = b.decoh_thermal_traj.samples[i].k_r;
        reference[0] = std::max(reference[0], std::abs(kg - orc::k_r_decoh_from_amplitude(t, pub, p, OscillatorStart::ground)));
        reference[1] = std::max(reference[1], std::abs(kt - orc::k_r_decoh_from_amplitude(t, pub, p, OscillatorStart::thermal)));
        driven[0] = std::max(driven[0], std::abs(kg - orc::k_r_decoh_from_amplitude(t, drv, p, OscillatorStart::ground)));
        driven[1] = std::max(driven[1], std::abs(kt - orc::k_r_decoh_from_amplitude(t, drv, p, OscillatorStart::thermal)));
    }
    const double gap0 = std::abs(b.decoh_ground_traj.samples.front().k_r - b.decoh_thermal_traj.samples.front().k_r);
    const double gap_end = std::abs(b.decoh_ground_traj.samples.back().k_r - b.decoh_thermal_traj.samples.back().k_r);

    const bool prop_ok = propagation < kPropagationTol;
    const bool k_ok = reference[0] < kDecohTol && reference[1] < kDecohTol;
    const bool late_ok = gap_end <= kLateTimeRatio * gap0;
    Outcome o;
    o.pass = prop_ok && k_ok && late_ok;
    o.summary = "decoherence (C=0.1/tau0): P propagation dev=" + fmt(propagation) + " (tol " +
                fmt(kPropagationTol) + "); K_r vs reference amplitude over [0,20 tau0]: ground " +
                fmt(reference[0]) + ", thermal " + fmt(reference[1]) + " (tol " + fmt(kDecohTol) +
                "); |K_grd-K_th| " + fmt(gap0) + " -> " + fmt(gap_end) + " at " +
                fmt(kDecohLate) + " tau0 (need <= " + fmt(kLateTimeRatio) + "x)";
    o.info.push_back("K_r vs the damped driven amplitude: ground " + fmt(driven[0]) + ", thermal " +
                     fmt(driven[1]) + " (same tol " + fmt(kDecohTol) + ")");
    o.info.push_back("the reference amplitude matches the driven one only on the first period and "
                     "jumps at every pulse");
    return o;
}

Outcome criterion6() {
    Scenario base = parse_scenario_text("");
    base.params = make_params(0, 0, kRatio);
    base.space = FockSpace(kNmax);
    base.integrator = IntegratorConfig::per_period(base.params, kSteps, kSweepSamples, kSweepTend);
    base.initial = InitialState{};
    const int workers = worker_count_from_env();

    const auto start = Clock::now();
    const auto coarse_grid = gamma_grid(0.01, 0.1, 0.01);
    const auto fine_grid = gamma_grid(0.029, 0.034, 0.001);
    const SweepTable coarse = sweep_decoherence(base, coarse_grid, workers);
    const SweepTable fine = sweep_decoherence(base, fine_grid, workers);
    const double elapsed = seconds_since(start);

    bool all_converged = true;
    bool decreasing = true;
    bool below_half = true;
    std::string nmax_list;
    for (std::size_t i = 0; i < coarse.rows.size(); ++i) {
        const SweepRow& r = coarse.rows[i];
        all_converged = all_converged && r.converged;
        below_half = below_half && r.n_max < 0.5;
        if (i > 0 && !(r.n_max < coarse.rows[i - 1].n_max)) {
            decreasing = false;
        }
        nmax_list += (i ? "," : "") + fmt(r.n_max) + "@" + fmt(r.t_max);
    }
    for (const SweepRow& r : fine.rows) {
        all_converged = all_converged && r.converged;
    }
    const auto jumps = detect_jumps(fine, kJumpThreshold);
    double largest = 0.0;
    for (std::size_t i = 1; i < fine.rows.size(); ++i) {
        largest = std::max(largest, std::abs(fine.rows[i].t_max - fine.rows[i - 1].t_max));
    }
    const auto coarse_jumps = detect_jumps(coarse, 0.5);

    Outcome o;
    o.pass = all_converged && decreasing && below_half && !jumps.empty() &&
             elapsed < kSweepRuntimeLimit;
    o.summary = std::string("sweep: N_max strictly decreasing=") + (decreasing ? "yes" : "no") +
                ", all < 0.5=" + (below_half ? "yes" : "no") + ", converged=" +
                (all_converged ? "yes" : "no") + "; jumps > tau0 in [0.029,0.034]: " +
                std::to_string(jumps.size()) + " (largest |dt_max| " + fmt(largest) +
                " tau0); runtime " + fmt(elapsed) + " s (limit " + fmt(kSweepRuntimeLimit) + " s)";
    o.info.push_back("N_max@t_max per Gamma=C in 0.01..0.1: " + nmax_list);
    std::string cj;
    for (const auto& j : coarse_jumps) {
        cj += " [" + fmt(j.gamma_left) + "," + fmt(j.gamma_right) + "] dt=" + fmt(j.delta_t);
    }
    o.info.push_back("t_max steps above 0.5 tau0 on the coarse grid:" + (cj.empty() ? std::string(" none") : cj));
    o.info.push_back("sweep horizon " + fmt(kSweepTend) + " tau0, n_max " + std::to_string(kNmax) +
                     ", bath hbar*omega0/kT=" + fmt(kRatio) + ", workers " + std::to_string(workers));
    return o;
}

Outcome criterion7() {
    std::mt19937 rng(20240611);
    std::normal_distribution<double> normal;
    auto random_matrix = [&](Index r, Index c) {
        Matrix m(r, c);
        for (Index j = 0; j < c; ++j) {
            for (Index i = 0; i < r; ++i) {
                m(i, j) = Complex(normal(rng), normal(rng));
            }
        }
        return m;
    };
    auto random_unitary = [&](Index d) {
        Eigen::HouseholderQR<Matrix> qr(random_matrix(d, d));
        return Matrix(qr.householderQ());
    };

    // Invariants at every sample on a dissipative run with every channel active.
    const std::array<Measure, 2> inv{Measure::trace_error, Measure::min_eig};
    RunSpec spec{make_params(0.2, 0.2, kRatio), InitialKind::thermal, 32, 100, 10, 4.0};
    double max_trace = 0.0;
    double min_eig = 1.0;
    bool invariants = true;
    try {
        for (const Sample& s : run(spec, inv).samples) {
            max_trace = std::max(max_trace, s.trace_error);
            min_eig = std::min(min_eig, s.min_eigenvalue);
        }
    } catch (const Error&) {
        invariants = false;
    }
    invariants = invariants && max_trace <= kTraceTolerance && min_eig >= -kPositivityTolerance;

    // Local-unitary invariance on an entangled mixed state.
    const Index n = 12;
    Matrix g = Matrix::Zero(2 * n, 2);
    g.topRows(4) = random_matrix(4, 2);
    g.middleRows(n, 4) = random_matrix(4, 2);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    const DensityMatrix mixed(rho, Basis::composite);
    const double n0 = negativity(mixed);
    double lu = 0.0;
    for (int k = 0; k < 10; ++k) {
        const Matrix u = kron(random_unitary(2), random_unitary(n));
        lu = std::max(lu, std::abs(negativity(DensityMatrix(u * rho * u.adjoint(), Basis::composite)) - n0));
    }

    // Product and Bell-like states.
    const DensityMatrix product = tensor(partial_trace(mixed, Subsystem::qubit), partial_trace(mixed, Subsystem::oscillator));
    const double product_n = negativity(product);
    Vector bell = Vector::Zero(2 * n);
    bell(0) = bell(n + 1) = 1.0 / std::sqrt(2.0);
    const double bell_n = negativity(DensityMatrix::from_pure(PureState(bell, Basis::composite)));

    // Pure-state reductions.
    double k_gap = 0.0;
    for (int k = 0; k < 10; ++k) {
        Vector psi = random_matrix(2 * n, 1).col(0);
        psi /= psi.norm();
        const DensityMatrix pure = DensityMatrix::from_pure(PureState(psi, Basis::composite));
        k_gap = std::max(k_gap, std::abs(participation_ratio(partial_trace(pure, Subsystem::qubit)) -
                                         participation_ratio(partial_trace(pure, Subsystem::oscillator))));
    }

    // The stated identity and the one that follows from the cat-state algebra.
    double stated = 0.0;
    double derived = 0.0;
    for (int k = 0; k <= 300; ++k) {
        const double a = 0.01 * k;
        const double kk = orc::k_pure(a);
        const double nn = orc::n_pure(a);
        const double x = 2.0 / kk - 1.0;
        stated = std::max(stated, std::abs(nn - 0.5 * std::sqrt(1.0 - x * x)));
        derived = std::max(derived, std::abs(nn - 0.5 * std::sqrt(1.0 - x)));
    }

    const bool ok_lu = lu < kUnitaryInvarianceTol;
    const bool ok_product = product_n <= kExactTol;
    const bool ok_bell = std::abs(bell_n - 0.5) <= kExactTol;
    const bool ok_k = k_gap <= kExactTol * 100;
    const bool ok_identity = stated < kIdentityTol;
    Outcome o;
    o.pass = invariants && ok_lu && ok_product && ok_bell && ok_k && ok_identity;
    o.summary = "properties: invariants " + std::string(invariants ? "ok" : "FAILED") +
                " (max trace err " + fmt(max_trace) + ", min eig " + fmt(min_eig) +
                "); LU invariance " + fmt(lu) + "; product N=" + fmt(product_n) + "; Bell N=" +
                format_number(bell_n) + "; pure |K_s-K_r|=" + fmt(k_gap) +
                "; N=sqrt(1-(2/K-1)^2)/2 max dev " + fmt(stated) + " (tol " + fmt(kIdentityTol) +
                ") over alpha in [0,3]";
    o.info.push_back("N=sqrt(1-(2/K-1))/2, which follows from 2/K-1=exp(-4|alpha|^2): max dev " +
                     fmt(derived));
    return o;
}

double trajectory_gap(const Trajectory& a, const Trajectory& b) {
    if (a.samples.size() != b.samples.size()) {
        return kInf;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        worst = std::max({worst, std::abs(a.samples[i].negativity - b.samples[i].negativity),
                          std::abs(a.samples[i].k_r - b.samples[i].k_r),
                          std::abs(a.samples[i].k_sigma - b.samples[i].k_sigma)});
    }
    return worst;
}

Outcome criterion8(const Baselines& b) {
    struct Case {
        const char* name;
        const RunSpec* spec;
        const Trajectory* base;
    };
    const std::array<Case, 4> cases{Case{"pure", &b.pure, &b.pure_traj},
                                    Case{"thermal", &b.thermal, &b.thermal_traj},
                                    Case{"decoh-ground", &b.decoh_ground, &b.decoh_ground_traj},
                                    Case{"decoh-thermal", &b.decoh_thermal, &b.decoh_thermal_traj}};
    double worst = 0.0;
    std::string detail;
    for (const Case& c : cases) {
        RunSpec fine = *c.spec;
        fine.steps *= 2;
        RunSpec wide = *c.spec;
        wide.n_max += 16;
        double dt_gap = kInf;
        double n_gap = kInf;
        try {
            dt_gap = trajectory_gap(*c.base, run(fine, kCoreMeasures));
            n_gap = trajectory_gap(*c.base, run(wide, kCoreMeasures));
        } catch (const Error& e) {
            detail += std::string(" ") + c.name + ": " + e.what() + ";";
        }
        worst = std::max({worst, dt_gap, n_gap});
        detail += std::string(" ") + c.name + " dt/2 " + fmt(dt_gap) + ", n_max+16 " + fmt(n_gap) + ";";
    }
    const StroboscopicResult s64 = stroboscopic(kNmax);
    const StroboscopicResult s80 = stroboscopic(kNmax + 16);
    const double strobe_gap = std::max(std::abs(s64.unitary - s80.unitary), std::abs(s64.infidelity - s80.infidelity));
    worst = std::max(worst, strobe_gap);
    detail += " stroboscopic n_max+16 " + fmt(strobe_gap);

    Outcome o;
    o.pass = worst <= kConvergenceTol;
    o.summary = "convergence: max change " + fmt(worst) + " (tol " + fmt(kConvergenceTol) + ");" + detail;
    return o;
}

Outcome guarded(const std::function<Outcome()>& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        Outcome o;
        o.pass = false;
        o.summary = std::string("raised: ") + e.what();
        return o;
    }
}

} // namespace

int main() {
    Baselines b;
    const std::array<std::function<Outcome()>, 8> criteria{
        [&] { return criterion1(b); }, [&] { return criterion2(b); },
        [&] { return criterion3(b); }, [] { return criterion4(); },
        [&] { return criterion5(b); }, [] { return criterion6(); },
        [] { return criterion7(); },   [&] { return criterion8(b); }};

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome o = guarded(criteria[i]);
        std::printf("[%s] criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.summary.c_str());
        for (const std::string& line : o.info) {
            std::printf("         info: %s\n", line.c_str());
        }
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
