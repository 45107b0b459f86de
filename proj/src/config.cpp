#include "tlsho/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "tlsho/errors.hpp"

namespace tlsho {

namespace {

struct RawConfig {
    std::string name{"scenario"};
    std::string initial{"ground"};
    double alpha_re{0.0};
    double alpha_im{0.0};
    std::vector<Measure> measures{all_measures()};
    std::string output;

    double omega0{1.0};
    double epsilon_z{2.0};
    double lambda0{0.2};
    double gamma{0.0};
    double c{0.0};
    double temperature_ratio{std::numeric_limits<double>::infinity()};

    long n_max{64};
    long steps_per_tau0{200};
    long samples_per_tau0{100};
    double t_end{10.0};
    bool pulses{true};
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& v, int line) {
    if (v == "inf" || v == "+inf" || v == "infinity") {
        return std::numeric_limits<double>::infinity();
    }
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        fail(line, "expected a number, got '" + v + "'");
    }
    return out;
}

long to_long(const std::string& v, int line) {
    long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        fail(line, "expected an integer, got '" + v + "'");
    }
    return out;
}

bool to_bool(const std::string& v, int line) {
    if (v == "true" || v == "on" || v == "yes" || v == "1") {
        return true;
    }
    if (v == "false" || v == "off" || v == "no" || v == "0") {
        return false;
    }
    fail(line, "expected true/false, got '" + v + "'");
}

std::vector<Measure> to_measures(const std::string& v, int line) {
    std::vector<Measure> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        const auto m = parse_measure(item);
        if (!m) {
            fail(line, "unknown measure '" + item + "'");
        }
        if (std::find(out.begin(), out.end(), *m) == out.end()) {
            out.push_back(*m);
        }
    }
    // Canonical column order.
    std::vector<Measure> ordered;
    for (const Measure m : all_measures()) {
        if (std::find(out.begin(), out.end(), m) != out.end()) {
            ordered.push_back(m);
        }
    }
    return ordered;
}

using Setter = std::function<void(RawConfig&, const std::string&, int)>;

const std::map<std::string, std::map<std::string, Setter>>& key_table() {
    static const std::map<std::string, std::map<std::string, Setter>> table{
        {"scenario",
         {
             {"name", [](RawConfig& c, const std::string& v, int) { c.name = v; }},
             {"initial_state", [](RawConfig& c, const std::string& v, int) { c.initial = v; }},
             {"alpha_re", [](RawConfig& c, const std::string& v, int l) { c.alpha_re = to_double(v, l); }},
             {"alpha_im", [](RawConfig& c, const std::string& v, int l) { c.alpha_im = to_double(v, l); }},
             {"measures", [](RawConfig& c, const std::string& v, int l) { c.measures = to_measures(v, l); }},
             {"output", [](RawConfig& c, const std::string& v, int) { c.output = v; }},
         }},
        {"params",
         {
             {"omega0", [](RawConfig& c, const std::string& v, int l) { c.omega0 = to_double(v, l); }},
             {"epsilon_z", [](RawConfig& c, const std::string& v, int l) { c.epsilon_z = to_double(v, l); }},
             {"lambda0", [](RawConfig& c, const std::string& v, int l) { c.lambda0 = to_double(v, l); }},
             {"gamma", [](RawConfig& c, const std::string& v, int l) { c.gamma = to_double(v, l); }},
             {"c", [](RawConfig& c, const std::string& v, int l) { c.c = to_double(v, l); }},
             {"temperature_ratio",
              [](RawConfig& c, const std::string& v, int l) { c.temperature_ratio = to_double(v, l); }},
         }},
        {"integrator",
         {
             {"n_max", [](RawConfig& c, const std::string& v, int l) { c.n_max = to_long(v, l); }},
             {"steps_per_tau0",
              [](RawConfig& c, const std::string& v, int l) { c.steps_per_tau0 = to_long(v, l); }},
             {"samples_per_tau0",
              [](RawConfig& c, const std::string& v, int l) { c.samples_per_tau0 = to_long(v, l); }},
             {"t_end", [](RawConfig& c, const std::string& v, int l) { c.t_end = to_double(v, l); }},
             {"pulses", [](RawConfig& c, const std::string& v, int l) { c.pulses = to_bool(v, l); }},
         }},
    };
    return table;
}

Scenario build(const RawConfig& raw) {
    Scenario s;
    s.name = raw.name;
    if (raw.initial == "ground") {
        s.initial.kind = InitialKind::ground;
    } else if (raw.initial == "thermal") {
        s.initial.kind = InitialKind::thermal;
    } else if (raw.initial == "coherent") {
        s.initial.kind = InitialKind::coherent;
        s.initial.alpha = Complex(raw.alpha_re, raw.alpha_im);
    } else {
        throw ConfigError("initial_state must be ground, thermal or coherent, got '" + raw.initial +
                          "'");
    }
    try {
        const double tau0 = std::numbers::pi / raw.omega0;
        s.params = derive_params(raw.omega0, raw.epsilon_z, raw.lambda0, raw.gamma / tau0,
                                 raw.c / tau0, raw.temperature_ratio);
        s.space = FockSpace(raw.n_max);
        s.integrator = IntegratorConfig::per_period(
            s.params, static_cast<int>(raw.steps_per_tau0), static_cast<int>(raw.samples_per_tau0),
            raw.t_end, raw.pulses);
        s.integrator.validate(s.params.tau0);
        s.integrator.total_steps();
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
    if (raw.samples_per_tau0 > raw.steps_per_tau0 || raw.steps_per_tau0 % raw.samples_per_tau0 != 0) {
        throw ConfigError("samples_per_tau0 must divide steps_per_tau0");
    }
    s.measures = raw.measures;
    s.output = raw.output;
    // Throws TruncationError when the initial state does not fit.
    prepare_initial(s.initial, s.params, s.space);
    return s;
}

} // namespace

Scenario parse_scenario(std::istream& in) {
    RawConfig raw;
    std::string section;
    std::set<std::string> seen;
    std::string line;
    int number = 0;
    const auto& table = key_table();
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string text = trim(line);
        if (text.empty()) {
            continue;
        }
        if (text.front() == '[') {
            if (text.back() != ']') {
                fail(number, "malformed section header");
            }
            section = trim(std::string_view(text).substr(1, text.size() - 2));
            if (!table.contains(section)) {
                fail(number, "unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            fail(number, "expected key = value");
        }
        if (section.empty()) {
            fail(number, "key outside of a section");
        }
        const std::string key = trim(std::string_view(text).substr(0, eq));
        const std::string value = trim(std::string_view(text).substr(eq + 1));
        const auto& keys = table.at(section);
        const auto it = keys.find(key);
        if (it == keys.end()) {
            fail(number, "unknown key '" + key + "' in [" + section + "]");
        }
        if (!seen.insert(section + "." + key).second) {
            fail(number, "duplicate key '" + key + "'");
        }
        it->second(raw, value, number);
    }
    return build(raw);
}

Scenario parse_scenario_text(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_scenario(in);
}

Scenario with_decoherence(const Scenario& base, double gamma_per_tau0) {
    Scenario s = base;
    const ModelParams& p = base.params;
    const double rate = gamma_per_tau0 / p.tau0;
    s.params = derive_params(p.omega0, p.epsilon_z, p.lambda0, rate, rate, p.temperature_ratio);
    return s;
}

std::string config_reference() {
    return R"(Config file: plain text, '# comment', sections [scenario] [params] [integrator].
Unknown sections or keys are errors. Times are in units of tau0 = pi/omega0,
rates in units of 1/tau0, natural units hbar = 1.

[scenario]
  name              label used in reports                    (default: scenario)
  initial_state     ground | thermal | coherent              (default: ground)
                    qubit always starts in (|up>+|down>)/sqrt2
  alpha_re, alpha_im  coherent amplitude for initial_state = coherent
  measures          comma list of negativity, K_r, K_sigma, purity,
                    trace_error, min_eig, a, sz; empty = time only  (default: all)
  output            CSV path for 'evolve' (overridden by --out; '-' or empty = stdout)
[params]
  omega0            oscillator frequency                     (default: 1)
  epsilon_z         qubit splitting                          (default: 2)
  lambda0           qubit-oscillator coupling                (default: 0.2)
  gamma             qubit dissipation Gamma, 1/tau0          (default: 0)
  c                 oscillator dissipation C, 1/tau0         (default: 0)
  temperature_ratio hbar*omega0/(k_B T), 'inf' for T = 0     (default: inf)
[integrator]
  n_max             oscillator Fock cutoff                   (default: 64)
  steps_per_tau0    RK4 steps per pulse period               (default: 200)
  samples_per_tau0  samples per period, divides steps        (default: 100)
  t_end             run length in tau0                       (default: 10)
  pulses            true | false                             (default: true)
)";
}

} // namespace tlsho
