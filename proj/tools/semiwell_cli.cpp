// Command-line surface for the semiwell library: curve generation (phase,
// delay), feature finding (ea, bound), and the validation suite.
//
// Exit codes: 0 ok, 1 validation failure, 2 invalid configuration,
// 3 numerical failure, 4 feature not found in the window.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "semiwell/errors.hpp"
#include "semiwell/model.hpp"
#include "semiwell/scattering.hpp"
#include "semiwell/spectra.hpp"
#include "semiwell/timing.hpp"
#include "semiwell/validate.hpp"

namespace {

using semiwell::model::WellConfig;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FeatureNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 17 significant digits: round-trippable and byte-stable across runs.
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct GeometryFlags {
    std::optional<double> area, a, b, v0, delta;

    void attach(CLI::App* cmd) {
        cmd->add_option("--area", area, "area (a+b)*v0 of the unit-area-style family (with --a)");
        cmd->add_option("--a", a, "left half-width a");
        cmd->add_option("--b", b, "right half-width b (raw geometry)");
        cmd->add_option("--v0", v0, "well depth v0 (raw geometry)");
        cmd->add_option("--delta", delta, "delta-well strength g (delta variant)");
    }

    WellConfig resolve() const {
        const bool form_area = area.has_value();
        const bool form_raw = b.has_value() || v0.has_value();
        const bool form_delta = delta.has_value();
        if (form_delta) {
            if (form_area || form_raw || a.has_value())
                throw ConfigError("--delta excludes the other geometry flags");
            return semiwell::model::delta_config(*delta);
        }
        if (form_area) {
            if (form_raw) throw ConfigError("--area/--a excludes --b/--v0");
            if (!a.has_value()) throw ConfigError("--area requires --a");
            return semiwell::model::unit_area_symmetric(*a, *area);
        }
        if (!(a.has_value() && b.has_value() && v0.has_value()))
            throw ConfigError(
                "specify a geometry: --area with --a, or --a --b --v0, or --delta");
        return semiwell::model::finite_config(*a, *b, *v0);
    }
};

struct WindowFlags {
    double e_min, e_max;
    int n0;

    void attach(CLI::App* cmd, double lo, double hi, int n) {
        e_min = lo;
        e_max = hi;
        n0 = n;
        cmd->add_option("--emin", e_min, "lower edge of the energy window");
        cmd->add_option("--emax", e_max, "upper edge of the energy window");
        cmd->add_option("--n0", n0, "number of base grid points");
    }

    void check_scattering() const {
        if (!(e_min > 0.0)) throw ConfigError("need --emin > 0");
        if (!(e_min < e_max)) throw ConfigError("need --emin < --emax");
        if (n0 < 2) throw ConfigError("need --n0 >= 2");
    }
};

struct OutputFlags {
    std::string path;    // empty = stdout
    std::string format = "csv";

    void attach(CLI::App* cmd) {
        cmd->add_option("--out", path, "output file (default: stdout)");
        cmd->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    }

    void write(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ConfigError("cannot open output file: " + path);
        f << payload;
    }
};

int thread_count() {
    if (const char* env = std::getenv("SEMIWELL_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

// Index-parallel map; results land in-order, so output stays deterministic.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
    const int workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

int cmd_phase(const GeometryFlags& geo, const WindowFlags& win,
              const OutputFlags& out) {
    win.check_scattering();
    const auto cfg = geo.resolve();
    const auto curve = semiwell::scattering::phase_curve(cfg, win.e_min, win.e_max,
                                                        win.n0);
    if (out.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& p : curve)
            rows.push_back({{"E", p.e}, {"delta", p.delta}, {"S_re", p.s_re},
                            {"S_im", p.s_im}});
        out.write(nlohmann::json{{"rows", rows}}.dump(2) + "\n");
        return 0;
    }
    std::string csv = "E,delta,S_re,S_im\n";
    for (const auto& p : curve)
        csv += fmt17(p.e) + "," + fmt17(p.delta) + "," + fmt17(p.s_re) + "," +
               fmt17(p.s_im) + "\n";
    out.write(csv);
    return 0;
}

int cmd_delay(const GeometryFlags& geo, const WindowFlags& win,
              const OutputFlags& out) {
    win.check_scattering();
    const auto cfg = geo.resolve();
    const int n = win.n0;
    std::vector<semiwell::timing::DelaySample> rows(n);
    std::vector<std::string> failures(n);
    parallel_for(n, [&](int i) {
        const double e =
            win.e_min + (win.e_max - win.e_min) * i / static_cast<double>(n - 1);
        try {
            rows[i] = semiwell::timing::tau_w(cfg, e);
        } catch (const semiwell::Error& err) {
            failures[i] = err.what();
        }
    });
    for (const auto& f : failures)
        if (!f.empty()) throw semiwell::Error(f);

    if (out.format == "json") {
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& s : rows)
            jrows.push_back({{"E", s.e}, {"tau_p", s.tau_p}, {"tau_e", s.tau_e},
                             {"tau_w", s.tau_w}});
        out.write(nlohmann::json{{"rows", jrows}}.dump(2) + "\n");
        return 0;
    }
    std::string csv = "E,tau_p,tau_e,tau_w\n";
    for (const auto& s : rows)
        csv += fmt17(s.e) + "," + fmt17(s.tau_p) + "," + fmt17(s.tau_e) + "," +
               fmt17(s.tau_w) + "\n";
    out.write(csv);
    return 0;
}

int cmd_ea(const GeometryFlags& geo, const WindowFlags& win,
           const OutputFlags& out) {
    win.check_scattering();
    const auto cfg = geo.resolve();
    // Coarse scan for a bracket, then the standard refinement.
    const int n = 200;
    double prev_e = win.e_min;
    double prev_t = semiwell::timing::tau_e(cfg, prev_e);
    std::optional<double> e_a;
    for (int i = 1; i <= n; ++i) {
        const double e = win.e_min + (win.e_max - win.e_min) * i / n;
        const double t = semiwell::timing::tau_e(cfg, e);
        if (prev_t == 0.0) {
            e_a = prev_e;
            break;
        }
        if (prev_t * t < 0.0) {
            e_a = semiwell::timing::find_sign_change(cfg, prev_e, e);
            break;
        }
        prev_e = e;
        prev_t = t;
    }
    if (!e_a)
        throw FeatureNotFound("no sign change of tau_e in (" + fmt17(win.e_min) +
                              ", " + fmt17(win.e_max) + ")");
    const double a = cfg.variant == semiwell::model::Variant::Delta ? 0.0 : cfg.a;
    if (out.format == "json") {
        out.write(nlohmann::json{{"a", a}, {"E_a", *e_a}}.dump(2) + "\n");
        return 0;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.8f\n", *e_a);
    out.write(buf);
    return 0;
}

int cmd_bound(const GeometryFlags& geo, const OutputFlags& out) {
    const auto cfg = geo.resolve();
    const auto states = semiwell::spectra::bound_states(cfg);
    if (out.format == "json") {
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& s : states)
            jrows.push_back({{"index", s.index}, {"E", s.e}});
        out.write(nlohmann::json{{"states", jrows}}.dump(2) + "\n");
        return 0;
    }
    std::string text;
    for (const auto& s : states) text += fmt17(s.e) + "\n";
    out.write(text);
    return 0;
}

int cmd_validate(const std::string& only, const std::string& json_path) {
    if (!only.empty()) {
        const auto& tags = semiwell::validate::criterion_tags();
        if (std::find(tags.begin(), tags.end(), only) == tags.end())
            throw ConfigError("unknown criterion tag: " + only);
    }
    const auto results = semiwell::validate::run(only);
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::printf("%s  %2d %-11s %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.tag.c_str(), r.detail.c_str());
    }
    std::printf("%s\n", all_pass ? "all criteria passed" : "criteria FAILED");
    if (!json_path.empty()) {
        nlohmann::json jcrit = nlohmann::json::array();
        for (const auto& r : results)
            jcrit.push_back({{"id", r.id}, {"tag", r.tag}, {"pass", r.pass},
                             {"detail", r.detail}, {"deltas", r.deltas}});
        std::ofstream f(json_path, std::ios::binary);
        if (!f) throw ConfigError("cannot open report file: " + json_path);
        f << nlohmann::json{{"all_pass", all_pass}, {"criteria", jcrit}}.dump(2)
          << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-harmonic well scattering toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "key=value config file, [section] per subcommand; "
                   "flags override file values");

    GeometryFlags geo_phase, geo_delay, geo_ea, geo_bound;
    WindowFlags win_phase, win_delay, win_ea;
    OutputFlags out_phase, out_delay, out_ea, out_bound;

    auto* phase = app.add_subcommand("phase", "unwrapped reflection phase curve");
    geo_phase.attach(phase);
    win_phase.attach(phase, 0.001, 1.0, 400);
    out_phase.attach(phase);

    auto* delay = app.add_subcommand("delay", "time-delay curve on a uniform grid");
    geo_delay.attach(delay);
    win_delay.attach(delay, 0.005, 1.0, 1000);
    out_delay.attach(delay);

    auto* ea = app.add_subcommand("ea", "sign-change energy E_a of the time delay");
    geo_ea.attach(ea);
    win_ea.attach(ea, 0.005, 1.0, 200);
    out_ea.attach(ea);

    auto* bound = app.add_subcommand("bound", "bound-state energies");
    geo_bound.attach(bound);
    out_bound.attach(bound);

    std::string only, json_path;
    auto* validate = app.add_subcommand("validate", "run the acceptance criteria");
    validate->add_option("--only", only, "run a single criterion tag");
    validate->add_option("--json", json_path, "write a machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (phase->parsed()) return cmd_phase(geo_phase, win_phase, out_phase);
        if (delay->parsed()) return cmd_delay(geo_delay, win_delay, out_delay);
        if (ea->parsed()) return cmd_ea(geo_ea, win_ea, out_ea);
        if (bound->parsed()) return cmd_bound(geo_bound, out_bound);
        if (validate->parsed()) return cmd_validate(only, json_path);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const FeatureNotFound& e) {
        std::cerr << "not found: " << e.what() << "\n";
        return 4;
    } catch (const semiwell::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
