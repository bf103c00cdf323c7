#include <cmath>
#include <complex>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wqed/amplitudes.hpp"
#include "wqed/config.hpp"
#include "wqed/errors.hpp"
#include "wqed/memory.hpp"
#include "wqed/metrics.hpp"
#include "wqed/params.hpp"
#include "wqed/pipeline.hpp"
#include "wqed/report.hpp"
#include "wqed/verification.hpp"

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using nlohmann::json;
using wqed::report::format_number;
using wqed::report::json_complex;
using wqed::report::json_number;

// Options every subcommand understands. Command line beats config file
// beats built-in default.
struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string format;
    std::string scheme;
    unsigned seed = 0;
};

void add_common(CLI::App* sub, CommonFlags& c) {
    sub->add_option("--config", c.config_path, "JSON config file");
    sub->add_option("--out", c.out_path, "output path, - for stdout");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--scheme", c.scheme, "emitter scheme")
        ->check(CLI::IsMember({"4ls", "3ls", "memory"}));
    sub->add_option("--seed", c.seed, "seed for randomized suites");
}

wqed::RunConfig resolve(const CommonFlags& c) {
    wqed::RunConfig cfg =
        c.config_path.empty() ? wqed::RunConfig{} : wqed::load_config(c.config_path);
    if (!c.scheme.empty()) cfg.scheme = wqed::scheme_from_string(c.scheme);
    if (!c.out_path.empty()) cfg.out_path = c.out_path;
    if (!c.format.empty()) cfg.format = wqed::format_from_string(c.format);
    return cfg;
}

wqed::OutputFormat pick_format(const wqed::RunConfig& cfg,
                               wqed::OutputFormat fallback) {
    return cfg.format.value_or(fallback);
}

void emit_json(const wqed::RunConfig& cfg, const json& j) {
    wqed::report::write_text(cfg.out_path, j.dump(2) + "\n");
}

void emit_csv(const wqed::RunConfig& cfg, const wqed::report::CsvTable& table) {
    wqed::report::write_text(cfg.out_path, table.str());
}

// Sweep rows print with delta_t back in units of 1/gamma, matching the
// flag the caller supplied.
void emit_sweep(const wqed::RunConfig& cfg, const wqed::SweepResult& res,
                double gamma) {
    if (pick_format(cfg, wqed::OutputFormat::csv) == wqed::OutputFormat::csv) {
        wqed::report::CsvTable table;
        table.header = {"delta_t", "purcell", "fidelity", "leakage",
                        "grid_residual"};
        for (const auto& row : res.rows) {
            table.rows.push_back({format_number(row.delta_t * gamma),
                                  format_number(row.purcell),
                                  format_number(row.fidelity),
                                  format_number(row.leakage),
                                  format_number(row.grid_residual)});
        }
        emit_csv(cfg, table);
        return;
    }
    json rows = json::array();
    for (const auto& row : res.rows) {
        rows.push_back({{"delta_t", json_number(row.delta_t * gamma)},
                        {"purcell", json_number(row.purcell)},
                        {"fidelity", json_number(row.fidelity)},
                        {"leakage", json_number(row.leakage)},
                        {"grid_residual", json_number(row.grid_residual)}});
    }
    emit_json(cfg, rows);
}

int run_amplitudes(const wqed::RunConfig& cfg, double omega_min, double omega_max,
                   int points) {
    const bool csv = pick_format(cfg, wqed::OutputFormat::csv) ==
                     wqed::OutputFormat::csv;
    if (cfg.scheme == wqed::Scheme::memory) {
        throw wqed::BadConfig("amplitudes: scheme must be 4ls or 3ls");
    }

    const bool four = cfg.scheme == wqed::Scheme::four_ls;
    const double gamma = four ? cfg.params4.gamma : cfg.params3.gamma;
    if (four) {
        wqed::require_valid(cfg.params4);
    } else {
        wqed::require_valid(cfg.params3);
    }

    // Default window: the rails plus ten linewidths of margin, in units
    // of gamma like every other frequency on this surface.
    double lo = omega_min;
    double hi = omega_max;
    if (std::isnan(lo)) {
        lo = four ? cfg.params4.omega32 / gamma - 10.0
                  : cfg.params3.omega_eg / gamma - 10.0;
    }
    if (std::isnan(hi)) {
        hi = four ? cfg.params4.omega12 / gamma + 10.0
                  : cfg.params3.omega_eg / gamma + 10.0;
    }
    if (!(hi > lo)) throw wqed::BadConfig("amplitudes: omega range is empty");

    wqed::report::CsvTable table;
    json rows = json::array();
    if (four) {
        table.header = {"omega",  "r11_re", "r11_im", "r13_re", "r13_im",
                        "r33_re", "r33_im", "r31_re", "r31_im", "R3_re",
                        "R3_im"};
    } else {
        table.header = {"omega", "rg_re", "rg_im", "rs_re", "rs_im"};
    }

    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * i / (points - 1);
        const double omega = x * gamma;
        if (four) {
            const wqed::ReflectionSet rs = wqed::reflection_set(cfg.params4, omega);
            if (csv) {
                table.rows.push_back(
                    {format_number(x), format_number(rs.r11.real()),
                     format_number(rs.r11.imag()), format_number(rs.r13.real()),
                     format_number(rs.r13.imag()), format_number(rs.r33.real()),
                     format_number(rs.r33.imag()), format_number(rs.r31.real()),
                     format_number(rs.r31.imag()), format_number(rs.R3.real()),
                     format_number(rs.R3.imag())});
            } else {
                rows.push_back({{"omega", json_number(x)},
                                {"r11", json_complex(rs.r11)},
                                {"r13", json_complex(rs.r13)},
                                {"r33", json_complex(rs.r33)},
                                {"r31", json_complex(rs.r31)},
                                {"R3", json_complex(rs.R3)}});
            }
        } else {
            const auto rg = wqed::reflect_3ls(cfg.params3, wqed::AtomState::g, omega);
            const auto rsh = wqed::reflect_3ls(cfg.params3, wqed::AtomState::s, omega);
            if (csv) {
                table.rows.push_back(
                    {format_number(x), format_number(rg.real()),
                     format_number(rg.imag()), format_number(rsh.real()),
                     format_number(rsh.imag())});
            } else {
                rows.push_back({{"omega", json_number(x)},
                                {"rg", json_complex(rg)},
                                {"rs", json_complex(rsh)}});
            }
        }
    }

    if (csv) {
        emit_csv(cfg, table);
    } else {
        emit_json(cfg, rows);
    }
    return 0;
}

int run_truth_table(const wqed::RunConfig& cfg) {
    const bool csv =
        pick_format(cfg, wqed::OutputFormat::json) == wqed::OutputFormat::csv;

    json j;
    wqed::report::CsvTable table;
    table.header = {"entry", "re", "im"};
    auto push = [&](const char* name, std::complex<double> z) {
        j[name] = json_complex(z);
        table.rows.push_back(
            {name, format_number(z.real()), format_number(z.imag())});
    };

    switch (cfg.scheme) {
        case wqed::Scheme::four_ls: {
            wqed::require_valid(cfg.params4);
            const wqed::TruthTable tt = wqed::truth_table(cfg.params4, cfg.flags);
            push("00", tt.t00);
            push("01", tt.t01);
            push("10", tt.t10);
            push("11", tt.t11);
            break;
        }
        case wqed::Scheme::three_ls: {
            wqed::require_valid(cfg.params3);
            const wqed::PhotonPhotonResult r =
                wqed::three_ls_photon_photon_gate(cfg.params3);
            push("00", r.table.t00);
            push("01", r.table.t01);
            push("10", r.table.t10);
            push("11", r.table.t11);
            push("cz_invariant", r.cz_invariant);
            j["atom_entropy"] = json_number(r.atom_entropy);
            table.rows.push_back(
                {"atom_entropy", format_number(r.atom_entropy), "0"});
            break;
        }
        case wqed::Scheme::memory:
            throw wqed::BadConfig("truth-table: scheme must be 4ls or 3ls");
    }

    if (csv) {
        emit_csv(cfg, table);
    } else {
        emit_json(cfg, j);
    }
    return 0;
}

int run_fidelity_sweep(const wqed::RunConfig& cfg,
                       const std::vector<double>& delta_ts,
                       const std::vector<double>& purcells) {
    wqed::SweepResult res;
    double gamma = 1.0;
    switch (cfg.scheme) {
        case wqed::Scheme::four_ls: {
            wqed::require_valid(cfg.params4);
            gamma = cfg.params4.gamma;
            std::vector<double> abs_dts;
            for (double dt : delta_ts) abs_dts.push_back(dt / gamma);
            res = wqed::fidelity_sweep(cfg.params4, abs_dts, purcells, cfg.grid,
                                       cfg.flags);
            break;
        }
        case wqed::Scheme::three_ls: {
            wqed::require_valid(cfg.params3);
            gamma = cfg.params3.gamma;
            std::vector<double> abs_dts;
            for (double dt : delta_ts) abs_dts.push_back(dt / gamma);
            res = wqed::fidelity_sweep(cfg.params3, abs_dts, purcells, cfg.grid);
            break;
        }
        case wqed::Scheme::memory:
            throw wqed::BadConfig("fidelity-sweep: scheme must be 4ls or 3ls");
    }
    emit_sweep(cfg, res, gamma);
    return 0;
}

int run_leakage_sweep(const wqed::RunConfig& cfg, double delta_t,
                      const std::vector<double>& purcells) {
    wqed::SweepResult res;
    double gamma = 1.0;
    switch (cfg.scheme) {
        case wqed::Scheme::four_ls:
            wqed::require_valid(cfg.params4);
            gamma = cfg.params4.gamma;
            res = wqed::leakage_sweep_4ls(cfg.params4, delta_t / gamma, purcells,
                                          cfg.grid, cfg.flags);
            break;
        case wqed::Scheme::three_ls:
            wqed::require_valid(cfg.params3);
            gamma = cfg.params3.gamma;
            res = wqed::fidelity_sweep(cfg.params3, {delta_t / gamma}, purcells,
                                       cfg.grid);
            break;
        case wqed::Scheme::memory:
            throw wqed::BadConfig("leakage-sweep: scheme must be 4ls or 3ls");
    }
    emit_sweep(cfg, res, gamma);
    return 0;
}

int run_memory_demo(const wqed::RunConfig& cfg, double a_re, double a_im,
                    double b_re, double b_im) {
    const wqed::MemoryParams& mp = cfg.memory;
    wqed::require_valid(mp);

    std::complex<double> alpha(a_re, a_im);
    std::complex<double> beta(b_re, b_im);
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (norm < 1e-12) {
        throw wqed::BadConfig("memory-demo: input qubit must be nonzero");
    }
    alpha /= norm;
    beta /= norm;

    const wqed::StoreResult stored = wqed::store(mp, alpha, beta);
    const wqed::PhotonQubit out = wqed::retrieve(mp, stored.qubit);
    const double fidelity = wqed::round_trip_fidelity(mp, alpha, beta);

    if (pick_format(cfg, wqed::OutputFormat::json) == wqed::OutputFormat::csv) {
        wqed::report::CsvTable table;
        table.header = {"quantity", "re", "im"};
        auto push_z = [&](const char* name, std::complex<double> z) {
            table.rows.push_back(
                {name, format_number(z.real()), format_number(z.imag())});
        };
        push_z("alpha_in", alpha);
        push_z("beta_in", beta);
        push_z("alpha_stored", stored.qubit.alpha);
        push_z("beta_stored", stored.qubit.beta);
        push_z("alpha_out", out.alpha);
        push_z("beta_out", out.beta);
        table.rows.push_back(
            {"c_photon_freq", format_number(stored.c_photon_freq / mp.gamma), "0"});
        table.rows.push_back(
            {"round_trip_fidelity", format_number(fidelity), "0"});
        emit_csv(cfg, table);
    } else {
        json j;
        j["alpha_in"] = json_complex(alpha);
        j["beta_in"] = json_complex(beta);
        j["alpha_stored"] = json_complex(stored.qubit.alpha);
        j["beta_stored"] = json_complex(stored.qubit.beta);
        j["alpha_out"] = json_complex(out.alpha);
        j["beta_out"] = json_complex(out.beta);
        j["c_photon_freq"] = json_number(stored.c_photon_freq / mp.gamma);
        j["round_trip_fidelity"] = json_number(fidelity);
        emit_json(cfg, j);
    }
    return 0;
}

int run_oracle_check(const wqed::RunConfig& cfg, int samples, unsigned seed) {
    const auto rows = wqed::verification::oracle_agreement_suite(samples, seed);

    if (pick_format(cfg, wqed::OutputFormat::csv) == wqed::OutputFormat::csv) {
        wqed::report::CsvTable table;
        table.header = {"family", "samples", "max_deviation"};
        for (const auto& row : rows) {
            table.rows.push_back({row.family, std::to_string(row.samples),
                                  format_number(row.max_deviation)});
        }
        emit_csv(cfg, table);
    } else {
        json j = json::array();
        for (const auto& row : rows) {
            j.push_back({{"family", row.family},
                         {"samples", row.samples},
                         {"max_deviation", json_number(row.max_deviation)}});
        }
        emit_json(cfg, j);
    }

    for (const auto& row : rows) {
        if (!(row.max_deviation <= 1e-10)) {
            std::cerr << "oracle-check: " << row.family
                      << " deviates by more than 1e-10\n";
            return 1;
        }
    }
    return 0;
}

int run_solve_conditions(const wqed::RunConfig& cfg, double omega12,
                         double omega32, double omega0, double a) {
    const wqed::SystemParams4LS& p = cfg.params4;
    const double gamma = p.gamma;
    const double o12 = std::isnan(omega12) ? p.omega12 / gamma : omega12;
    const double o32 = std::isnan(omega32) ? p.omega32 / gamma : omega32;
    const double o0 = std::isnan(omega0) ? p.omega0 / gamma : omega0;
    const double aa = std::isnan(a) ? p.a * gamma : a;

    const wqed::ConditionSolution sol = wqed::solve_gate_conditions(
        o12 * gamma, o32 * gamma, o0 * gamma, aa / gamma, gamma,
        p.detuning_floor);

    if (pick_format(cfg, wqed::OutputFormat::json) == wqed::OutputFormat::csv) {
        wqed::report::CsvTable table;
        table.header = {"a",  "omega32", "omega0",
                        "n1", "n0",      "residual_trap",
                        "residual_omega0"};
        table.rows.push_back(
            {format_number(sol.a * gamma), format_number(sol.omega32 / gamma),
             format_number(sol.omega0 / gamma), std::to_string(sol.n1),
             std::to_string(sol.n0), format_number(sol.residuals[0]),
             format_number(sol.residuals[1])});
        emit_csv(cfg, table);
    } else {
        json j;
        j["a"] = json_number(sol.a * gamma);
        j["omega32"] = json_number(sol.omega32 / gamma);
        j["omega0"] = json_number(sol.omega0 / gamma);
        j["n1"] = sol.n1;
        j["n0"] = sol.n0;
        j["residuals"] = json::array(
            {json_number(sol.residuals[0]), json_number(sol.residuals[1])});
        emit_json(cfg, j);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Waveguide photon-photon gate toolkit"};
    app.require_subcommand(1);

    CommonFlags common;

    CLI::App* amp = app.add_subcommand(
        "amplitudes", "Reflection amplitudes over a frequency window");
    add_common(amp, common);
    double omega_min = kNaN;
    double omega_max = kNaN;
    int points = 201;
    amp->add_option("--omega-min", omega_min,
                    "window start, units of gamma (default: below the rails)");
    amp->add_option("--omega-max", omega_max,
                    "window end, units of gamma (default: above the rails)");
    amp->add_option("--points", points, "sample count")
        ->check(CLI::Range(2, 1000000));

    CLI::App* tt = app.add_subcommand(
        "truth-table", "Conditional amplitudes on the computational basis");
    add_common(tt, common);

    CLI::App* fs = app.add_subcommand(
        "fidelity-sweep", "Pulse-averaged fidelity over pulse width and Purcell");
    add_common(fs, common);
    std::vector<double> fs_delta_ts{10.0};
    std::vector<double> fs_purcells{10.0, 20.0, 40.0,
                                    std::numeric_limits<double>::infinity()};
    fs->add_option("--delta-t", fs_delta_ts,
                   "pulse widths, units of 1/gamma")
        ->delimiter(',');
    fs->add_option("--purcell", fs_purcells, "Purcell factors, inf for lossless")
        ->delimiter(',');

    CLI::App* ls = app.add_subcommand(
        "leakage-sweep", "Photon loss probability versus Purcell factor");
    add_common(ls, common);
    double ls_delta_t = 10.0;
    std::vector<double> ls_purcells{5.0, 10.0, 20.0, 40.0, 60.0, 80.0, 100.0};
    ls->add_option("--delta-t", ls_delta_t, "pulse width, units of 1/gamma");
    ls->add_option("--purcell", ls_purcells, "Purcell factors, inf for lossless")
        ->delimiter(',');

    CLI::App* md = app.add_subcommand(
        "memory-demo", "Store and retrieve a frequency-encoded qubit");
    add_common(md, common);
    double alpha_re = 1.0;
    double alpha_im = 0.0;
    double beta_re = 1.0;
    double beta_im = 0.0;
    md->add_option("--alpha-re", alpha_re, "input alpha, real part");
    md->add_option("--alpha-im", alpha_im, "input alpha, imaginary part");
    md->add_option("--beta-re", beta_re, "input beta, real part");
    md->add_option("--beta-im", beta_im, "input beta, imaginary part");

    CLI::App* oc = app.add_subcommand(
        "oracle-check", "Closed forms versus the linear-system route");
    add_common(oc, common);
    int samples = 1000;
    oc->add_option("--samples", samples, "samples per amplitude family")
        ->check(CLI::Range(1, 100000000));

    CLI::App* sc = app.add_subcommand(
        "solve-conditions", "Adjust omega32 and omega0 onto the phase conditions");
    add_common(sc, common);
    double sc_omega12 = kNaN;
    double sc_omega32 = kNaN;
    double sc_omega0 = kNaN;
    double sc_a = kNaN;
    sc->add_option("--omega12", sc_omega12, "fixed omega12, units of gamma");
    sc->add_option("--omega32", sc_omega32, "omega32 target, units of gamma");
    sc->add_option("--omega0", sc_omega0, "omega0 target, units of gamma");
    sc->add_option("--a", sc_a, "fixed mirror distance, units of 1/gamma");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        const wqed::RunConfig cfg = resolve(common);
        if (app.got_subcommand(amp)) {
            return run_amplitudes(cfg, omega_min, omega_max, points);
        }
        if (app.got_subcommand(tt)) {
            return run_truth_table(cfg);
        }
        if (app.got_subcommand(fs)) {
            return run_fidelity_sweep(cfg, fs_delta_ts, fs_purcells);
        }
        if (app.got_subcommand(ls)) {
            return run_leakage_sweep(cfg, ls_delta_t, ls_purcells);
        }
        if (app.got_subcommand(md)) {
            return run_memory_demo(cfg, alpha_re, alpha_im, beta_re, beta_im);
        }
        if (app.got_subcommand(oc)) {
            return run_oracle_check(cfg, samples, common.seed);
        }
        if (app.got_subcommand(sc)) {
            return run_solve_conditions(cfg, sc_omega12, sc_omega32, sc_omega0,
                                        sc_a);
        }
        std::cerr << "no subcommand selected\n";
        return 64;
    } catch (const wqed::BadConfig& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const wqed::InvalidParams& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const wqed::NoValidSolution& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const wqed::PulseOverlap& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
