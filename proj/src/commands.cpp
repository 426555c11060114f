#include "crw/commands.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "crw/continuum_long.hpp"
#include "crw/continuum_short.hpp"
#include "crw/output.hpp"
#include "crw/parallel.hpp"
#include "crw/resonance.hpp"
#include "crw/scattering.hpp"
#include "crw/version.hpp"

namespace crw {

namespace {

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::vector<HeaderEntry> common_header(const std::string& command,
                                       const RunConfig& cfg,
                                       const OutputOptions& opts) {
    std::vector<HeaderEntry> h;
    h.emplace_back("command", command);
    h.emplace_back("version", kVersion);
    if (opts.timestamp) h.emplace_back("generated", iso_timestamp());
    h.emplace_back("model", to_string(cfg.model));
    h.emplace_back("units", cfg.units);
    h.emplace_back("omega", format_double(cfg.omega));
    h.emplace_back("xi", format_double(cfg.xi));
    h.emplace_back("omega1", format_double(cfg.omega1));
    h.emplace_back("omega2", format_double(cfg.omega2));
    h.emplace_back("j1", format_double(cfg.j1));
    h.emplace_back("j2", format_double(cfg.j2));
    h.emplace_back("d", std::to_string(cfg.d));
    return h;
}

OutputFormat effective_format(const RunConfig& cfg, const OutputOptions& opts,
                              OutputFormat fallback) {
    if (opts.format) return *opts.format;
    return cfg.format.value_or(fallback);
}

void emit_table(const Table& table, OutputFormat fmt, std::ostream& out) {
    if (fmt == OutputFormat::csv) {
        write_csv(table, out);
    } else {
        write_json_table(table, out);
    }
}

const char* flag_name(PointFlag f) {
    switch (f) {
        case PointFlag::ok: return "ok";
        case PointFlag::resonant_atom: return "resonant_atom";
        case PointFlag::band_edge: return "band_edge";
    }
    return "?";
}

void require_identical_atoms(const RunConfig& cfg, const char* command) {
    if (!cfg.atoms_identical()) {
        throw ConfigError(std::string(command) +
                          ": resonance analysis requires omega1 == omega2 and "
                          "j1 == j2");
    }
}

struct ModeRow {
    ResonanceSummary s;
};

std::vector<ResonanceSummary> collect_modes(const RunConfig& cfg) {
    const WaveguideParams wg = cfg.waveguide();
    const double Omega = cfg.omega1;
    const double J = cfg.j1;
    std::vector<ResonanceSummary> rows;
    const auto solve_with = [&](int n, Parity parity, auto newton_fn,
                                auto pert_fn, auto residual_fn, double qn,
                                double Qn) {
        ResonanceSummary s;
        s.n = n;
        s.parity = parity;
        s.qn = qn;
        s.Qn = Qn;
        s.k_perturbative = pert_fn(n);
        s.residual_perturbative = std::abs(residual_fn(s.k_perturbative));
        try {
            s.k_newton = newton_fn(s.k_perturbative, parity);
            s.residual_newton = std::abs(residual_fn(s.k_newton));
            s.converged = true;
        } catch (const NoConvergenceError& e) {
            s.k_newton = e.last_iterate;
            s.residual_newton = e.final_residual;
            s.converged = false;
            s.error = e.what();
        }
        rows.push_back(s);
    };

    switch (cfg.model) {
        case Model::discrete:
            for (const Parity parity : {Parity::odd, Parity::even}) {
                const int lo = parity == Parity::odd ? 1 : 0;
                for (int n = lo; n <= cfg.d - 1; ++n) {
                    rows.push_back(
                        summarize_resonance(n, wg, Omega, J, cfg.d, parity));
                }
            }
            break;
        case Model::longwave:
            for (int n = 1; n <= cfg.d - 1; ++n) {
                solve_with(
                    n, Parity::odd,
                    [&](Complex seed, Parity p) {
                        return long_newton(seed, wg, Omega, J, cfg.d, p);
                    },
                    [&](int m) {
                        return long_perturbative_k(m, wg, Omega, J, cfg.d);
                    },
                    [&](Complex k) {
                        return long_resonance_condition(k, wg, Omega, J, cfg.d,
                                                        Parity::odd);
                    },
                    mode_wavenumber(n, cfg.d, Parity::odd),
                    long_qn(n, wg, Omega, J, cfg.d));
            }
            break;
        case Model::shortwave:
            for (int n = 1; n <= cfg.d - 1; ++n) {
                solve_with(
                    n, Parity::odd,
                    [&](Complex seed, Parity p) {
                        return short_newton(seed, wg, Omega, J, cfg.d, p);
                    },
                    [&](int m) {
                        return short_perturbative_k(m, wg, Omega, J, cfg.d);
                    },
                    [&](Complex k) {
                        return short_resonance_condition(k, wg, Omega, J, cfg.d,
                                                         Parity::odd);
                    },
                    mode_wavenumber(n, cfg.d, Parity::odd),
                    short_qn(n, wg, Omega, J, cfg.d));
            }
            break;
    }
    return rows;
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, std::ostream& out,
                 const OutputOptions& opts) {
    if (cfg.model != Model::discrete) {
        throw ConfigError("spectrum: model must be discrete");
    }
    if (cfg.sweep.var != "k") {
        throw ConfigError("spectrum: sweep.var must be k");
    }
    if (cfg.sweep.n < 2) {
        throw ConfigError("spectrum: sweep.n must be >= 2");
    }
    const std::vector<double> ks =
        uniform_grid(cfg.sweep.min, cfg.sweep.max, cfg.sweep.n);
    const std::vector<SweepPoint> points =
        spectrum_sweep(ks, cfg.waveguide(), cfg.atoms(), opts.threads);

    Table table;
    table.header = common_header("spectrum", cfg, opts);
    table.header.emplace_back("sweep.var", cfg.sweep.var);
    table.header.emplace_back("sweep.min", format_double(cfg.sweep.min));
    table.header.emplace_back("sweep.max", format_double(cfg.sweep.max));
    table.header.emplace_back("sweep.n", std::to_string(cfg.sweep.n));
    table.columns = {"k", "T", "R", "flag"};
    table.rows.reserve(points.size());
    for (const SweepPoint& p : points) {
        table.rows.push_back(
            {p.k, p.transmission, p.reflection, std::string(flag_name(p.flag))});
    }
    emit_table(table, effective_format(cfg, opts, OutputFormat::csv), out);
    return 0;
}

int cmd_resonances(const RunConfig& cfg, std::ostream& out,
                   const OutputOptions& opts) {
    require_identical_atoms(cfg, "resonances");
    const std::vector<ResonanceSummary> rows = collect_modes(cfg);
    const OutputFormat fmt = effective_format(cfg, opts, OutputFormat::json);

    if (fmt == OutputFormat::csv) {
        Table table;
        table.header = common_header("resonances", cfg, opts);
        table.columns = {"n",         "parity",       "qn",
                         "Qn",        "re_k_pert",    "im_k_pert",
                         "re_k_newton", "im_k_newton", "residual_pert",
                         "residual_newton", "im_k",   "k_gap",
                         "status"};
        for (const ResonanceSummary& s : rows) {
            table.rows.push_back(
                {static_cast<long long>(s.n), std::string(to_string(s.parity)),
                 s.qn, s.Qn, s.k_perturbative.real(), s.k_perturbative.imag(),
                 s.k_newton.real(), s.k_newton.imag(), s.residual_perturbative,
                 s.residual_newton, s.k_newton.imag(),
                 std::abs(s.k_perturbative - s.k_newton),
                 std::string(s.converged ? "ok" : "no_convergence")});
        }
        emit_table(table, fmt, out);
        return 0;
    }

    JsonWriter w(out);
    w.begin_object();
    for (const auto& [key, value] : common_header("resonances", cfg, opts)) {
        w.field(key, value);
    }
    w.begin_array("modes");
    for (const ResonanceSummary& s : rows) {
        w.begin_object_in_array();
        w.field("n", static_cast<long long>(s.n));
        w.field("parity", std::string(to_string(s.parity)));
        w.field("qn", s.qn);
        w.field("Qn", s.Qn);
        w.field("re_k_pert", s.k_perturbative.real());
        w.field("im_k_pert", s.k_perturbative.imag());
        w.field("re_k_newton", s.k_newton.real());
        w.field("im_k_newton", s.k_newton.imag());
        w.field("residual_pert", s.residual_perturbative);
        w.field("residual_newton", s.residual_newton);
        w.field("im_k", s.k_newton.imag());
        w.field("k_gap", std::abs(s.k_perturbative - s.k_newton));
        w.field("status", std::string(s.converged ? "ok" : "no_convergence"));
        if (!s.converged) w.field("error", s.error);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    w.finish();
    return 0;
}

int cmd_profile(const RunConfig& cfg, std::ostream& out,
                const OutputOptions& opts, std::optional<Complex> k_override) {
    const OutputFormat fmt = effective_format(cfg, opts, OutputFormat::csv);
    const WaveguideParams wg = cfg.waveguide();

    if (cfg.model == Model::discrete && cfg.mode == "contour") {
        require_identical_atoms(cfg, "profile");
        if (cfg.sweep.var != "Omega" || cfg.sweep.n < 2) {
            throw ConfigError("profile contour: needs sweep.var=Omega, sweep.n>=2");
        }
        const std::vector<double> omegas =
            uniform_grid(cfg.sweep.min, cfg.sweep.max, cfg.sweep.n);
        const int L = cfg.profile_window();
        // For each Omega keep the least-leaky odd-parity mode.
        std::vector<WavefunctionProfile> profiles(omegas.size());
        parallel_for(omegas.size(), opts.threads, [&](std::size_t i) {
            double best_im = std::numeric_limits<double>::infinity();
            Complex best_k;
            // Branch-centre seeding: the weak-mirror sweep sits far outside
            // the perturbative regime.
            for (int n = 1; n <= cfg.d - 1; ++n) {
                const auto k =
                    branch_root(n, wg, omegas[i], cfg.j1, cfg.d, Parity::odd);
                if (!k) continue;
                if (std::abs(k->imag()) < best_im) {
                    best_im = std::abs(k->imag());
                    best_k = *k;
                }
            }
            if (std::isfinite(best_im)) {
                profiles[i] = reconstruct_wavefunction(best_k, wg, omegas[i],
                                                       cfg.j1, cfg.d, L, 1e-6);
            } else {
                profiles[i].half_window = L;
                profiles[i].d = cfg.d;
                profiles[i].values.assign(
                    static_cast<std::size_t>(2 * L + 1), Complex(0.0, 0.0));
            }
        });
        Table table;
        table.header = common_header("profile", cfg, opts);
        table.header.emplace_back("mode", "contour");
        table.header.emplace_back("parity", to_string(Parity::odd));
        table.header.emplace_back("sweep.var", cfg.sweep.var);
        table.header.emplace_back("sweep.min", format_double(cfg.sweep.min));
        table.header.emplace_back("sweep.max", format_double(cfg.sweep.max));
        table.header.emplace_back("sweep.n", std::to_string(cfg.sweep.n));
        table.header.emplace_back("window", std::to_string(L));
        table.columns = {"j", "Omega", "abs2_u"};
        for (std::size_t i = 0; i < omegas.size(); ++i) {
            const WavefunctionProfile norm = profiles[i].max_normalized();
            for (int j = -L; j <= L; ++j) {
                table.rows.push_back({static_cast<long long>(j), omegas[i],
                                      std::norm(norm.value(j))});
            }
        }
        emit_table(table, fmt, out);
        return 0;
    }

    if (cfg.model == Model::discrete) {
        require_identical_atoms(cfg, "profile");
        const int L = cfg.profile_window();
        Complex k;
        if (k_override) {
            k = *k_override;
        } else {
            const ResonantState st =
                solve_resonance(cfg.n, wg, cfg.omega1, cfg.j1, cfg.d, cfg.parity);
            k = st.k;
        }
        const WavefunctionProfile prof = reconstruct_wavefunction(
            k, wg, cfg.omega1, cfg.j1, cfg.d, L, k_override ? 1e3 : 1e-8);
        Table table;
        table.header = common_header("profile", cfg, opts);
        table.header.emplace_back("n", std::to_string(cfg.n));
        table.header.emplace_back("parity", to_string(cfg.parity));
        table.header.emplace_back("window", std::to_string(L));
        table.header.emplace_back("re_k", format_double(k.real()));
        table.header.emplace_back("im_k", format_double(k.imag()));
        table.columns = {"j", "re_u", "im_u", "abs2_u"};
        for (int j = -L; j <= L; ++j) {
            const Complex u = prof.value(j);
            table.rows.push_back({static_cast<long long>(j), u.real(), u.imag(),
                                  std::norm(u)});
        }
        emit_table(table, fmt, out);
        return 0;
    }

    require_identical_atoms(cfg, "profile");
    const double Omega = cfg.omega1;
    const double J = cfg.j1;
    const int npts = cfg.grid_points();
    const std::vector<double> grid =
        uniform_grid(-4.0 * cfg.d, 4.0 * cfg.d, npts);

    if (cfg.model == Model::longwave) {
        Complex k = k_override
                        ? *k_override
                        : long_newton(
                              long_perturbative_k(cfg.n, wg, Omega, J, cfg.d),
                              wg, Omega, J, cfg.d, Parity::odd);
        const ContinuumProfile prof = long_profile(k, wg, Omega, J, cfg.d, grid);
        Table table;
        table.header = common_header("profile", cfg, opts);
        table.header.emplace_back("n", std::to_string(cfg.n));
        table.header.emplace_back("points", std::to_string(npts));
        table.header.emplace_back("re_k", format_double(k.real()));
        table.header.emplace_back("im_k", format_double(k.imag()));
        table.columns = {"x", "re_u", "im_u", "abs2_u"};
        for (std::size_t i = 0; i < prof.x.size(); ++i) {
            table.rows.push_back({prof.x[i], prof.u[i].real(), prof.u[i].imag(),
                                  std::norm(prof.u[i])});
        }
        emit_table(table, fmt, out);
        return 0;
    }

    // Short-wavelength: left/right/total norm squares (three-panel export).
    Complex k = k_override
                    ? *k_override
                    : short_newton(
                          short_perturbative_k(cfg.n, wg, Omega, J, cfg.d), wg,
                          Omega, J, cfg.d, Parity::odd);
    const ShortProfiles prof = short_profiles(k, wg, Omega, J, cfg.d, grid);
    Table table;
    table.header = common_header("profile", cfg, opts);
    table.header.emplace_back("n", std::to_string(cfg.n));
    table.header.emplace_back("points", std::to_string(npts));
    table.header.emplace_back("re_k", format_double(k.real()));
    table.header.emplace_back("im_k", format_double(k.imag()));
    table.columns = {"x", "abs2_left", "abs2_right", "abs2_total"};
    for (std::size_t i = 0; i < prof.x.size(); ++i) {
        table.rows.push_back({prof.x[i], std::norm(prof.u_left[i]),
                              std::norm(prof.u_right[i]),
                              std::norm(prof.u_total[i])});
    }
    emit_table(table, fmt, out);
    return 0;
}

int cmd_verify(verify::Level level, std::ostream& out) {
    const auto results = verify::run_all(level);
    std::size_t failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
            << "  worst=" << format_double(r.worst_residual)
            << "  tol=" << format_double(r.tolerance);
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << "\n";
        if (!r.passed) ++failed;
    }
    out << (failed == 0 ? "verify: all " : "verify: FAILED ")
        << (failed == 0 ? std::to_string(results.size()) + " checks passed"
                        : std::to_string(failed) + " of " +
                              std::to_string(results.size()) + " checks")
        << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace crw
