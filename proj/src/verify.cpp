#include "crw/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "crw/boundstates.hpp"
#include "crw/continuum_long.hpp"
#include "crw/continuum_short.hpp"
#include "crw/core.hpp"
#include "crw/oracle.hpp"
#include "crw/resonance.hpp"
#include "crw/scattering.hpp"

namespace crw::verify {

namespace {

constexpr double kPi = std::numbers::pi;

struct Recorder {
    std::vector<CheckResult> results;

    void add(const std::string& name, double worst, double tol,
             const std::string& note = "") {
        results.push_back(CheckResult{name, worst <= tol, worst, tol, note});
    }
    void add_flag(const std::string& name, bool ok, const std::string& note = "") {
        results.push_back(
            CheckResult{name, ok, ok ? 0.0 : 1.0, 0.0, note});
    }
};

WaveguideParams random_wg(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uo(3.0, 12.0);
    std::uniform_real_distribution<double> ux(0.3, 2.0);
    return WaveguideParams{uo(rng), ux(rng)};
}

AtomPair random_atoms(std::mt19937_64& rng, const WaveguideParams& wg) {
    std::uniform_real_distribution<double> uom(-3.0, 3.0);
    std::uniform_real_distribution<double> uj(0.1, 2.5);
    std::uniform_int_distribution<int> ud(1, 12);
    AtomPair a;
    a.omega1 = wg.omega + wg.xi * uom(rng);
    a.omega2 = wg.omega + wg.xi * uom(rng);
    a.j1 = uj(rng);
    a.j2 = uj(rng);
    a.d = ud(rng);
    return a;
}

std::vector<double> unitarity_kgrid(int n) {
    std::vector<double> ks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ks[static_cast<std::size_t>(i)] = kPi * (i + 0.5) / n;
    return ks;
}

void check_core(Recorder& rec, std::mt19937_64& rng) {
    // Band containment and the dispersion round trip.
    double worst = 0.0;
    const WaveguideParams wg{7.0, 1.3};
    for (int i = 0; i <= 400; ++i) {
        const double k = -kPi + 2.0 * kPi * i / 400.0;
        const double e = dispersion(k, wg);
        if (!wg.in_band(e)) worst = std::max(worst, 1.0);
        const double kk = wavenumber_from_energy(e, wg);
        worst = std::max(worst, std::abs(dispersion(kk, wg) - e) / std::abs(e));
    }
    rec.add("core.dispersion_round_trip", worst, 1e-12);

    // Dressed identities against a generic symmetric eigensolver.
    std::uniform_real_distribution<double> uo(0.0, 20.0);
    std::uniform_real_distribution<double> uj(0.0, 5.0);
    double worst_id = 0.0, worst_eig = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double om = uo(rng), Om = uo(rng), J = uj(rng);
        const DressedPair dp = dressed_energies(om, Om, J);
        worst_id = std::max(worst_id,
                            std::abs(dp.eps_plus + dp.eps_minus - (om + Om)));
        worst_id = std::max(
            worst_id, std::abs(dp.eps_plus * dp.eps_minus - (om * Om - J * J)));
        Eigen::Matrix2d h;
        h << om, J, J, Om;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
        worst_eig = std::max(worst_eig,
                             std::abs(dp.eps_minus - es.eigenvalues()(0)));
        worst_eig = std::max(worst_eig,
                             std::abs(dp.eps_plus - es.eigenvalues()(1)));
    }
    rec.add("core.dressed_identities", worst_id, 1e-12);
    rec.add("core.dressed_vs_eigensolver", worst_eig, 1e-12);

    // Large-detuning asymptote: eps_+ - omega - J^2/delta = -J^4/delta^3 + ...
    const double om = 10.0, J = 1.0;
    double worst_ratio = 0.0;
    for (const double delta : {50.0, 100.0, 200.0}) {
        const DressedPair dp = dressed_energies(om, om - delta, J);
        const double rem = dp.eps_plus - om - J * J / delta;
        const double scaled = rem * delta * delta * delta / (J * J * J * J);
        worst_ratio = std::max(worst_ratio, std::abs(scaled + 1.0));
    }
    rec.add("core.dressed_asymptote_cubic", worst_ratio, 5e-3,
            "remainder of eps_+ - omega - J^2/delta scales as -J^4/delta^3");
}

void check_scattering(Recorder& rec, std::mt19937_64& rng, Level level) {
    const int nsets = level == Level::full ? 20 : 8;
    const std::vector<double> ks = unitarity_kgrid(64);
    double worst_unit = 0.0, worst_closed = 0.0, worst_ident = 0.0,
           worst_swap = 0.0;
    for (int s = 0; s < nsets; ++s) {
        const WaveguideParams wg = random_wg(rng);
        const AtomPair atoms = random_atoms(rng, wg);
        for (const double k : ks) {
            const ScatteringSolution sol = solve_scattering(k, wg, atoms);
            worst_unit = std::max(
                worst_unit,
                std::abs(std::norm(sol.r) + std::norm(sol.t) - 1.0));
            const Complex tc = transmission_closed_form(k, wg, atoms);
            worst_closed = std::max(worst_closed, std::abs(sol.t - tc));
            AtomPair sw = atoms;
            std::swap(sw.omega1, sw.omega2);
            std::swap(sw.j1, sw.j2);
            worst_swap = std::max(
                worst_swap,
                std::abs(std::abs(transmission_closed_form(k, wg, sw)) -
                         std::abs(tc)));
        }
        // Identical atoms: closed-form T versus |t|^2.
        const AtomPair ident =
            AtomPair::identical_pair(atoms.omega1, atoms.j1, atoms.d);
        for (const double k : ks) {
            const double T =
                transmission_identical(k, wg, ident.omega1, ident.j1, ident.d);
            const double T2 =
                std::norm(transmission_closed_form(k, wg, ident));
            worst_ident = std::max(worst_ident, std::abs(T - T2));
        }
    }
    rec.add("scattering.unitarity", worst_unit, 1e-10);
    rec.add("scattering.closed_form_vs_solve", worst_closed, 1e-10);
    rec.add("scattering.identical_T_vs_closed", worst_ident, 1e-10);
    rec.add("scattering.exchange_symmetry", worst_swap, 1e-12);

    // Resonant total reflection for in-band transition energies.
    double worst_res = 0.0;
    std::uniform_real_distribution<double> uband(-0.9, 0.9);
    for (int s = 0; s < 10; ++s) {
        const WaveguideParams wg = random_wg(rng);
        AtomPair atoms = random_atoms(rng, wg);
        atoms.omega1 = wg.omega + 2.0 * wg.xi * uband(rng);
        const double k = wavenumber_from_energy(atoms.omega1, wg);
        const ScatteringSolution sol = solve_scattering(k, wg, atoms);
        worst_res = std::max(worst_res, std::abs(sol.t));
        worst_res = std::max(worst_res, std::abs(std::abs(sol.r) - 1.0));
    }
    rec.add("scattering.resonant_total_reflection", worst_res, 1e-10);

    // Well/barrier reciprocity on the lattice: flipping delta -> -delta mirrors
    // the spectrum through the band centre, T(k, Omega) = T(pi-k, 2 omega - Omega).
    double worst_rec = 0.0;
    for (int s = 0; s < 6; ++s) {
        const WaveguideParams wg = random_wg(rng);
        const AtomPair atoms = random_atoms(rng, wg);
        for (const double k : unitarity_kgrid(16)) {
            const double t1 =
                transmission_identical(k, wg, atoms.omega1, atoms.j1, atoms.d);
            const double t2 = transmission_identical(
                kPi - k, wg, 2.0 * wg.omega - atoms.omega1, atoms.j1, atoms.d);
            worst_rec = std::max(worst_rec, std::abs(t1 - t2));
        }
    }
    rec.add("scattering.well_barrier_reciprocity", worst_rec, 1e-10);

    // Oracle equivalence: full level runs the 64-point grid over 20 random
    // parameter sets at chain half-length 50 d.
    const int oracle_sets = level == Level::full ? 20 : 3;
    const int oracle_kn = level == Level::full ? 64 : 8;
    const int lmult = level == Level::full ? 50 : 10;
    double worst_oracle = 0.0;
    for (int s = 0; s < oracle_sets; ++s) {
        const WaveguideParams wg = random_wg(rng);
        AtomPair atoms = random_atoms(rng, wg);
        atoms.d = std::min(atoms.d, 8);
        for (const double k : unitarity_kgrid(oracle_kn)) {
            const ScatteringSolution sol = solve_scattering(k, wg, atoms);
            const ScatterOracleResult orc =
                oracle_scatter({lmult * atoms.d, wg, atoms, k});
            worst_oracle = std::max(worst_oracle, std::abs(sol.t - orc.t));
            worst_oracle = std::max(worst_oracle, std::abs(sol.r - orc.r));
        }
    }
    rec.add("scattering.oracle_equivalence", worst_oracle, 1e-8);
}

void check_resonance(Recorder& rec, std::mt19937_64& rng, Level level) {
    // Dual-route residual agreement at random complex k.
    std::uniform_real_distribution<double> ure(0.2, 2.9);
    std::uniform_real_distribution<double> uim(-0.4, 0.4);
    const WaveguideParams wg{10.0, 0.2};
    double worst_dual = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Complex k(ure(rng), uim(rng));
        for (const Parity p : {Parity::odd, Parity::even}) {
            const Complex r1 = parity_condition_residual(k, wg, 6.0, 1.0, 10, p);
            const Complex r2 =
                parity_condition_residual_via_green(k, wg, 6.0, 1.0, 10, p);
            worst_dual = std::max(worst_dual, std::abs(r1 - r2));
        }
    }
    rec.add("resonance.dual_route_residual", worst_dual, 1e-12);

    // Newton roots for every mode of the fig4 preset geometry.
    double worst_root = 0.0, worst_lattice = 0.0, worst_parity = 0.0;
    const int d = 10;
    for (const double Omega : {10.0, 6.0, 7.0}) {
        for (int n = 1; n <= d - 1; ++n) {
            for (const Parity p : {Parity::odd, Parity::even}) {
                const ResonanceSummary s =
                    summarize_resonance(n, wg, Omega, 1.0, d, p);
                if (!s.converged) {
                    worst_root = std::max(worst_root, 1.0);
                    continue;
                }
                worst_root = std::max(worst_root, s.residual_newton);
                const WavefunctionProfile prof = reconstruct_wavefunction(
                    s.k_newton, wg, Omega, 1.0, d, 4 * d);
                worst_lattice = std::max(
                    worst_lattice,
                    lattice_equation_residual(prof, wg, Omega, 1.0));
                if (p == Parity::odd) {
                    worst_parity =
                        std::max(worst_parity, std::abs(prof.value(0)));
                } else {
                    worst_parity = std::max(
                        worst_parity,
                        std::abs(prof.value(1) - prof.value(-1)));
                }
            }
        }
    }
    rec.add("resonance.newton_residuals", worst_root, 1e-12);
    rec.add("resonance.reconstruction_lattice_residual", worst_lattice, 1e-10);
    rec.add("resonance.profile_parity", worst_parity, 1e-8);

    // Perturbative wave number: cubic remainder against the Newton root.
    double worst_rate = 0.0;
    std::vector<double> gaps;
    for (const double lambda : {0.4, 0.2, 0.1, 0.05}) {
        const double J = std::sqrt(2.0 * wg.xi / lambda);
        const ResonanceSummary s =
            summarize_resonance(3, wg, 6.0, J, d, Parity::odd);
        gaps.push_back(std::abs(s.k_perturbative - s.k_newton));
    }
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        worst_rate = std::max(worst_rate, std::abs(gaps[i] / gaps[i + 1] - 8.0));
    }
    rec.add("resonance.cubic_convergence", worst_rate, 2.0,
            "|k_pert - k_newton| drops ~8x per lambda halving");

    // Perfect-cavity points: real root, zero outside amplitude.
    double worst_im = 0.0, worst_out = 0.0;
    const WaveguideParams wg6{10.0, 2.0};
    const int d6 = level == Level::full ? 12 : 8;
    for (int n = 1; n <= 2 * d6 - 1; ++n) {
        const double Omega = perfect_cavity_omega(n, wg6, d6);
        const Parity p = perfect_cavity_parity(n);
        const int mode = p == Parity::odd ? n / 2 : (n - 1) / 2;
        if (p == Parity::odd && (mode < 1 || mode > d6 - 1)) continue;
        const ResonanceSummary s =
            summarize_resonance(mode, wg6, Omega, 1.0, d6, p);
        worst_im = std::max(worst_im, std::abs(s.k_newton.imag()));
        const WavefunctionProfile prof =
            reconstruct_wavefunction(s.k_newton, wg6, Omega, 1.0, d6, 4 * d6);
        for (int j = -4 * d6; j <= 4 * d6; ++j) {
            if (std::abs(j) > d6) {
                worst_out = std::max(worst_out, std::abs(prof.value(j)));
            }
        }
    }
    rec.add("resonance.perfect_cavity_real_root", worst_im, 1e-10);
    rec.add("resonance.perfect_cavity_confinement", worst_out, 1e-8);

    // Segment levels against the diagonalization oracle.
    double worst_seg = 0.0;
    for (const int dd : {1, 4, 8}) {
        const auto levels = segment_levels(dd, wg6);
        const auto eig = oracle_diagonalize(2 * dd - 1, wg6);
        if (levels.size() != eig.size()) {
            worst_seg = 1.0;
            continue;
        }
        for (std::size_t i = 0; i < levels.size(); ++i) {
            worst_seg =
                std::max(worst_seg, std::abs(levels[i].second - eig[i]));
        }
    }
    rec.add("resonance.segment_levels_vs_oracle", worst_seg, 1e-10);
}

void check_continuum(Recorder& rec, std::mt19937_64& rng, Level level) {
    // Long theory: S1 = S2 = 0 at the perfect-cavity point.
    const WaveguideParams wg{5.0, 0.1};
    double worst_perfect = 0.0;
    for (int n = 1; n <= 4; ++n) {
        const double q = n * kPi / 5.0;
        const double Omega = wg.omega - 2.0 * wg.xi + wg.xi * q * q;
        const LongWaveCoefficients c =
            long_coefficients(Complex(q, 0.0) * (1.0 + 1e-12), wg, Omega, 1.0, 5);
        worst_perfect = std::max(worst_perfect, std::abs(c.s1));
        worst_perfect = std::max(worst_perfect, std::abs(c.s2));
    }
    rec.add("long.perfect_point_s1_s2", worst_perfect, 1e-10);

    // Jump conditions and continuity at Newton roots.
    std::uniform_real_distribution<double> uom(2.5, 4.5);
    double worst_jump = 0.0;
    const int nsets = level == Level::full ? 8 : 4;
    for (int s = 0; s < nsets; ++s) {
        const double Omega = uom(rng);
        const int d = 5;
        const Complex k = long_newton(long_perturbative_k(3, wg, Omega, 1.0, d),
                                      wg, Omega, 1.0, d, Parity::odd);
        const LongWaveProfileAmplitudes amp =
            long_profile_amplitudes(k, wg, Omega, 1.0, d);
        const Complex Ek = long_dispersion(k, wg);
        const Complex jg = 1.0 * green_factor(Ek, Omega, 1.0);
        const auto deriv_in = [&](double x) {
            return kI * k *
                   (std::exp(kI * (k * x)) - amp.b_l * std::exp(-kI * (k * x)));
        };
        const double xd = static_cast<double>(d);
        // At +d: u' jump = (J G/xi) u(d).
        const Complex jump_r =
            kI * k * amp.right * std::exp(kI * (k * xd)) - deriv_in(xd);
        const Complex want_r = (jg / wg.xi) * long_profile_at(xd, k, amp, d);
        worst_jump = std::max(worst_jump, std::abs(jump_r - want_r));
        // At -d: u'(-d^+) - u'(-d^-) = (J G/xi) u(-d).
        const Complex jump_l =
            deriv_in(-xd) + kI * k * amp.left * std::exp(kI * (k * xd));
        const Complex want_l = (jg / wg.xi) * long_profile_at(-xd, k, amp, d);
        worst_jump = std::max(worst_jump, std::abs(jump_l - want_l));
    }
    rec.add("long.delta_jump_conditions", worst_jump, 1e-10);

    // Discrete-continuum unification of Re k for small q_n.
    double worst_unify = 0.0;
    for (const int d : {11, 16, 21}) {
        for (int n = 1; n * kPi / d <= 0.3; ++n) {
            const Complex kd =
                perturbative_k_complex(n, wg, 3.0, 1.0, d, Parity::odd);
            const Complex kl = long_perturbative_k(n, wg, 3.0, 1.0, d);
            worst_unify = std::max(
                worst_unify, std::abs(kd.real() - kl.real()) / kl.real());
        }
    }
    rec.add("long.discrete_continuum_unification", worst_unify, 0.02);

    // Short theory: amplitude relations and the closed-form bound-state
    // transition energies.
    const WaveguideParams wgs{5.0, 0.1};
    double worst_rel = 0.0, worst_omega = 0.0;
    const int ds = 8;
    for (int n = 1; n <= 3; ++n) {
        const double Omega_odd = short_bound_state_omega(n, wgs, ds, Parity::odd);
        worst_omega = std::max(
            worst_omega,
            std::abs(short_resonance_condition(
                Complex(n * kPi / ds, 0.0), wgs, Omega_odd, 1.0, ds,
                Parity::odd)));
        const double Omega_even =
            short_bound_state_omega(n, wgs, ds, Parity::even);
        worst_omega = std::max(
            worst_omega,
            std::abs(short_resonance_condition(
                Complex((n + 0.5) * kPi / ds, 0.0), wgs, Omega_even, 1.0, ds,
                Parity::even)));
        // Newton root from the perturbative seed; check the integrated
        // amplitude relations and the two r_L routes there.  The route
        // difference is the parity residual amplified by ~2/|w-1|, so the
        // root is polished well past the default tolerance.
        const NewtonOptions tight{200, 1e-14, 0.5};
        const Complex k =
            short_newton(short_perturbative_k(n, wgs, 2.0, 1.0, ds), wgs, 2.0,
                         1.0, ds, Parity::odd, tight);
        const ShortWaveAmplitudes a = short_amplitudes(k, wgs, 2.0, 1.0, ds);
        const Complex e2ikd = std::exp(kI * (2.0 * static_cast<double>(ds) * k));
        worst_rel = std::max(worst_rel,
                             std::abs(a.t_r - (a.r_l / e2ikd + 1.0)));
        worst_rel = std::max(worst_rel,
                             std::abs(a.t_l - (a.r_l + 1.0 / e2ikd)));
        const auto [r1, r2] = short_rL_dual(k, wgs, 2.0, 1.0, ds);
        worst_rel = std::max(worst_rel, std::abs(r1 - r2));
    }
    rec.add("short.amplitude_relations", worst_rel, 1e-12);
    rec.add("short.closed_form_omegas", worst_omega, 1e-10);

    // Chirality of the sampled profiles.
    const std::vector<double> grid = uniform_grid(-32.0, 32.0, 257);
    const Complex k9 =
        short_newton(short_perturbative_k(1, wgs, 2.0, 1.0, ds), wgs, 2.0, 1.0,
                     ds, Parity::odd);
    const ShortProfiles prof = short_profiles(k9, wgs, 2.0, 1.0, ds, grid);
    double worst_chiral = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < -ds) worst_chiral = std::max(worst_chiral, std::abs(prof.u_right[i]));
        if (grid[i] > ds) worst_chiral = std::max(worst_chiral, std::abs(prof.u_left[i]));
    }
    rec.add("short.chirality", worst_chiral, 0.0);
}

void check_boundstates(Recorder& rec, std::mt19937_64& rng, Level level) {
    // kappa = 0 solves the transcendental condition identically.
    double worst0 = 0.0;
    std::uniform_real_distribution<double> uband(-0.9, 0.9);
    std::uniform_real_distribution<double> uj(0.2, 3.0);
    std::uniform_int_distribution<int> ud(1, 10);
    for (int s = 0; s < 50; ++s) {
        const WaveguideParams wg = random_wg(rng);
        const double Omega = wg.omega + 2.0 * wg.xi * uband(rng);
        for (int n_edge = 0; n_edge <= 1; ++n_edge) {
            worst0 = std::max(
                worst0, std::abs(edge_condition_residual(0.0, n_edge, wg, Omega,
                                                         uj(rng), ud(rng))));
        }
    }
    rec.add("boundstates.kappa0_residual", worst0, 1e-14);

    // Nonzero-kappa states are lattice eigenvectors and match the
    // diagonalization oracle outside the band.
    double worst_lat = 0.0, worst_eig = 0.0;
    const int nsets = level == Level::full ? 6 : 3;
    for (int s = 0; s < nsets; ++s) {
        const WaveguideParams wg = random_wg(rng);
        const double Omega = wg.omega + 2.0 * wg.xi * uband(rng);
        const double J = 1.0 + uj(rng);
        const int d = 1 + s % 4;
        const auto states = find_edge_bound_states(wg, Omega, J, d);
        for (const EdgeBoundState& st : states) {
            if (st.edge_marker) continue;
            const int window = std::clamp(
                static_cast<int>(std::ceil(10.0 / st.kappa)), 4 * d, 2000);
            worst_lat = std::max(
                worst_lat,
                edge_state_lattice_residual(st, wg, Omega, J, d, window));
            if (st.kappa < 0.1) continue;  // finite-chain tail error dominates
            // The tails decay away from the atom sites, so the half-length
            // must reach d + 10/kappa.
            const int chain =
                2 * (d + static_cast<int>(std::ceil(10.0 / st.kappa))) + 1;
            const auto eig = oracle_diagonalize(chain, wg,
                                                AtomPair::identical_pair(
                                                    Omega, J, d));
            double best = 1e9;
            for (const double e : eig) {
                if (e > wg.band_min() - 1e-12 && e < wg.band_max() + 1e-12) continue;
                best = std::min(best, std::abs(e - st.energy));
            }
            worst_eig = std::max(worst_eig, best);
        }
    }
    rec.add("boundstates.lattice_residual", worst_lat, 1e-8);
    rec.add("boundstates.oracle_eigenvalue_match", worst_eig, 1e-6);
}

}  // namespace

std::vector<CheckResult> run_all(Level level, std::uint64_t seed) {
    Recorder rec;
    std::mt19937_64 rng(seed);
    check_core(rec, rng);
    check_scattering(rec, rng, level);
    check_resonance(rec, rng, level);
    check_continuum(rec, rng, level);
    check_boundstates(rec, rng, level);
    return rec.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace crw::verify
