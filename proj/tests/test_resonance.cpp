#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "crw/core.hpp"
#include "crw/oracle.hpp"
#include "crw/resonance.hpp"

using namespace crw;

namespace {
constexpr double kPi = std::numbers::pi;
const WaveguideParams kFig4Wg{10.0, 0.2};  // fig4 preset geometry, J-units
constexpr int kFig4D = 10;

double outside_fraction(const WavefunctionProfile& prof) {
    double inside = 0.0, outside = 0.0;
    for (int j = -prof.half_window; j <= prof.half_window; ++j) {
        const double w = std::norm(prof.value(j));
        (std::abs(j) <= prof.d ? inside : outside) += w;
    }
    return outside / (inside + outside);
}
}

TEST_CASE("parity condition: perfect-mirror points are exact roots") {
    // Omega = omega - 2 xi cos(q_n/2) puts a root at k = q_n/2 with the parity
    // fixed by n: the interior wave must vanish at the atom sites.
    for (int n = 1; n <= 2 * kFig4D - 1; ++n) {
        const double Omega = perfect_cavity_omega(n, kFig4Wg, kFig4D);
        const Complex k(n * kPi / (2.0 * kFig4D), 0.0);
        const Complex res = parity_condition_residual(
            k, kFig4Wg, Omega, 1.0, kFig4D, perfect_cavity_parity(n));
        CHECK(std::abs(res) < 1e-12);
    }
}

TEST_CASE("parity condition: strong-coupling limit pins odd roots at q_n") {
    const double J = 1e6;
    const Complex res = parity_condition_residual(
        Complex(3.0 * kPi / 10.0, 0.0), kFig4Wg, 6.0, J, kFig4D, Parity::odd);
    CHECK(std::abs(res) < 1e-10);
}

TEST_CASE("parity residual: both algebraic routes agree off the pole") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ure(0.2, 2.9);
    std::uniform_real_distribution<double> uim(-0.4, 0.4);
    for (int i = 0; i < 100; ++i) {
        const Complex k(ure(rng), uim(rng));
        for (const Parity p : {Parity::odd, Parity::even}) {
            const Complex a =
                parity_condition_residual(k, kFig4Wg, 6.0, 1.0, kFig4D, p);
            const Complex b = parity_condition_residual_via_green(
                k, kFig4Wg, 6.0, 1.0, kFig4D, p);
            CHECK(std::abs(a - b) < 1e-12);
        }
    }
}

TEST_CASE("first-order wave number: zero shift exactly at the mirror point") {
    // delta = 2 xi cos q_n makes Q_n vanish.
    const int n = 3;
    const double q = n * kPi / kFig4D;
    const double Omega = kFig4Wg.omega - 2.0 * kFig4Wg.xi * std::cos(q);
    CHECK(mode_qn(n, kFig4Wg, Omega, 1.0, kFig4D, Parity::odd) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(perturbative_k_real(n, kFig4Wg, Omega, 1.0, kFig4D, Parity::odd) ==
          doctest::Approx(q).epsilon(1e-15));
}

TEST_CASE("first-order wave number at resonant atoms (preset fig4a, n = 3)") {
    // Independent evaluation of Q_3 = (lambda/d)(delta - 2 xi cos q_3) sin q_3
    // with delta = 0: the shift is upward because Q_3 < 0.
    const double q3 = 3.0 * kPi / 10.0;
    const double lambda = 2.0 * 0.2 / 1.0;
    const double q3_shift =
        (lambda / 10.0) * (0.0 - 0.4 * std::cos(q3)) * std::sin(q3);
    CHECK(q3_shift == doctest::Approx(-0.0076078).epsilon(1e-4));
    const double k_re =
        perturbative_k_real(3, kFig4Wg, 10.0, 1.0, kFig4D, Parity::odd);
    CHECK(k_re == doctest::Approx(q3 - 0.5 * q3_shift).epsilon(1e-13));

    // Cross-check against the Newton root of the parity condition.
    const Complex k_exact = newton_resonance(Complex(k_re, 0.0), kFig4Wg, 10.0,
                                             1.0, kFig4D, Parity::odd);
    CHECK(std::abs(k_re - k_exact.real()) < 1e-4);
}

TEST_CASE("strong coupling sends the perturbative wave number to q_n") {
    const int n = 3;
    const double q = n * kPi / kFig4D;
    for (const Parity p : {Parity::odd, Parity::even}) {
        const double qn = mode_wavenumber(n, kFig4D, p);
        const Complex k =
            perturbative_k_complex(n, kFig4Wg, 6.0, 1e4, kFig4D, p);
        CHECK(std::abs(k - Complex(qn, 0.0)) < 1e-7);
    }
    (void)q;
}

TEST_CASE("second-order wave number: cubic remainder against the Newton oracle") {
    // Halving lambda = 2 xi / J^2 must shrink |k_pert - k_newton| about 8x for
    // the systematic expansion; the alternate closed form converges only
    // quadratically and falls behind.
    std::vector<double> gap_std, gap_alt;
    for (const double lambda : {0.4, 0.2, 0.1, 0.05}) {
        const double J = std::sqrt(2.0 * kFig4Wg.xi / lambda);
        const Complex ks = perturbative_k_complex(3, kFig4Wg, 6.0, J, kFig4D,
                                                  Parity::odd);
        const Complex ka = perturbative_k_complex(
            3, kFig4Wg, 6.0, J, kFig4D, Parity::odd, SecondOrderForm::alternate);
        const Complex kn =
            newton_resonance(ks, kFig4Wg, 6.0, J, kFig4D, Parity::odd);
        gap_std.push_back(std::abs(ks - kn));
        gap_alt.push_back(std::abs(ka - kn));
    }
    for (std::size_t i = 0; i + 1 < gap_std.size(); ++i) {
        const double ratio = gap_std[i] / gap_std[i + 1];
        CHECK(ratio > 6.0);
        CHECK(ratio < 10.0);
        // The alternate form's remainder decays more slowly.
        CHECK(gap_alt[i] / gap_alt[i + 1] < 6.0);
    }
    // And it is farther from the root at every lambda.
    for (std::size_t i = 0; i < gap_std.size(); ++i) {
        CHECK(gap_std[i] < gap_alt[i]);
    }
}

TEST_CASE("newton_resonance: fixed point, iteration budget, wrong basin") {
    const ResonanceSummary s =
        summarize_resonance(3, kFig4Wg, 10.0, 1.0, kFig4D, Parity::odd);
    REQUIRE(s.converged);
    // A converged root is a fixed point.
    const Complex again = newton_resonance(s.k_newton, kFig4Wg, 10.0, 1.0,
                                           kFig4D, Parity::odd);
    CHECK(std::abs(again - s.k_newton) < 1e-12);

    // The perturbative seed converges within a few steps.
    const auto f = [&](Complex k) {
        return parity_condition_residual(k, kFig4Wg, 10.0, 1.0, kFig4D,
                                         Parity::odd);
    };
    const auto df = [&](Complex k) {
        return parity_condition_derivative(k, kFig4Wg, 10.0, 1.0, kFig4D,
                                           Parity::odd);
    };
    const NewtonResult nr = newton_complex(f, df, s.k_perturbative);
    CHECK(nr.iterations <= 10);

    // A far-off seed either fails or lands on a different mode.
    try {
        const Complex k = newton_resonance(Complex(2.9, 0.3), kFig4Wg, 10.0,
                                           1.0, kFig4D, Parity::odd);
        CHECK(std::abs(k.real() - 3.0 * kPi / 10.0) > kPi / (2.0 * kFig4D));
    } catch (const NoConvergenceError& e) {
        CHECK(e.final_residual > 1e-12);
    }
}

TEST_CASE("perfect_cavity_omega: examples and index guards") {
    // q_n = pi at n = d gives Omega = omega.
    CHECK(perfect_cavity_omega(kFig4D, kFig4Wg, kFig4D) ==
          doctest::Approx(kFig4Wg.omega).epsilon(1e-15));

    const WaveguideParams wg6{10.0, 2.0};
    const double om8 = perfect_cavity_omega(4, wg6, 8);
    CHECK(om8 == doctest::Approx(10.0 - 4.0 * std::cos(kPi / 4.0)).epsilon(1e-12));
    CHECK(om8 == doctest::Approx(7.17157).epsilon(1e-5));
    // Same transition energy for the d = 12 geometry at n = 6.
    CHECK(perfect_cavity_omega(6, wg6, 12) == doctest::Approx(om8).epsilon(1e-12));

    // The resonant-tunneling condition holds exactly at k = q_n/2: with
    // E_k = Omega the Green factor diverges, so tan(2kd) must vanish there.
    CHECK(std::tan(2.0 * (kPi / 4.0) * 8.0) ==
          doctest::Approx(0.0).epsilon(1e-9));

    CHECK_THROWS_AS((void)perfect_cavity_omega(0, wg6, 8), IndexOutOfBandError);
    CHECK_THROWS_AS((void)perfect_cavity_omega(16, wg6, 8), IndexOutOfBandError);
    CHECK_THROWS_AS((void)mode_wavenumber(0, 8, Parity::odd), IndexOutOfBandError);
    CHECK_THROWS_AS((void)mode_wavenumber(8, 8, Parity::odd), IndexOutOfBandError);
}

TEST_CASE("reconstruction: perfect cavity confines the photon completely") {
    const WaveguideParams wg6{10.0, 2.0};
    const int d = 8;
    const double Omega = perfect_cavity_omega(4, wg6, d);  // odd parity (n even)
    const ResonanceSummary s =
        summarize_resonance(2, wg6, Omega, 1.0, d, Parity::odd);
    REQUIRE(s.converged);
    CHECK(std::abs(s.k_newton.imag()) < 1e-12);
    const WavefunctionProfile prof =
        reconstruct_wavefunction(s.k_newton, wg6, Omega, 1.0, d, 4 * d);
    for (int j = -4 * d; j <= 4 * d; ++j) {
        if (std::abs(j) > d) CHECK(std::abs(prof.value(j)) < 1e-8);
    }
}

TEST_CASE("reconstruction: fig4 preset profiles and the leakage ordering") {
    struct Run {
        double Omega;
        WavefunctionProfile prof;
        Complex k;
    };
    std::vector<Run> runs;
    for (const double Omega : {10.0, 6.0, 7.0}) {
        const ResonanceSummary s =
            summarize_resonance(3, kFig4Wg, Omega, 1.0, kFig4D, Parity::odd);
        REQUIRE(s.converged);
        runs.push_back({Omega,
                        reconstruct_wavefunction(s.k_newton, kFig4Wg, Omega, 1.0,
                                                 kFig4D, 4 * kFig4D),
                        s.k_newton});
    }
    // Resonant atoms (Omega = omega): sharply localized inside [-d, d].
    CHECK(outside_fraction(runs[0].prof) < 0.05);
    // Lattice residual vanishes at every site for each root.
    for (const Run& r : runs) {
        CHECK(lattice_equation_residual(r.prof, kFig4Wg, r.Omega, 1.0) < 1e-10);
    }
    // Leakage ordering: P_out(6) > P_out(7) > P_out(10).
    CHECK(outside_fraction(runs[1].prof) > outside_fraction(runs[2].prof));
    CHECK(outside_fraction(runs[2].prof) > outside_fraction(runs[0].prof));

    // Odd roots have a node at the origin.
    for (const Run& r : runs) CHECK(std::abs(r.prof.value(0)) < 1e-8);

    // Decaying states: Im k < 0 with outgoing tails that grow across the
    // window, the signature used to classify the decay direction.
    CHECK(runs[1].k.imag() < 0.0);
    CHECK(runs[1].prof.growing_tails());
}

TEST_CASE("reconstruction: even roots are symmetric about the origin") {
    const ResonanceSummary s =
        summarize_resonance(3, kFig4Wg, 6.0, 1.0, kFig4D, Parity::even);
    REQUIRE(s.converged);
    const WavefunctionProfile prof = reconstruct_wavefunction(
        s.k_newton, kFig4Wg, 6.0, 1.0, kFig4D, 4 * kFig4D);
    for (int j = 1; j <= kFig4D; ++j) {
        CHECK(std::abs(prof.value(j) - prof.value(-j)) < 1e-8);
    }
}

TEST_CASE("reconstruction rejects a wave number that is not a root") {
    CHECK_THROWS_AS((void)reconstruct_wavefunction(Complex(0.97, 0.0), kFig4Wg,
                                                   6.0, 1.0, kFig4D, 40),
                    InconsistentAmplitudesError);
}

TEST_CASE("the two amplitude routes: equality at roots, monotone mismatch near them") {
    const ResonanceSummary s =
        summarize_resonance(3, kFig4Wg, 6.0, 1.0, kFig4D, Parity::odd);
    REQUIRE(s.converged);
    const auto mismatch = [&](Complex k) {
        double m = 0.0;
        try {
            (void)reconstruct_wavefunction(k, kFig4Wg, 6.0, 1.0, kFig4D, 20,
                                           1e300);
            const Complex w = 2.0 * kI * kFig4Wg.xi * std::sin(k) *
                              (dispersion(k, kFig4Wg) - 6.0);
            const Complex e2ikd = std::exp(kI * (2.0 * 10.0 * k));
            m = std::abs(e2ikd / (w - 1.0) - (w - 1.0) / e2ikd);
        } catch (...) {
        }
        return m;
    };
    CHECK(mismatch(s.k_newton) < 1e-12);
    const Complex dir(1.0, 0.3);
    double prev = mismatch(s.k_newton);
    for (const double eps : {1e-6, 2e-6, 4e-6, 8e-6}) {
        const double cur = mismatch(s.k_newton + eps * dir);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("segment levels: hard-wall modes of the inter-mirror segment") {
    const WaveguideParams wg6{10.0, 2.0};
    // d = 1: a single interior site at the bare cavity energy.
    const auto one = segment_levels(1, wg6);
    REQUIRE(one.size() == 1);
    CHECK(one[0].second == doctest::Approx(wg6.omega).epsilon(1e-13));
    const auto oracle_one = oracle_diagonalize(1, wg6);
    CHECK(one[0].second == doctest::Approx(oracle_one[0]).epsilon(1e-13));

    // Levels are symmetric about omega (bipartite chain).
    for (const int d : {4, 8}) {
        const auto levels = segment_levels(d, wg6);
        REQUIRE(levels.size() == static_cast<std::size_t>(2 * d - 1));
        for (std::size_t i = 0; i < levels.size(); ++i) {
            const double mirror =
                levels[levels.size() - 1 - i].second - wg6.omega;
            CHECK(levels[i].second - wg6.omega ==
                  doctest::Approx(-mirror).epsilon(1e-12));
        }
        CHECK(levels.front().second > wg6.band_min());
        CHECK(levels.back().second < wg6.band_max());
    }
}

TEST_CASE("perturbative Q_3 reproduces the fig4 preset inputs") {
    // delta = 4 (Omega = 6): Q_3 must match the defining expression.
    const double q3 = 3.0 * kPi / 10.0;
    const double expect = (0.4 / 10.0) * (4.0 - 0.4 * std::cos(q3)) * std::sin(q3);
    CHECK(mode_qn(3, kFig4Wg, 6.0, 1.0, kFig4D, Parity::odd) ==
          doctest::Approx(expect).epsilon(1e-15));
}
