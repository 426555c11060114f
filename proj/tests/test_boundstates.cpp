#include <doctest.h>

#include <cmath>
#include <random>

#include "crw/boundstates.hpp"
#include "crw/core.hpp"
#include "crw/oracle.hpp"

using namespace crw;

TEST_CASE("kappa = 0 solves the edge condition for any parameters") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> uo(3.0, 12.0);
    std::uniform_real_distribution<double> ux(0.3, 2.0);
    std::uniform_real_distribution<double> uband(-0.9, 0.9);
    std::uniform_real_distribution<double> uj(0.2, 3.0);
    std::uniform_int_distribution<int> ud(1, 10);
    for (int i = 0; i < 50; ++i) {
        const WaveguideParams wg{uo(rng), ux(rng)};
        const double Omega = wg.omega + 2.0 * wg.xi * uband(rng);
        for (int n_edge = 0; n_edge <= 1; ++n_edge) {
            CHECK(std::abs(edge_condition_residual(0.0, n_edge, wg, Omega,
                                                   uj(rng), ud(rng))) < 1e-14);
        }
    }
}

TEST_CASE("edge energies sit at or beyond the band edges") {
    const WaveguideParams wg{5.0, 1.0};
    CHECK(edge_energy(0.0, 0, wg) == doctest::Approx(wg.band_min()));
    CHECK(edge_energy(0.0, 1, wg) == doctest::Approx(wg.band_max()));
    CHECK(edge_energy(1.3, 0, wg) < wg.band_min());
    CHECK(edge_energy(1.3, 1, wg) > wg.band_max());
}

TEST_CASE("large-kappa asymptote brackets nonzero roots") {
    // tanh(kappa d) -> 1 while the right side approaches a computable limit,
    // so a sign change inside (0, kappa_max] brackets each root; the finder
    // then returns states with tiny residuals.
    const WaveguideParams wg{5.0, 1.0};
    const double Omega = 5.0, J = 3.0;
    const int d = 3;
    const auto states = find_edge_bound_states(wg, Omega, J, d);
    int nonzero = 0;
    for (const EdgeBoundState& st : states) {
        if (st.edge_marker) continue;
        ++nonzero;
        CHECK(std::abs(edge_condition_residual(st.kappa, st.n_edge, wg, Omega,
                                               J, d)) < 1e-10);
        CHECK(st.kappa > 0.0);
        CHECK(std::abs(st.energy - wg.omega) >= 2.0 * wg.xi);
    }
    CHECK(nonzero >= 2);  // one per band edge at strong resonant coupling
}

TEST_CASE("no coupling leaves only the formal edge markers") {
    const WaveguideParams wg{5.0, 1.0};
    const auto states = find_edge_bound_states(wg, 5.3, 0.0, 4);
    REQUIRE(states.size() == 2);
    CHECK(states[0].edge_marker);
    CHECK(states[1].edge_marker);
    CHECK(states[0].kappa == 0.0);
    CHECK(states[1].kappa == 0.0);
}

TEST_CASE("strong resonant coupling approaches the dressed levels") {
    const WaveguideParams wg{10.0, 0.1};
    const int d = 4;
    for (const double J : {2.0, 8.0}) {
        const DressedPair dp = dressed_energies(wg.omega, wg.omega, J);
        const auto states = find_edge_bound_states(wg, wg.omega, J, d);
        double best_up = 1e9, best_dn = 1e9;
        for (const EdgeBoundState& st : states) {
            if (st.edge_marker) continue;
            best_up = std::min(best_up, std::abs(st.energy - dp.eps_plus));
            best_dn = std::min(best_dn, std::abs(st.energy - dp.eps_minus));
        }
        // Deviation is O(xi^2/J): 2 xi^2 / J plus margin.
        const double bound = 3.0 * wg.xi * wg.xi / J;
        CHECK(best_up < bound);
        CHECK(best_dn < bound);
    }
}

TEST_CASE("reconstructed states are odd and solve the lattice equation") {
    const WaveguideParams wg{5.0, 1.0};
    const double Omega = 5.4, J = 2.5;
    const int d = 2;
    const auto states = find_edge_bound_states(wg, Omega, J, d);
    bool checked = false;
    for (const EdgeBoundState& st : states) {
        const int L = st.edge_marker
                          ? 10 * d
                          : std::min(2000, d + static_cast<int>(10.0 / st.kappa));
        const auto u = edge_state_wavefunction(st, d, L);
        // Odd under j -> -j.
        for (int j = 1; j <= L; ++j) {
            CHECK(std::abs(u[static_cast<std::size_t>(L + j)] +
                           u[static_cast<std::size_t>(L - j)]) < 1e-12);
        }
        if (st.edge_marker) {
            // The kappa -> 0 limit profile solves the free lattice equation
            // away from the atom sites only.
            CHECK(edge_state_lattice_residual(st, wg, Omega, J, d, L, true) <
                  1e-10);
        } else {
            CHECK(edge_state_lattice_residual(st, wg, Omega, J, d, L) < 1e-8);
            checked = true;
        }
    }
    CHECK(checked);
}

TEST_CASE("nonzero-kappa energies match the diagonalization oracle") {
    const WaveguideParams wg{5.0, 1.0};
    const double Omega = 5.4, J = 2.5;
    const int d = 2;
    const auto states = find_edge_bound_states(wg, Omega, J, d);
    int matched = 0;
    for (const EdgeBoundState& st : states) {
        if (st.edge_marker || st.kappa < 0.1) continue;
        const int chain =
            2 * (d + static_cast<int>(std::ceil(10.0 / st.kappa))) + 1;
        const auto eig =
            oracle_diagonalize(chain, wg, AtomPair::identical_pair(Omega, J, d));
        double best = 1e9;
        for (const double e : eig) {
            if (e > wg.band_min() - 1e-12 && e < wg.band_max() + 1e-12) continue;
            best = std::min(best, std::abs(e - st.energy));
        }
        CHECK(best < 1e-6);
        ++matched;
    }
    CHECK(matched >= 1);
}
