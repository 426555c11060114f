#include "crw/boundstates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crw/rootfind.hpp"

namespace crw {

namespace {

constexpr double kKappaMax = 10.0;
constexpr int kScanCells = 10000;

double edge_phase(int n_edge) { return n_edge % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

double edge_energy(double kappa, int n_edge, const WaveguideParams& wg) {
    // omega - xi (e^{i n pi - kappa} + e^{-i n pi + kappa}) with e^{+-i n pi}
    // = (-1)^n collapses to omega - 2 xi (-1)^n cosh kappa.
    return wg.omega - 2.0 * wg.xi * edge_phase(n_edge) * std::cosh(kappa);
}

double edge_condition_residual(double kappa, int n_edge,
                               const WaveguideParams& wg, double Omega,
                               double J, int d) {
    const double phi = edge_phase(n_edge);
    const double e = edge_energy(kappa, n_edge, wg);
    const double g = green_factor(e, Omega, J);  // throws on the pole
    const double denom = e - wg.omega - J * g +
                         wg.xi * phi * (std::exp(-kappa) + std::cosh(kappa));
    return std::tanh(kappa * d) - wg.xi * phi * std::sinh(kappa) / denom;
}

std::vector<EdgeBoundState> find_edge_bound_states(const WaveguideParams& wg,
                                                   double Omega, double J,
                                                   int d) {
    std::vector<EdgeBoundState> out;
    for (int n_edge = 0; n_edge <= 1; ++n_edge) {
        EdgeBoundState marker;
        marker.kappa = 0.0;
        marker.n_edge = n_edge;
        marker.energy = edge_energy(0.0, n_edge, wg);
        marker.a = 1.0;
        marker.b = 1.0 / d;  // kappa -> 0 limit: u = (j/d) e^{i n pi j} inside
        marker.edge_marker = true;
        out.push_back(marker);

        if (J == 0.0) continue;  // no binding without coupling

        const auto residual = [&](double kappa) {
            return edge_condition_residual(kappa, n_edge, wg, Omega, J, d);
        };
        const double dk = kKappaMax / kScanCells;
        double prev_kappa = 0.5 * dk;
        double prev_val;
        try {
            prev_val = residual(prev_kappa);
        } catch (const PoleAtOmegaError&) {
            prev_val = std::numeric_limits<double>::quiet_NaN();
        }
        for (int cell = 1; cell < kScanCells; ++cell) {
            const double kappa = (cell + 0.5) * dk;
            double val;
            try {
                val = residual(kappa);
            } catch (const PoleAtOmegaError&) {
                prev_kappa = kappa;
                prev_val = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            if (std::isfinite(prev_val) && std::isfinite(val) &&
                (prev_val > 0.0) != (val > 0.0)) {
                const double root = bisect(residual, prev_kappa, kappa, 1e-14);
                // A sign change across a pole of the right-hand side is not a
                // root; keep only genuine zeros.
                if (std::abs(residual(root)) < 1e-10) {
                    EdgeBoundState st;
                    st.kappa = root;
                    st.n_edge = n_edge;
                    st.energy = edge_energy(root, n_edge, wg);
                    st.a = 1.0;
                    st.b = std::exp(-root * d) / std::sinh(root * d);
                    st.edge_marker = false;
                    out.push_back(st);
                }
            }
            prev_kappa = kappa;
            prev_val = val;
        }
    }
    return out;
}

std::vector<Complex> edge_state_wavefunction(const EdgeBoundState& state, int d,
                                             int half_window) {
    const int L = half_window;
    const double phi = edge_phase(state.n_edge);
    std::vector<Complex> u(static_cast<std::size_t>(2 * L + 1));
    const auto phase = [phi](int j) {
        // e^{i n pi j} = (-1)^{n j}
        return (phi < 0.0 && (j % 2 != 0)) ? -1.0 : 1.0;
    };
    for (int j = -L; j <= L; ++j) {
        double amp;
        if (state.edge_marker) {
            if (j < -d) {
                amp = -state.a;
            } else if (j > d) {
                amp = state.a;
            } else {
                amp = state.b * j;
            }
        } else {
            if (j < -d) {
                amp = -state.a * std::exp(state.kappa * j);
            } else if (j > d) {
                amp = state.a * std::exp(-state.kappa * j);
            } else {
                amp = state.b * std::sinh(state.kappa * j);
            }
        }
        u[static_cast<std::size_t>(j + L)] = amp * phase(j);
    }
    return u;
}

double edge_state_lattice_residual(const EdgeBoundState& state,
                                   const WaveguideParams& wg, double Omega,
                                   double J, int d, int half_window,
                                   bool skip_atom_sites) {
    const std::vector<Complex> u = edge_state_wavefunction(state, d, half_window);
    const int L = half_window;
    const double E = state.energy;
    const auto at = [&](int j) { return u[static_cast<std::size_t>(j + L)]; };
    double worst = 0.0;
    for (int j = -L + 1; j <= L - 1; ++j) {
        const bool atom = (j == d || j == -d);
        if (atom && skip_atom_sites) continue;
        Complex res = (E - wg.omega) * at(j) + wg.xi * (at(j + 1) + at(j - 1));
        if (atom) {
            const double g = green_factor(E, Omega, J);
            res -= J * g * at(j);
        }
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

}  // namespace crw
