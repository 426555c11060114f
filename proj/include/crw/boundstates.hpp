#pragma once

// Band-edge bound states.  The odd-parity ansatz carries a sinh profile
// between the atoms and exponential tails outside,
//
//     Psi(j) = -A e^{(i n pi + kappa) j}        j < -d
//            =  B e^{i n pi j} sinh(kappa j)    |j| <= d
//            =  A e^{(i n pi - kappa) j}        j > d
//
// with energy E_kappa = omega - xi (e^{i n pi - kappa} + e^{-i n pi + kappa}):
// for even n the state sits at/below the lower band edge, for odd n at/above
// the upper one.  Matching at j = d yields the transcendental condition
//
//     tanh(kappa d) = xi e^{-i n pi} sinh kappa /
//                     [E_kappa - omega - J G_kappa
//                      + xi (e^{i n pi - kappa} + e^{-i n pi} cosh kappa)]
//
// with G_kappa = J/(E_kappa - Omega).  kappa = 0 always solves it formally;
// those entries mark the band edges and are flagged, since the kappa -> 0
// limit profile satisfies the free lattice equation everywhere except at the
// atom sites.

#include <vector>

#include "crw/core.hpp"

namespace crw {

struct EdgeBoundState {
    double kappa = 0.0;  // decay rate >= 0
    int n_edge = 0;      // parity-phase index: 0 -> lower edge, 1 -> upper edge
    double energy = 0.0; // omega - 2 xi (-1)^n_edge cosh kappa
    double a = 1.0;      // tail amplitude (A = 1 convention)
    double b = 0.0;      // interior amplitude B solved from continuity
    bool edge_marker = false;  // true for the formal kappa = 0 solutions
};

// E_kappa for the given edge index.
double edge_energy(double kappa, int n_edge, const WaveguideParams& wg);

// tanh(kappa d) minus the right-hand side above.  Throws PoleAtOmegaError when
// E_kappa = Omega.
double edge_condition_residual(double kappa, int n_edge,
                               const WaveguideParams& wg, double Omega,
                               double J, int d);

// Bracket-scan kappa in (0, 10] for both edge indices (1e4 grid cells,
// bisection on sign changes, pole brackets discarded), then prepend the two
// kappa = 0 edge markers.
std::vector<EdgeBoundState> find_edge_bound_states(const WaveguideParams& wg,
                                                   double Omega, double J,
                                                   int d);

// Sampled ansatz wavefunction on [-L, L].  For the kappa = 0 markers the
// kappa -> 0 limit with A = 1 is returned: u = (j/d) e^{i n pi j} inside and
// +- e^{i n pi j} outside.
std::vector<Complex> edge_state_wavefunction(const EdgeBoundState& state, int d,
                                             int half_window);

// Max lattice-equation residual of the sampled state over [-L+1, L-1].
// skip_atom_sites leaves out j = +-d (used for the kappa = 0 markers).
double edge_state_lattice_residual(const EdgeBoundState& state,
                                   const WaveguideParams& wg, double Omega,
                                   double J, int d, int half_window,
                                   bool skip_atom_sites = false);

}  // namespace crw
