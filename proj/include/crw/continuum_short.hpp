#pragma once

// Short-wavelength (linear-dispersion) effective theory near the band centre:
// E_k^S = omega_pi + 2 xi |k| with omega_pi = omega - pi xi and group velocity
// v_g = 2 xi.  The field splits into chiral right/left movers coupled by the
// atoms:
//
//     u_R(x) = 0 | e^{ikx} | t_R e^{ikx}      (x < -d | |x| < d | x > d)
//     u_L(x) = t_L e^{-ikx} | r_L e^{-ikx} | 0
//
// with r_L = J G_k^S e^{i2kd} / (2 i xi - J G_k^S), t_R = r_L e^{-i2kd} + 1 and
// t_L = r_L + e^{-i2kd}.  The parity condition is
// e^{2ikd} = +- 2 i xi / (J G_k^S) -+ 1.  All resonance work is done on the
// Re k > 0 branch, where |k| continues analytically to k.

#include <span>
#include <vector>

#include "crw/continuum_long.hpp"  // ContinuumProfile, uniform_grid
#include "crw/core.hpp"
#include "crw/resonance.hpp"       // Parity, SecondOrderForm
#include "crw/rootfind.hpp"

namespace crw {

struct ShortWaveAmplitudes {
    Complex r_l, t_r, t_l;
};

struct ShortProfiles {
    std::vector<double> x;
    std::vector<Complex> u_left;
    std::vector<Complex> u_right;
    std::vector<Complex> u_total;
};

// omega_pi + 2 xi k on the Re k > 0 branch.
Complex short_dispersion(Complex k, const WaveguideParams& wg);

// r_L closed form; throws PoleAtOmegaError at E_k^S = Omega.
Complex short_rL(Complex k, const WaveguideParams& wg, double Omega, double J,
                 int d);

// The two printed routes to r_L; they coincide exactly on the resonance
// manifold.  first = J G e^{i2kd}/(2 i xi - J G), second = (2 i xi - J G)
// e^{-i2kd}/(J G).
std::pair<Complex, Complex> short_rL_dual(Complex k, const WaveguideParams& wg,
                                          double Omega, double J, int d);

// r_L plus the integrated amplitude relations t_R, t_L.
ShortWaveAmplitudes short_amplitudes(Complex k, const WaveguideParams& wg,
                                     double Omega, double J, int d);

// Residual of e^{2ikd} = +- 2 i xi/(J G_k^S) -+ 1 (upper signs: even parity);
// entire in k.
Complex short_resonance_condition(Complex k, const WaveguideParams& wg,
                                  double Omega, double J, int d, Parity parity);

Complex short_resonance_derivative(Complex k, const WaveguideParams& wg,
                                   double Omega, double J, int d,
                                   Parity parity);

// Q_n^S = (lambda/d)(delta_pi + 2 xi q_n), q_n = n pi / d.
double short_qn(int n, const WaveguideParams& wg, double Omega, double J,
                int d);

// Second-order odd-parity wave number in P = 4 xi^2/(d J^2).  The alternate
// form keeps the transcribed first-order coefficient (J/2d) Q_n^S as well; the
// standard form uses the systematic expansion (see SecondOrderForm).
Complex short_perturbative_k(int n, const WaveguideParams& wg, double Omega,
                             double J, int d,
                             SecondOrderForm form = SecondOrderForm::standard);

// Transition energy at which the parity condition has an exact real root
// k = q_n: Omega = omega_pi + 2 xi q_n (odd, q_n = n pi/d) or
// Omega = omega_pi + 2 xi (n + 1/2) pi/d (even).
double short_bound_state_omega(int n, const WaveguideParams& wg, int d,
                               Parity parity);

// Newton root of the short-wavelength parity condition.
Complex short_newton(Complex k0, const WaveguideParams& wg, double Omega,
                     double J, int d, Parity parity,
                     const NewtonOptions& opts = {});

// Chiral profiles sampled on xgrid; u_total = u_L + u_R.
ShortProfiles short_profiles(Complex k, const WaveguideParams& wg, double Omega,
                             double J, int d, std::span<const double> xgrid);

}  // namespace crw
