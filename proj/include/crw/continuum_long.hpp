#pragma once

// Long-wavelength (quadratic-dispersion) effective theory near the band
// bottom: E_k^L = omega_xi + xi k^2 with omega_xi = omega - 2 xi.  The photon
// obeys a continuum Schroedinger equation with two energy-dependent delta
// potentials of strength J G_k^L, G_k^L = J/(E_k^L - Omega), and the
// resonant-state ansatz carries unit amplitude inside the cavity region:
//
//     u(x) = S1 e^{-ikx}            x < -d
//          = e^{ikx} + B_L e^{-ikx}  |x| < d
//          = S2 e^{ikx}              x > d
//
// The parity condition reads e^{i2kd} = +- 2 i xi k (E_k^L - Omega)/J^2 -+ 1.

#include <span>
#include <vector>

#include "crw/core.hpp"
#include "crw/resonance.hpp"  // Parity, SecondOrderForm
#include "crw/rootfind.hpp"

namespace crw {

// Closed-form ansatz coefficients, kept exactly as stated:
//   S1  = [k xi e^{-i2kd} + J G sin 2kd] / (2 k xi + i J G)
//   S2  = k xi / (2 k xi + i J G)
//   B_L = J G e^{i2kd} / (2 i k xi - J G)
// These S1, S2 are half the outside amplitudes of the continuous profile;
// long_profile derives its outside amplitudes from continuity instead (see
// LongWaveProfileAmplitudes).
struct LongWaveCoefficients {
    Complex s1, s2, b_l;
};

// Outside amplitudes that make the piecewise ansatz continuous at x = -+d:
//   right = 1 + B_L e^{-i2kd},  left = e^{-i2kd} + B_L.
struct LongWaveProfileAmplitudes {
    Complex b_l, left, right;
};

struct ContinuumProfile {
    std::vector<double> x;
    std::vector<Complex> u;
};

// omega_xi + xi k^2.
Complex long_dispersion(Complex k, const WaveguideParams& wg);

// Stated closed forms; throws PoleAtOmegaError at E_k^L = Omega.
LongWaveCoefficients long_coefficients(Complex k, const WaveguideParams& wg,
                                       double Omega, double J, int d);

// Pole-free continuity-derived amplitudes used to build profiles.
LongWaveProfileAmplitudes long_profile_amplitudes(Complex k,
                                                  const WaveguideParams& wg,
                                                  double Omega, double J,
                                                  int d);

// Residual of e^{i2kd} = +- 2 i xi k (E_k^L - Omega)/J^2 -+ 1 (upper signs:
// even parity); zero iff k is a resonance.  Entire in k.
Complex long_resonance_condition(Complex k, const WaveguideParams& wg,
                                 double Omega, double J, int d, Parity parity);

Complex long_resonance_derivative(Complex k, const WaveguideParams& wg,
                                  double Omega, double J, int d, Parity parity);

// Q_n^L = (lambda q_n / d)(omega - 2 xi - Omega + xi q_n^2), q_n = n pi / d.
double long_qn(int n, const WaveguideParams& wg, double Omega, double J, int d);

// Second-order odd-parity wave number in the small parameter
// Q = 2 xi^2/(J^2 d^3); see SecondOrderForm for the two closed forms.
Complex long_perturbative_k(int n, const WaveguideParams& wg, double Omega,
                            double J, int d,
                            SecondOrderForm form = SecondOrderForm::standard);

// Newton root of the long-wavelength parity condition.
Complex long_newton(Complex k0, const WaveguideParams& wg, double Omega,
                    double J, int d, Parity parity,
                    const NewtonOptions& opts = {});

// Evaluate the continuous piecewise ansatz at one point.
Complex long_profile_at(double x, Complex k, const LongWaveProfileAmplitudes& amp,
                        int d);

// Sample the profile on xgrid (default grids span [-4d, 4d]).
ContinuumProfile long_profile(Complex k, const WaveguideParams& wg,
                              double Omega, double J, int d,
                              std::span<const double> xgrid);

// Uniform n-point grid over [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace crw
