#pragma once

// Domain types and dispersion relations for a one-dimensional coupled-resonator
// waveguide (CRW) with two embedded two-level scatterers.
//
// The waveguide is a tight-binding chain of identical cavities with frequency
// omega and nearest-neighbour hopping xi, giving the cosine band
//
//     E_k = omega - 2 xi cos k,   k in [-pi, pi],  lattice constant = 1.
//
// Two atoms with transition energies Omega_1, Omega_2 sit in the cavities at
// j = -d and j = +d and couple to them with strengths J_1, J_2.  All energies
// are in a caller-chosen unit; the library is unit-agnostic.

#include <complex>

#include "crw/errors.hpp"

namespace crw {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// Cavity frequency and hopping of the waveguide.  The band is the closed
// interval [omega - 2 xi, omega + 2 xi]; xi must be positive.
struct WaveguideParams {
    double omega = 0.0;
    double xi = 1.0;

    double band_min() const { return omega - 2.0 * xi; }
    double band_max() const { return omega + 2.0 * xi; }
    bool in_band(double energy) const {
        return energy >= band_min() && energy <= band_max();
    }
};

// The two scatterers: transition energies Omega_l, couplings J_l >= 0, and
// half-separation d >= 1 (atoms at sites -d and +d).
struct AtomPair {
    double omega1 = 0.0;
    double omega2 = 0.0;
    double j1 = 0.0;
    double j2 = 0.0;
    int d = 1;

    bool identical() const { return omega1 == omega2 && j1 == j2; }
    static AtomPair identical_pair(double Omega, double J, int d) {
        return AtomPair{Omega, Omega, J, J, d};
    }
};

// Eigenenergies of the 2x2 atom-cavity coupling block at a mirror site.
struct DressedPair {
    double eps_plus = 0.0;
    double eps_minus = 0.0;
};

// Detunings and expansion parameters shared by the perturbative treatments.
// Each field is exactly its defining arithmetic expression.
struct DetuningSet {
    double delta = 0.0;     // omega - Omega
    double delta1 = 0.0;    // omega - Omega_1
    double delta2 = 0.0;    // omega - Omega_2
    double delta_ph = 0.0;  // E_k - Omega
    double delta_xi = 0.0;  // omega - 2 xi - Omega
    double delta_pi = 0.0;  // omega - pi xi - Omega
    double lambda = 0.0;    // 2 xi / J^2
    double p_short = 0.0;   // 4 xi^2 / (d J^2)
    double q_long = 0.0;    // 2 xi^2 / (J^2 d^3)

    // Identical atoms (Omega, J) at sites +-d probed at photon energy Ek.
    static DetuningSet make(const WaveguideParams& wg, double Omega, double J,
                            int d, double Ek);
};

// E_k = omega - 2 xi cos k.  Total on the real line; monotone in |k| on [0, pi].
double dispersion(double k, const WaveguideParams& wg);

// Analytic continuation of the band dispersion to complex wave numbers.
Complex dispersion(Complex k, const WaveguideParams& wg);

// Fold k onto the canonical interval [0, pi] using E_{-k} = E_k.
double canonical_k(double k);

// Inverse of the dispersion on [0, pi].  Throws OutOfBandError when
// |E - omega| > 2 xi.
double wavenumber_from_energy(double E, const WaveguideParams& wg);

// Dressed energies eps_{+-} = (omega + Omega)/2 +- sqrt((omega-Omega)^2/4 + J^2)
// of the resonant atom-cavity block [[omega, J], [J, Omega]].
DressedPair dressed_energies(double omega, double Omega, double J);

// Green factor G = J/(E - Omega); the effective delta-potential strength at a
// scatterer is J*G.  Throws PoleAtOmegaError at E == Omega.
double green_factor(double E, double Omega, double J);
Complex green_factor(Complex E, double Omega, double J);

// omega - Omega, the atom-cavity detuning delta_l.
inline double detuning(const WaveguideParams& wg, double Omega) {
    return wg.omega - Omega;
}

}  // namespace crw
