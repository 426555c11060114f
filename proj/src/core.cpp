#include "crw/core.hpp"

#include <cmath>
#include <numbers>

namespace crw {

double dispersion(double k, const WaveguideParams& wg) {
    return wg.omega - 2.0 * wg.xi * std::cos(k);
}

Complex dispersion(Complex k, const WaveguideParams& wg) {
    return wg.omega - 2.0 * wg.xi * std::cos(k);
}

double canonical_k(double k) {
    double folded = std::abs(k);
    // Fold |k| into [0, pi] by periodicity and the mirror symmetry of cos.
    folded = std::fmod(folded, 2.0 * std::numbers::pi);
    if (folded > std::numbers::pi) folded = 2.0 * std::numbers::pi - folded;
    return folded;
}

double wavenumber_from_energy(double E, const WaveguideParams& wg) {
    const double x = (wg.omega - E) / (2.0 * wg.xi);
    if (std::abs(x) > 1.0 + 1e-14) {
        throw OutOfBandError("energy outside the band [omega-2xi, omega+2xi]");
    }
    return std::acos(std::clamp(x, -1.0, 1.0));
}

DressedPair dressed_energies(double omega, double Omega, double J) {
    const double sum = omega + Omega;
    const double diff = omega - Omega;
    const double root = std::sqrt(diff * diff + 4.0 * J * J);
    return DressedPair{0.5 * (sum + root), 0.5 * (sum - root)};
}

double green_factor(double E, double Omega, double J) {
    if (E == Omega) {
        throw PoleAtOmegaError("Green factor evaluated at its pole E == Omega");
    }
    return J / (E - Omega);
}

Complex green_factor(Complex E, double Omega, double J) {
    if (E == Complex(Omega, 0.0)) {
        throw PoleAtOmegaError("Green factor evaluated at its pole E == Omega");
    }
    return J / (E - Omega);
}

DetuningSet DetuningSet::make(const WaveguideParams& wg, double Omega, double J,
                              int d, double Ek) {
    DetuningSet out;
    out.delta = wg.omega - Omega;
    out.delta1 = out.delta;
    out.delta2 = out.delta;
    out.delta_ph = Ek - Omega;
    out.delta_xi = wg.omega - 2.0 * wg.xi - Omega;
    out.delta_pi = wg.omega - std::numbers::pi * wg.xi - Omega;
    out.lambda = 2.0 * wg.xi / (J * J);
    out.p_short = 4.0 * wg.xi * wg.xi / (d * J * J);
    out.q_long = 2.0 * wg.xi * wg.xi / (J * J * d * d * d);
    return out;
}

}  // namespace crw
