#include "crw/continuum_long.hpp"

#include <cmath>

namespace crw {

namespace {

double parity_sign(Parity p) { return p == Parity::even ? 1.0 : -1.0; }

// w_L(k) = 2 i xi k (E_k^L - Omega) / J^2, the pole-free form of
// 2 i k xi / (J G_k^L).
Complex w_long(Complex k, const WaveguideParams& wg, double Omega, double J) {
    const Complex Ek = long_dispersion(k, wg);
    return 2.0 * kI * wg.xi * k * (Ek - Omega) / (J * J);
}

}  // namespace

Complex long_dispersion(Complex k, const WaveguideParams& wg) {
    return wg.omega - 2.0 * wg.xi + wg.xi * k * k;
}

LongWaveCoefficients long_coefficients(Complex k, const WaveguideParams& wg,
                                       double Omega, double J, int d) {
    const Complex Ek = long_dispersion(k, wg);
    const Complex g = green_factor(Ek, Omega, J);  // throws on the pole
    const Complex jg = J * g;
    const Complex e2ikd = std::exp(kI * (2.0 * static_cast<double>(d) * k));
    const Complex sin2kd = std::sin(2.0 * static_cast<double>(d) * k);
    LongWaveCoefficients out;
    out.s1 = (k * wg.xi / e2ikd + jg * sin2kd) / (2.0 * k * wg.xi + kI * jg);
    out.s2 = k * wg.xi / (2.0 * k * wg.xi + kI * jg);
    out.b_l = jg * e2ikd / (2.0 * kI * k * wg.xi - jg);
    return out;
}

LongWaveProfileAmplitudes long_profile_amplitudes(Complex k,
                                                  const WaveguideParams& wg,
                                                  double Omega, double J,
                                                  int d) {
    const Complex w = w_long(k, wg, Omega, J);
    const Complex e2ikd = std::exp(kI * (2.0 * static_cast<double>(d) * k));
    LongWaveProfileAmplitudes out;
    // B_L = J G e^{i2kd} / (2 i k xi - J G) = e^{i2kd} / (w - 1), pole-free.
    out.b_l = e2ikd / (w - 1.0);
    out.right = 1.0 + out.b_l / e2ikd;
    out.left = 1.0 / e2ikd + out.b_l;
    return out;
}

Complex long_resonance_condition(Complex k, const WaveguideParams& wg,
                                 double Omega, double J, int d, Parity parity) {
    const double s = parity_sign(parity);
    return std::exp(kI * (2.0 * static_cast<double>(d) * k)) -
           s * (w_long(k, wg, Omega, J) - 1.0);
}

Complex long_resonance_derivative(Complex k, const WaveguideParams& wg,
                                  double Omega, double J, int d,
                                  Parity parity) {
    const double s = parity_sign(parity);
    const double dxi = wg.omega - 2.0 * wg.xi - Omega;  // delta_xi
    // d/dk of k (delta_xi + xi k^2) = delta_xi + 3 xi k^2.
    const Complex grad =
        2.0 * kI * wg.xi * (dxi + 3.0 * wg.xi * k * k) / (J * J);
    return 2.0 * kI * static_cast<double>(d) *
               std::exp(kI * (2.0 * static_cast<double>(d) * k)) -
           s * grad;
}

double long_qn(int n, const WaveguideParams& wg, double Omega, double J,
               int d) {
    const double q = mode_wavenumber(n, d, Parity::odd);
    const double lambda = 2.0 * wg.xi / (J * J);
    const double dxi = wg.omega - 2.0 * wg.xi - Omega;
    return (lambda * q / d) * (dxi + wg.xi * q * q);
}

Complex long_perturbative_k(int n, const WaveguideParams& wg, double Omega,
                            double J, int d, SecondOrderForm form) {
    const double q = mode_wavenumber(n, d, Parity::odd);
    const double Qn = long_qn(n, wg, Omega, J, d);
    const double lambda = 2.0 * wg.xi / (J * J);
    const double dxi = wg.omega - 2.0 * wg.xi - Omega;
    const double grad = dxi + 3.0 * wg.xi * q * q;
    if (form == SecondOrderForm::alternate) {
        return Complex(q - 0.5 * Qn + d * Qn * Qn,
                       (lambda / (2.0 * d)) * Qn * grad);
    }
    return Complex(q - 0.5 * Qn + (lambda / (4.0 * d)) * Qn * grad,
                   -0.25 * d * Qn * Qn);
}

Complex long_newton(Complex k0, const WaveguideParams& wg, double Omega,
                    double J, int d, Parity parity, const NewtonOptions& opts) {
    const auto f = [&](Complex k) {
        return long_resonance_condition(k, wg, Omega, J, d, parity);
    };
    const auto df = [&](Complex k) {
        return long_resonance_derivative(k, wg, Omega, J, d, parity);
    };
    return newton_complex(f, df, k0, opts).root;
}

Complex long_profile_at(double x, Complex k,
                        const LongWaveProfileAmplitudes& amp, int d) {
    const Complex eikx = std::exp(kI * (k * x));
    if (x < -d) return amp.left / eikx;
    if (x > d) return amp.right * eikx;
    return eikx + amp.b_l / eikx;
}

ContinuumProfile long_profile(Complex k, const WaveguideParams& wg,
                              double Omega, double J, int d,
                              std::span<const double> xgrid) {
    const LongWaveProfileAmplitudes amp =
        long_profile_amplitudes(k, wg, Omega, J, d);
    ContinuumProfile out;
    out.x.assign(xgrid.begin(), xgrid.end());
    out.u.resize(out.x.size());
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        out.u[i] = long_profile_at(out.x[i], k, amp, d);
    }
    return out;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 2) throw Error("uniform_grid: need at least two points");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return g;
}

}  // namespace crw
