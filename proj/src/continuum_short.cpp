#include "crw/continuum_short.hpp"

#include <cmath>
#include <numbers>

namespace crw {

namespace {

double parity_sign(Parity p) { return p == Parity::even ? 1.0 : -1.0; }

// w_S(k) = 2 i xi (E_k^S - Omega)/J^2 = i lambda (delta_pi + 2 xi k), the
// pole-free form of 2 i xi / (J G_k^S).
Complex w_short(Complex k, const WaveguideParams& wg, double Omega, double J) {
    const Complex Ek = short_dispersion(k, wg);
    return 2.0 * kI * wg.xi * (Ek - Omega) / (J * J);
}

}  // namespace

Complex short_dispersion(Complex k, const WaveguideParams& wg) {
    return wg.omega - std::numbers::pi * wg.xi + 2.0 * wg.xi * k;
}

Complex short_rL(Complex k, const WaveguideParams& wg, double Omega, double J,
                 int d) {
    if (J == 0.0) return 0.0;  // decoupled atoms reflect nothing
    const Complex Ek = short_dispersion(k, wg);
    green_factor(Ek, Omega, J);  // pole check
    const Complex w = w_short(k, wg, Omega, J);
    const Complex e2ikd = std::exp(kI * (2.0 * static_cast<double>(d) * k));
    // J G e^{i2kd} / (2 i xi - J G) = e^{i2kd} / (w - 1).
    return e2ikd / (w - 1.0);
}

std::pair<Complex, Complex> short_rL_dual(Complex k, const WaveguideParams& wg,
                                          double Omega, double J, int d) {
    const Complex w = w_short(k, wg, Omega, J);
    const Complex e2ikd = std::exp(kI * (2.0 * static_cast<double>(d) * k));
    return {e2ikd / (w - 1.0), (w - 1.0) / e2ikd};
}

ShortWaveAmplitudes short_amplitudes(Complex k, const WaveguideParams& wg,
                                     double Omega, double J, int d) {
    const Complex r_l = short_rL(k, wg, Omega, J, d);
    const Complex e2ikd = std::exp(kI * (2.0 * static_cast<double>(d) * k));
    ShortWaveAmplitudes out;
    out.r_l = r_l;
    out.t_r = r_l / e2ikd + 1.0;
    out.t_l = r_l + 1.0 / e2ikd;
    return out;
}

Complex short_resonance_condition(Complex k, const WaveguideParams& wg,
                                  double Omega, double J, int d,
                                  Parity parity) {
    const double s = parity_sign(parity);
    return std::exp(kI * (2.0 * static_cast<double>(d) * k)) -
           s * (w_short(k, wg, Omega, J) - 1.0);
}

Complex short_resonance_derivative(Complex k, const WaveguideParams& wg,
                                   double Omega, double J, int d,
                                   Parity parity) {
    (void)Omega;  // the linear dispersion has a constant k-derivative
    const double s = parity_sign(parity);
    const Complex grad = 4.0 * kI * wg.xi * wg.xi / (J * J);
    return 2.0 * kI * static_cast<double>(d) *
               std::exp(kI * (2.0 * static_cast<double>(d) * k)) -
           s * grad;
}

double short_qn(int n, const WaveguideParams& wg, double Omega, double J,
                int d) {
    const double q = mode_wavenumber(n, d, Parity::odd);
    const double lambda = 2.0 * wg.xi / (J * J);
    const double dpi = wg.omega - std::numbers::pi * wg.xi - Omega;
    return (lambda / d) * (dpi + 2.0 * wg.xi * q);
}

Complex short_perturbative_k(int n, const WaveguideParams& wg, double Omega,
                             double J, int d, SecondOrderForm form) {
    const double q = mode_wavenumber(n, d, Parity::odd);
    const double Qn = short_qn(n, wg, Omega, J, d);
    const double lambda = 2.0 * wg.xi / (J * J);
    if (form == SecondOrderForm::alternate) {
        return Complex(q - (J / (2.0 * d)) * Qn + d * Qn * Qn,
                       wg.xi * (lambda / d) * Qn);
    }
    // d/dk of (delta_pi + 2 xi k) = 2 xi, so the second-order real shift is
    // (lambda/4d) Qn (2 xi).
    return Complex(q - 0.5 * Qn + (lambda / (2.0 * d)) * wg.xi * Qn,
                   -0.25 * d * Qn * Qn);
}

double short_bound_state_omega(int n, const WaveguideParams& wg, int d,
                               Parity parity) {
    const double q = mode_wavenumber(n, d, parity);
    return wg.omega - std::numbers::pi * wg.xi + 2.0 * wg.xi * q;
}

Complex short_newton(Complex k0, const WaveguideParams& wg, double Omega,
                     double J, int d, Parity parity,
                     const NewtonOptions& opts) {
    const auto f = [&](Complex k) {
        return short_resonance_condition(k, wg, Omega, J, d, parity);
    };
    const auto df = [&](Complex k) {
        return short_resonance_derivative(k, wg, Omega, J, d, parity);
    };
    return newton_complex(f, df, k0, opts).root;
}

ShortProfiles short_profiles(Complex k, const WaveguideParams& wg, double Omega,
                             double J, int d, std::span<const double> xgrid) {
    const ShortWaveAmplitudes amp = short_amplitudes(k, wg, Omega, J, d);
    ShortProfiles out;
    out.x.assign(xgrid.begin(), xgrid.end());
    out.u_left.resize(out.x.size());
    out.u_right.resize(out.x.size());
    out.u_total.resize(out.x.size());
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        const double x = out.x[i];
        const Complex eikx = std::exp(kI * (k * x));
        Complex ur, ul;
        if (x < -d) {
            ur = 0.0;
            ul = amp.t_l / eikx;
        } else if (x > d) {
            ur = amp.t_r * eikx;
            ul = 0.0;
        } else {
            ur = eikx;
            ul = amp.r_l / eikx;
        }
        out.u_right[i] = ur;
        out.u_left[i] = ul;
        out.u_total[i] = ur + ul;
    }
    return out;
}

}  // namespace crw
