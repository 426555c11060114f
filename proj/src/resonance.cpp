#include "crw/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace crw {

namespace {

constexpr double kPi = std::numbers::pi;

double parity_sign(Parity p) { return p == Parity::even ? 1.0 : -1.0; }

// W(k) = 2 i xi sin k (E_k - Omega) / J^2 = i lambda sin k (delta - 2 xi cos k).
// This is 2 i xi sin k / (J G_k) written without the Green-factor pole.
Complex w_factor(Complex k, const WaveguideParams& wg, double Omega, double J) {
    const Complex Ek = dispersion(k, wg);
    return 2.0 * kI * wg.xi * std::sin(k) * (Ek - Omega) / (J * J);
}

Complex w_derivative(Complex k, const WaveguideParams& wg, double Omega,
                     double J) {
    const Complex Ek = dispersion(k, wg);
    const Complex s = std::sin(k);
    const Complex c = std::cos(k);
    return 2.0 * kI * wg.xi * (c * (Ek - Omega) + 2.0 * wg.xi * s * s) / (J * J);
}

}  // namespace

double mode_wavenumber(int n, int d, Parity parity) {
    if (parity == Parity::odd) {
        if (n < 1 || n > d - 1) {
            throw IndexOutOfBandError(
                "odd-parity mode index must satisfy 1 <= n <= d-1");
        }
        return n * kPi / d;
    }
    if (n < 0 || n > d - 1) {
        throw IndexOutOfBandError(
            "even-parity mode index must satisfy 0 <= n <= d-1");
    }
    return (n + 0.5) * kPi / d;
}

double mode_qn(int n, const WaveguideParams& wg, double Omega, double J, int d,
               Parity parity) {
    const double q = mode_wavenumber(n, d, parity);
    const double lambda = 2.0 * wg.xi / (J * J);
    const double delta = wg.omega - Omega;
    return (lambda / d) * (delta - 2.0 * wg.xi * std::cos(q)) * std::sin(q);
}

Complex parity_condition_residual(Complex k, const WaveguideParams& wg,
                                  double Omega, double J, int d,
                                  Parity parity) {
    const double s = parity_sign(parity);
    return std::exp(kI * (2.0 * static_cast<double>(d) * k)) -
           s * (w_factor(k, wg, Omega, J) - 1.0);
}

Complex parity_condition_residual_via_green(Complex k,
                                            const WaveguideParams& wg,
                                            double Omega, double J, int d,
                                            Parity parity) {
    const Complex Ek = dispersion(k, wg);
    const Complex g = green_factor(Ek, Omega, J);  // throws on the pole
    const double s = parity_sign(parity);
    return std::exp(kI * (2.0 * static_cast<double>(d) * k)) -
           s * (2.0 * kI * wg.xi * std::sin(k) / (J * g) - 1.0);
}

Complex parity_condition_derivative(Complex k, const WaveguideParams& wg,
                                    double Omega, double J, int d,
                                    Parity parity) {
    const double s = parity_sign(parity);
    return 2.0 * kI * static_cast<double>(d) *
               std::exp(kI * (2.0 * static_cast<double>(d) * k)) -
           s * w_derivative(k, wg, Omega, J);
}

double perturbative_k_real(int n, const WaveguideParams& wg, double Omega,
                           double J, int d, Parity parity) {
    const double q = mode_wavenumber(n, d, parity);
    return q - 0.5 * mode_qn(n, wg, Omega, J, d, parity);
}

Complex perturbative_k_complex(int n, const WaveguideParams& wg, double Omega,
                               double J, int d, Parity parity,
                               SecondOrderForm form) {
    const double q = mode_wavenumber(n, d, parity);
    const double Qn = mode_qn(n, wg, Omega, J, d, parity);
    const double lambda = 2.0 * wg.xi / (J * J);
    const double delta = wg.omega - Omega;
    // d/dk of sin k (delta - 2 xi cos k) at q:
    const double grad =
        delta * std::cos(q) - 2.0 * wg.xi * std::cos(2.0 * q);
    if (form == SecondOrderForm::alternate) {
        return Complex(q - 0.5 * Qn + d * Qn * Qn,
                       (lambda / (2.0 * d)) * Qn * grad);
    }
    return Complex(q - 0.5 * Qn + (lambda / (4.0 * d)) * Qn * grad,
                   -0.25 * d * Qn * Qn);
}

Complex newton_resonance(Complex k0, const WaveguideParams& wg, double Omega,
                         double J, int d, Parity parity,
                         const NewtonOptions& opts) {
    const auto f = [&](Complex k) {
        return parity_condition_residual(k, wg, Omega, J, d, parity);
    };
    const auto df = [&](Complex k) {
        return parity_condition_derivative(k, wg, Omega, J, d, parity);
    };
    return newton_complex(f, df, k0, opts).root;
}

std::optional<Complex> branch_root(int n, const WaveguideParams& wg,
                                   double Omega, double J, int d,
                                   Parity parity) {
    const double q = mode_wavenumber(n, d, parity);
    NewtonOptions opts;
    opts.max_iterations = 150;
    opts.max_step = 0.3;
    try {
        const Complex k = newton_resonance(Complex(q, -0.02), wg, Omega, J, d,
                                           parity, opts);
        if (std::abs(k.real() - q) > kPi / (2.0 * d)) return std::nullopt;
        return k;
    } catch (const NoConvergenceError&) {
        return std::nullopt;
    }
}

double perfect_cavity_omega(int n, const WaveguideParams& wg, int d) {
    if (n < 1 || n > 2 * d - 1) {
        throw IndexOutOfBandError(
            "perfect-cavity index must satisfy 1 <= n <= 2d-1");
    }
    const double half_q = n * kPi / (2.0 * d);
    return wg.omega - 2.0 * wg.xi * std::cos(half_q);
}

Parity perfect_cavity_parity(int n) {
    return n % 2 == 0 ? Parity::odd : Parity::even;
}

bool WavefunctionProfile::growing_tails() const {
    if (half_window <= d + 1) return false;
    return std::abs(value(half_window)) > std::abs(value(d + 1));
}

WavefunctionProfile WavefunctionProfile::max_normalized() const {
    WavefunctionProfile out = *this;
    double peak = 0.0;
    for (const Complex& v : out.values) peak = std::max(peak, std::abs(v));
    if (peak > 0.0) {
        for (Complex& v : out.values) v /= peak;
    }
    return out;
}

WavefunctionProfile reconstruct_wavefunction(Complex k,
                                             const WaveguideParams& wg,
                                             double Omega, double J, int d,
                                             int half_window,
                                             double route_tolerance) {
    if (half_window < d + 1) {
        throw Error("reconstruct_wavefunction: window must extend past the atoms");
    }
    const Complex w = w_factor(k, wg, Omega, J);
    const Complex e2ikd = std::exp(kI * (2.0 * static_cast<double>(d) * k));
    // Route 1 comes from matching at +d, route 2 from matching at -d; they
    // agree exactly on the resonance manifold.
    const Complex bb_plus = e2ikd / (w - 1.0);
    const Complex bb_minus = (w - 1.0) / e2ikd;
    const double mismatch =
        std::abs(bb_plus - bb_minus) / std::max(1.0, std::abs(bb_plus));
    if (mismatch > route_tolerance) {
        throw InconsistentAmplitudesError(
            "reconstruct_wavefunction: the two routes to B_b/A_b disagree; "
            "k is not a resonance root",
            mismatch);
    }
    const Complex bb = bb_plus;
    const Complex c = w / e2ikd;          // C/A_b, from matching at -d
    const Complex dd = w / (w - 1.0);     // D/A_b, from matching at +d

    WavefunctionProfile out;
    out.half_window = half_window;
    out.d = d;
    out.k = k;
    out.values.resize(static_cast<std::size_t>(2 * half_window + 1));
    for (int j = -half_window; j <= half_window; ++j) {
        Complex u;
        const Complex eikj = std::exp(kI * (k * static_cast<double>(j)));
        if (j < -d) {
            u = c / eikj;
        } else if (j > d) {
            u = dd * eikj;
        } else {
            u = eikj + bb / eikj;
        }
        out.values[static_cast<std::size_t>(j + half_window)] = u;
    }
    return out;
}

std::vector<std::pair<int, double>> segment_levels(int d,
                                                   const WaveguideParams& wg) {
    if (d < 1) throw Error("segment_levels: d must be >= 1");
    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<std::size_t>(2 * d - 1));
    for (int m = 1; m <= 2 * d - 1; ++m) {
        const double km = m * kPi / (2.0 * d);
        out.emplace_back(m, wg.omega - 2.0 * wg.xi * std::cos(km));
    }
    return out;
}

ResonanceSummary summarize_resonance(int n, const WaveguideParams& wg,
                                     double Omega, double J, int d,
                                     Parity parity) {
    ResonanceSummary s;
    s.n = n;
    s.parity = parity;
    s.qn = mode_wavenumber(n, d, parity);
    s.Qn = mode_qn(n, wg, Omega, J, d, parity);
    s.k_perturbative = perturbative_k_complex(n, wg, Omega, J, d, parity);
    s.residual_perturbative = std::abs(
        parity_condition_residual(s.k_perturbative, wg, Omega, J, d, parity));
    try {
        s.k_newton = newton_resonance(s.k_perturbative, wg, Omega, J, d, parity);
        s.residual_newton = std::abs(
            parity_condition_residual(s.k_newton, wg, Omega, J, d, parity));
        s.converged = true;
    } catch (const NoConvergenceError& e) {
        s.k_newton = e.last_iterate;
        s.residual_newton = e.final_residual;
        s.converged = false;
        s.error = e.what();
    }
    return s;
}

ResonantState solve_resonance(int n, const WaveguideParams& wg, double Omega,
                              double J, int d, Parity parity) {
    const Complex seed = perturbative_k_complex(n, wg, Omega, J, d, parity);
    const Complex k = newton_resonance(seed, wg, Omega, J, d, parity);
    const Complex w = w_factor(k, wg, Omega, J);
    const Complex e2ikd = std::exp(kI * (2.0 * static_cast<double>(d) * k));
    ResonantState st;
    st.n = n;
    st.parity = parity;
    st.k = k;
    st.qn = mode_wavenumber(n, d, parity);
    st.Qn = mode_qn(n, wg, Omega, J, d, parity);
    st.b_b = e2ikd / (w - 1.0);
    st.c = w / e2ikd;
    st.dd = w / (w - 1.0);
    st.lifetime_proxy = k.imag();
    return st;
}

double lattice_equation_residual(const WavefunctionProfile& profile,
                                 const WaveguideParams& wg, double Omega,
                                 double J) {
    const Complex Ek = dispersion(profile.k, wg);
    const int L = profile.half_window;
    const int d = profile.d;
    const double pole_tol = 1e-9 * std::max(wg.xi, J);
    double worst = 0.0;
    for (int j = -L + 1; j <= L - 1; ++j) {
        const Complex u = profile.value(j);
        const Complex hop =
            wg.xi * (profile.value(j + 1) + profile.value(j - 1));
        Complex res;
        if (j == d || j == -d) {
            if (std::abs(Ek - Complex(Omega, 0.0)) < pole_tol) {
                // Perfect-mirror limit: the modified equation forces u(+-d)=0.
                res = u;
            } else {
                const Complex v = J * J / (Ek - Omega);
                res = (Ek - wg.omega - v) * u + hop;
            }
        } else {
            res = (Ek - wg.omega) * u + hop;
        }
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

}  // namespace crw
