#pragma once

// Quasi-bound states of the super-cavity formed by two identical atoms at
// j = -+d, treated with outgoing-wave boundary conditions:
//
//     u(j) = C e^{-ikj}                j < -d
//          = A_b e^{ikj} + B_b e^{-ikj}  |j| <= d
//          = D e^{ikj}                 j > d
//
// Matching at both atom sites collapses to one transcendental parity condition
//
//     e^{i2kd} = +- (2 i xi sin k / (J G_k) - 1),      G_k = J/(E_k - Omega),
//
// with the plus sign for even parity and the minus sign for odd parity; E_k is
// continued analytically as omega - 2 xi cos k.  The residual is evaluated in
// the pole-free form 2 i xi sin k (E_k - Omega)/J^2, so it stays regular when
// a root sits exactly at E_k = Omega (the perfect-mirror points).
//
// Roots are found by Newton iteration with the analytic derivative, seeded by
// the second-order perturbative wave number in lambda = 2 xi / J^2; a
// rectangle scan plus argument-principle count (module oracle) backs up the
// seeding when lambda is large.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crw/core.hpp"
#include "crw/rootfind.hpp"

namespace crw {

enum class Parity { odd, even };

// Two closed forms for the O(lambda^2) term of the perturbative wave number.
//   standard:  systematic second-order expansion of the parity condition;
//              the remainder against the exact root is O(lambda^3).
//   alternate: variant with the quadratic-in-Q_n term entering the real part
//              and the cross term the imaginary part; kept for comparison,
//              its remainder is O(lambda^2).
// newton_resonance is the arbiter of which form tracks the exact root; the
// verification suite reports the measured convergence rate of both.
enum class SecondOrderForm { standard, alternate };

struct ResonantState {
    int n = 0;
    Parity parity = Parity::odd;
    Complex k;
    double qn = 0.0;  // n pi / d (odd) or (n + 1/2) pi / d (even)
    double Qn = 0.0;  // first-order magnitude (lambda/d)(delta - 2 xi cos qn) sin qn
    Complex b_b, c, dd;           // B_b/A_b, C/A_b, D/A_b with A_b = 1
    double lifetime_proxy = 0.0;  // Im k
};

// Sampled lattice wavefunction u(j), j in [-L, L], with A_b = 1.
struct WavefunctionProfile {
    int half_window = 0;  // L
    int d = 0;
    Complex k;
    std::vector<Complex> values;  // u(-L) .. u(L)

    enum class Region { left, inside, right };

    Complex value(int j) const { return values[static_cast<std::size_t>(j + half_window)]; }
    Region region_of(int j) const {
        if (j < -d) return Region::left;
        if (j > d) return Region::right;
        return Region::inside;
    }
    // True when |u| grows towards the window edges, the outgoing-wave
    // signature of a decaying resonance (Im k < 0).
    bool growing_tails() const;
    // Copy with values scaled so that max |u(j)| = 1 (for plotting).
    WavefunctionProfile max_normalized() const;
};

// q_n of the given parity: n pi / d (odd, 1 <= n <= d-1) or (n + 1/2) pi / d
// (even, 0 <= n <= d-1).  Throws IndexOutOfBandError outside those ranges.
double mode_wavenumber(int n, int d, Parity parity);

// First-order magnitude Q_n = (lambda/d)(delta - 2 xi cos q) sin q evaluated at
// q = mode_wavenumber(n, d, parity).
double mode_qn(int n, const WaveguideParams& wg, double Omega, double J, int d,
               Parity parity);

// Residual e^{i2kd} -+ (2 i xi sin k (E_k - Omega)/J^2 - 1); zero iff k is a
// resonance of the stated parity.  Entire in k (evaluated pole-free).
Complex parity_condition_residual(Complex k, const WaveguideParams& wg,
                                  double Omega, double J, int d, Parity parity);

// Same residual assembled through the Green factor G_k = J/(E_k - Omega).
// Used as an independent re-evaluation; throws PoleAtOmegaError at E_k = Omega.
Complex parity_condition_residual_via_green(Complex k,
                                            const WaveguideParams& wg,
                                            double Omega, double J, int d,
                                            Parity parity);

// Analytic k-derivative of parity_condition_residual.
Complex parity_condition_derivative(Complex k, const WaveguideParams& wg,
                                    double Omega, double J, int d,
                                    Parity parity);

// First-order real wave number k_re = q_n - Q_n / 2.
double perturbative_k_real(int n, const WaveguideParams& wg, double Omega,
                           double J, int d, Parity parity);

// Second-order complex wave number (see SecondOrderForm).
Complex perturbative_k_complex(int n, const WaveguideParams& wg, double Omega,
                               double J, int d, Parity parity,
                               SecondOrderForm form = SecondOrderForm::standard);

// Newton root of the parity condition from seed k0 (use the perturbative wave
// number).  Throws NoConvergenceError after opts.max_iterations.
Complex newton_resonance(Complex k0, const WaveguideParams& wg, double Omega,
                         double J, int d, Parity parity,
                         const NewtonOptions& opts = {});

// Root of branch n seeded at q_n itself instead of the perturbative estimate;
// the fallback path when lambda = 2 xi / J^2 is large and the expansion has
// broken down.  Returns nullopt when the iteration fails or leaves the branch
// (|Re k - q_n| > pi / 2d).
std::optional<Complex> branch_root(int n, const WaveguideParams& wg,
                                   double Omega, double J, int d,
                                   Parity parity);

// Transition energy Omega = omega - 2 xi cos(q_n / 2) at which the atoms are
// perfect mirrors and the resonance sits exactly at k = q_n / 2 with Im k = 0.
// Valid for 1 <= n <= 2d - 1; throws IndexOutOfBandError otherwise.
double perfect_cavity_omega(int n, const WaveguideParams& wg, int d);

// Parity of the perfect-cavity root k = n pi / (2d): even for odd n, odd for
// even n (the interior wave must vanish at the atom sites).
Parity perfect_cavity_parity(int n);

// Build u(j) on [-L, L] from the amplitude ratios at wave number k.  The two
// algebraic routes to B_b/A_b are compared first; a mismatch beyond
// route_tolerance signals that k is not a root (InconsistentAmplitudesError).
WavefunctionProfile reconstruct_wavefunction(Complex k,
                                             const WaveguideParams& wg,
                                             double Omega, double J, int d,
                                             int half_window,
                                             double route_tolerance = 1e-8);

// Hard-wall modes of the segment between the mirrors: k_m = m pi / (2d) and
// E_m = omega - 2 xi cos k_m for m = 1 .. 2d-1.  These are the energies at
// which the contour sweep of the transition energy shows bound-state ridges.
std::vector<std::pair<int, double>> segment_levels(int d,
                                                   const WaveguideParams& wg);

// Everything cmd_resonances reports for one (n, parity) mode.
struct ResonanceSummary {
    int n = 0;
    Parity parity = Parity::odd;
    double qn = 0.0;
    double Qn = 0.0;
    Complex k_perturbative;
    Complex k_newton;
    double residual_perturbative = 0.0;
    double residual_newton = 0.0;
    bool converged = false;
    std::string error;
};

// No-throw driver: perturbative seed, Newton polish, residual bookkeeping.
ResonanceSummary summarize_resonance(int n, const WaveguideParams& wg,
                                     double Omega, double J, int d,
                                     Parity parity);

// Full resonant state (root + amplitude ratios).  Throws on no convergence.
ResonantState solve_resonance(int n, const WaveguideParams& wg, double Omega,
                              double J, int d, Parity parity);

// Max |residual| of the lattice eigenvalue equation over the profile, checked
// at every interior site; at the atom sites the modified equation is used.
// When E_k == Omega within tol the atom-site check degenerates to |u(+-d)|,
// which the perfect-mirror limit forces to zero.
double lattice_equation_residual(const WavefunctionProfile& profile,
                                 const WaveguideParams& wg, double Omega,
                                 double J);

}  // namespace crw
