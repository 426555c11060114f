#include "crw/scattering.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "crw/parallel.hpp"

namespace crw {

namespace {

constexpr double kBandEdgeSin = 1e-6;

Complex ph(double k, double x) { return std::exp(kI * (k * x)); }

bool near_pole(double E, double Omega, double tol, double j_coupling) {
    return j_coupling > 0.0 && std::abs(E - Omega) < tol;
}

// Exact scattering limit when one or both atoms sit exactly on resonance with
// the photon: the resonant atom acts as a hard mirror with u at its site
// pinned to zero.
ScatteringSolution resonant_limit(double k, const WaveguideParams& wg,
                                  const AtomPair& atoms, bool left_resonant,
                                  bool right_resonant) {
    const double d = atoms.d;
    ScatteringSolution sol;
    sol.k = k;
    sol.flag = PointFlag::resonant_atom;
    sol.t = 0.0;
    const double E = dispersion(k, wg);
    const double inf = std::numeric_limits<double>::infinity();
    sol.greens[0] = left_resonant ? Complex(inf, 0)
                                  : Complex(atoms.j1 / (E - atoms.omega1), 0);
    sol.greens[1] = right_resonant ? Complex(inf, 0)
                                   : Complex(atoms.j2 / (E - atoms.omega2), 0);
    if (left_resonant) {
        // Mirror at -d: nothing enters the middle region.
        sol.r = -ph(k, -2.0 * d);
        sol.a = 0.0;
        sol.b = 0.0;
        return sol;
    }
    // Mirror at +d only: solve for (r, A, B) with u(d) = 0 and t = 0.
    //   continuity at -d, lattice equation at -d, and A e^{ikd} + B e^{-ikd} = 0.
    const double v1 =
        atoms.j1 == 0.0 ? 0.0 : atoms.j1 * atoms.j1 / (E - atoms.omega1);
    Eigen::Matrix3cd m;
    Eigen::Vector3cd rhs;
    // unknowns x = (r, A, B)
    m(0, 0) = ph(k, d);
    m(0, 1) = -ph(k, -d);
    m(0, 2) = -ph(k, d);
    rhs(0) = -ph(k, -d);
    m(1, 0) = (E - wg.omega - v1) * ph(k, d) + wg.xi * ph(k, d + 1);
    m(1, 1) = wg.xi * ph(k, -(d - 1));
    m(1, 2) = wg.xi * ph(k, d - 1);
    rhs(1) = -(E - wg.omega - v1) * ph(k, -d) - wg.xi * ph(k, -(d + 1));
    m(2, 0) = 0.0;
    m(2, 1) = ph(k, d);
    m(2, 2) = ph(k, -d);
    rhs(2) = 0.0;
    const Eigen::Vector3cd x = m.fullPivLu().solve(rhs);
    sol.r = x(0);
    sol.a = x(1);
    sol.b = x(2);
    return sol;
}

}  // namespace

double resonance_tolerance(const WaveguideParams& wg, const AtomPair& atoms) {
    return 1e-9 * std::max({wg.xi, atoms.j1, atoms.j2});
}

ScatteringSolution solve_scattering(double k, const WaveguideParams& wg,
                                    const AtomPair& atoms) {
    const double E = dispersion(k, wg);
    const double tol = resonance_tolerance(wg, atoms);
    const bool res1 = near_pole(E, atoms.omega1, tol, atoms.j1);
    const bool res2 = near_pole(E, atoms.omega2, tol, atoms.j2);
    if (res1 || res2) {
        return resonant_limit(k, wg, atoms, res1, res2);
    }

    const double d = atoms.d;
    const double v1 =
        atoms.j1 == 0.0 ? 0.0 : atoms.j1 * atoms.j1 / (E - atoms.omega1);
    const double v2 =
        atoms.j2 == 0.0 ? 0.0 : atoms.j2 * atoms.j2 / (E - atoms.omega2);

    // Unknowns x = (r, A, B, t); continuity then lattice equations at -+d.
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    Eigen::Vector4cd rhs = Eigen::Vector4cd::Zero();

    m(0, 0) = ph(k, d);
    m(0, 1) = -ph(k, -d);
    m(0, 2) = -ph(k, d);
    rhs(0) = -ph(k, -d);

    m(1, 1) = ph(k, d);
    m(1, 2) = ph(k, -d);
    m(1, 3) = -ph(k, d);

    m(2, 0) = (E - wg.omega - v1) * ph(k, d) + wg.xi * ph(k, d + 1);
    m(2, 1) = wg.xi * ph(k, -(d - 1));
    m(2, 2) = wg.xi * ph(k, d - 1);
    rhs(2) = -(E - wg.omega - v1) * ph(k, -d) - wg.xi * ph(k, -(d + 1));

    m(3, 1) = wg.xi * ph(k, d - 1);
    m(3, 2) = wg.xi * ph(k, -(d - 1));
    m(3, 3) = (E - wg.omega - v2) * ph(k, d) + wg.xi * ph(k, d + 1);

    Eigen::FullPivLU<Eigen::Matrix4cd> lu(m);
    if (!lu.isInvertible()) {
        const double cond = std::abs(lu.maxPivot()) /
                            std::max(std::abs(lu.matrixLU()(3, 3)), 1e-300);
        throw SingularSystemError("solve_scattering: singular 4x4 system", cond);
    }
    const Eigen::Vector4cd x = lu.solve(rhs);

    ScatteringSolution sol;
    sol.k = k;
    sol.r = x(0);
    sol.a = x(1);
    sol.b = x(2);
    sol.t = x(3);
    sol.greens = {Complex(atoms.j1 / (E - atoms.omega1), 0.0),
                  Complex(atoms.j2 / (E - atoms.omega2), 0.0)};
    sol.flag = PointFlag::ok;
    return sol;
}

Complex transmission_closed_form(double k, const WaveguideParams& wg,
                                 const AtomPair& atoms) {
    const double E = dispersion(k, wg);
    const double tol = resonance_tolerance(wg, atoms);
    if (near_pole(E, atoms.omega1, tol, atoms.j1) ||
        near_pole(E, atoms.omega2, tol, atoms.j2)) {
        return 0.0;
    }
    const double s = std::sin(k);
    if (std::abs(s) < 1e-12) return 0.0;
    const double v1 =
        atoms.j1 == 0.0 ? 0.0 : atoms.j1 * atoms.j1 / (E - atoms.omega1);
    const double v2 =
        atoms.j2 == 0.0 ? 0.0 : atoms.j2 * atoms.j2 / (E - atoms.omega2);
    const Complex phase = std::exp(kI * (4.0 * k * atoms.d));
    const double s2 = 4.0 * wg.xi * wg.xi * s * s;
    const Complex den =
        (phase - 1.0) * v1 * v2 + 2.0 * kI * wg.xi * s * (v1 + v2) + s2;
    return s2 / den;
}

double transmission_identical(double k, const WaveguideParams& wg, double Omega,
                              double J, int d) {
    const double E = dispersion(k, wg);
    const double tol = 1e-9 * std::max(wg.xi, J);
    if (J > 0.0 && std::abs(E - Omega) < tol) return 0.0;
    const double s = std::sin(k);
    if (std::abs(s) < 1e-12) return 0.0;
    if (J == 0.0) return 1.0;
    const double g = J * J / (E - Omega);  // J G_k
    const double bracket = g * std::sin(2.0 * k * d) / (2.0 * wg.xi * wg.xi * s * s) +
                           std::cos(2.0 * k * d) / (wg.xi * s);
    return 1.0 / (1.0 + g * g * bracket * bracket);
}

Complex transmission_weak_coupling_approx(double k, const WaveguideParams& wg,
                                          const AtomPair& atoms) {
    const double d1 = detuning(wg, atoms.omega1);
    const double d2 = detuning(wg, atoms.omega2);
    if ((atoms.j1 > 0.0 && d1 == 0.0) || (atoms.j2 > 0.0 && d2 == 0.0)) {
        throw ZeroDetuningError(
            "transmission_weak_coupling_approx: vanishing detuning delta_l");
    }
    const double s = std::sin(k);
    if (std::abs(s) < 1e-12) return 0.0;
    // Same structure as the closed form with G_lk frozen at E_k -> omega.
    const double v1 = atoms.j1 == 0.0 ? 0.0 : atoms.j1 * atoms.j1 / d1;
    const double v2 = atoms.j2 == 0.0 ? 0.0 : atoms.j2 * atoms.j2 / d2;
    const Complex phase = std::exp(kI * (4.0 * k * atoms.d));
    const double twoxi = 2.0 * wg.xi;
    const Complex den = (phase - 1.0) * (v1 / twoxi) * (v2 / twoxi) +
                        kI * s * (v1 + v2) / twoxi + s * s;
    return s * s / den;
}

PotentialRegime classify_regime(double Ek, const WaveguideParams& wg,
                                const AtomPair& atoms, Approach approach,
                                double infinite_tolerance) {
    double lo = atoms.omega1, hi = atoms.omega2;
    double jlo = atoms.j1, jhi = atoms.j2;
    if (lo > hi) {
        std::swap(lo, hi);
        std::swap(jlo, jhi);
    }
    const double tol = infinite_tolerance > 0.0
                           ? infinite_tolerance
                           : resonance_tolerance(wg, atoms);

    const auto strength = [Ek](double Omega, double J) {
        if (J == 0.0) return 0.0;
        return Ek == Omega ? std::numeric_limits<double>::infinity()
                           : J * J / (Ek - Omega);
    };
    const auto finite_kind = [Ek](double Omega) {
        return Ek < Omega ? PotentialKind::well : PotentialKind::barrier;
    };
    const auto infinite_kind = [&](double Omega) {
        if (std::abs(Ek - Omega) > 0.0) {
            return Ek < Omega ? PotentialKind::infinite_well
                              : PotentialKind::infinite_barrier;
        }
        return approach == Approach::from_below ? PotentialKind::infinite_well
                                                : PotentialKind::infinite_barrier;
    };

    PotentialRegime out;
    out.strengths = {strength(lo, jlo), strength(hi, jhi)};
    const bool at_lo = std::abs(Ek - lo) < tol;
    const bool at_hi = std::abs(Ek - hi) < tol;
    if (at_lo) {
        out.left_kind = infinite_kind(lo);
        out.right_kind = finite_kind(hi);
        out.case_label =
            out.left_kind == PotentialKind::infinite_well ? 'b' : 'c';
    } else if (at_hi) {
        out.left_kind = finite_kind(lo);
        out.right_kind = infinite_kind(hi);
        out.case_label =
            out.right_kind == PotentialKind::infinite_well ? 'e' : 'f';
    } else if (Ek < lo) {
        out.case_label = 'a';
        out.left_kind = PotentialKind::well;
        out.right_kind = PotentialKind::well;
    } else if (Ek < hi) {
        out.case_label = 'd';
        out.left_kind = PotentialKind::barrier;
        out.right_kind = PotentialKind::well;
    } else {
        out.case_label = 'g';
        out.left_kind = PotentialKind::barrier;
        out.right_kind = PotentialKind::barrier;
    }
    return out;
}

std::vector<SweepPoint> spectrum_sweep(std::span<const double> kgrid,
                                       const WaveguideParams& wg,
                                       const AtomPair& atoms, unsigned threads) {
    std::vector<SweepPoint> out(kgrid.size());
    parallel_for(kgrid.size(), threads, [&](std::size_t i) {
        const double kraw = kgrid[i];
        const double k = canonical_k(kraw);
        SweepPoint p;
        p.k = kraw;
        if (std::abs(std::sin(k)) <= kBandEdgeSin) {
            p.transmission = 0.0;
            p.reflection = 1.0;
            p.flag = PointFlag::band_edge;
        } else {
            const ScatteringSolution sol = solve_scattering(k, wg, atoms);
            p.transmission = std::norm(sol.t);
            p.reflection = std::norm(sol.r);
            p.flag = sol.flag;
        }
        out[i] = p;
    });
    return out;
}

}  // namespace crw
