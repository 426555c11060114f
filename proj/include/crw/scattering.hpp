#pragma once

// Real-k single-photon scattering off the two atoms.
//
// The stationary state is the piecewise plane-wave ansatz
//
//     u(j) = e^{ikj} + r e^{-ikj}   j <= -d
//          = A e^{ikj} + B e^{-ikj} |j| <= d
//          = t e^{ikj}              j >= d
//
// matched through the continuity conditions and the modified lattice equations
// at j = -+d, where each atom contributes the energy-dependent delta strength
// J_l G_lk with G_lk = J_l/(E_k - Omega_l).  The closed-form transmission
//
//     t = 4 xi^2 sin^2 k / [ (e^{i4kd}-1) J1 G1 J2 G2
//                            + 2 i xi sin k (J1 G1 + J2 G2) + 4 xi^2 sin^2 k ]
//
// is kept as a cross-check; the primary path is the direct 4x4 linear solve,
// which also yields r, A and B.

#include <array>
#include <span>
#include <vector>

#include "crw/core.hpp"

namespace crw {

enum class PointFlag { ok, resonant_atom, band_edge };

struct ScatteringSolution {
    double k = 0.0;
    Complex r, a, b, t;
    std::array<Complex, 2> greens{};  // G_1k, G_2k
    PointFlag flag = PointFlag::ok;
};

enum class PotentialKind { well, barrier, infinite_well, infinite_barrier };

// Side from which E_k approaches a transition energy; decides whether an
// on-resonance scatterer is reported as an infinite well or barrier.
enum class Approach { from_below, from_above };

struct PotentialRegime {
    char case_label = 'a';  // 'a'..'g'
    PotentialKind left_kind = PotentialKind::well;
    PotentialKind right_kind = PotentialKind::well;
    std::array<double, 2> strengths{};  // J_l G_lk in Omega-sorted order
};

struct SweepPoint {
    double k = 0.0;
    double transmission = 0.0;
    double reflection = 0.0;
    PointFlag flag = PointFlag::ok;
};

// |E_k - Omega_l| below this threshold is treated as exact atomic resonance,
// where the physical limit t = 0, |r| = 1 is returned instead of dividing by a
// vanishing detuning.
double resonance_tolerance(const WaveguideParams& wg, const AtomPair& atoms);

// Full amplitude set by direct linear solve.  Requires k strictly inside
// (0, pi).  On atomic resonance the exact limit is returned and the solution
// is flagged resonant_atom.  Throws SingularSystemError if the 4x4 system is
// numerically singular.
ScatteringSolution solve_scattering(double k, const WaveguideParams& wg,
                                    const AtomPair& atoms);

// Closed-form transmission amplitude; equals solve_scattering(...).t.
Complex transmission_closed_form(double k, const WaveguideParams& wg,
                                 const AtomPair& atoms);

// Identical atoms: T = |t|^2 in the closed form
//   T = { 1 + (J G_k)^2 [ J G_k sin 2kd / (2 xi^2 sin^2 k)
//                         + cos 2kd / (xi sin k) ]^2 }^{-1}.
double transmission_identical(double k, const WaveguideParams& wg, double Omega,
                              double J, int d);

// Transmission with the Green factors frozen at the band centre,
// G_l = J_l/delta_l with delta_l = omega - Omega_l.  Valid when the photon
// energy stays close to omega relative to the detunings.  Throws
// ZeroDetuningError when some delta_l = 0.
Complex transmission_weak_coupling_approx(double k, const WaveguideParams& wg,
                                          const AtomPair& atoms);

// Classify the effective potential pair seen by a photon of energy Ek
// (cases a..g; the atoms are Omega-sorted first, which leaves |t| unchanged).
PotentialRegime classify_regime(double Ek, const WaveguideParams& wg,
                                const AtomPair& atoms,
                                Approach approach = Approach::from_below,
                                double infinite_tolerance = -1.0);

// T and R over a wave-number grid.  R is computed independently as |r|^2.
// Points with |sin k| <= 1e-6 are reported as total reflection with a
// band_edge flag; negative k is folded by E_{-k} = E_k.
std::vector<SweepPoint> spectrum_sweep(std::span<const double> kgrid,
                                       const WaveguideParams& wg,
                                       const AtomPair& atoms,
                                       unsigned threads = 1);

}  // namespace crw
