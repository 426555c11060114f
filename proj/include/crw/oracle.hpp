#pragma once

// Brute-force validators, independent of every closed form in the library.
//
//  * oracle_scatter      — direct linear solve of the one-excitation problem on
//                          a finite chain with plane-wave boundary closure.
//  * oracle_diagonalize  — dense diagonalization of the one-excitation matrix
//                          (chain sites plus, optionally, the two atomic
//                          excitation amplitudes).
//  * oracle_root_scan    — rectangle scan of |f| in the complex plane yielding
//                          Newton seeds.
//  * winding_number      — argument-principle zero count along a rectangle.
//
// The scattering solve keeps the atomic amplitudes u_e1, u_e2 as unknowns
// rather than eliminating them through the Green factor, so it stays regular
// even when E_k hits an atomic transition energy exactly.

#include <functional>
#include <vector>

#include "crw/core.hpp"

namespace crw {

struct LatticeProblem {
    int half_length = 0;  // chain covers sites [-L, L]
    WaveguideParams wg;
    AtomPair atoms;
    double k = 0.0;  // incident wave number, strictly inside (0, pi)
};

struct ScatterOracleResult {
    Complex r;
    Complex t;
};

// Solve the bordered sparse system for u(j) on [-L, L] with the closure
// u = e^{ikj} + r e^{-ikj} on the two leftmost sites and u = t e^{ikj} on the
// two rightmost; r and t are unknowns of the system.  Because the potential
// is strictly zero outside [-d, d], the closure is exact for any L > d + 1.
ScatterOracleResult oracle_scatter(const LatticeProblem& problem);

// Sorted eigenvalues of the bare open chain with chain_length sites.
std::vector<double> oracle_diagonalize(int chain_length,
                                       const WaveguideParams& wg);

// Sorted eigenvalues of the one-excitation matrix for a centred chain of
// chain_length (odd) sites with the two atoms included as extra rows.
std::vector<double> oracle_diagonalize(int chain_length,
                                       const WaveguideParams& wg,
                                       const AtomPair& atoms);

// Scan |f| on an (nre x nim) grid over the rectangle [lo, hi] and return the
// grid-local minima below threshold, as seeds for a Newton polish.
std::vector<Complex> oracle_root_scan(const std::function<Complex(Complex)>& f,
                                      Complex lo, Complex hi, int nre, int nim,
                                      double threshold);

// Number of zeros of an analytic f inside the rectangle [lo, hi], counted by
// accumulating the phase of f along the boundary.  samples_per_edge controls
// the discretisation of the contour.
int winding_number(const std::function<Complex(Complex)>& f, Complex lo,
                   Complex hi, int samples_per_edge = 400);

}  // namespace crw
