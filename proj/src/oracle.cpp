#include "crw/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace crw {

namespace {

Complex plane_wave(double k, int j) { return std::exp(kI * (k * j)); }

}  // namespace

ScatterOracleResult oracle_scatter(const LatticeProblem& problem) {
    const int L = problem.half_length;
    const int d = problem.atoms.d;
    if (L < d + 2) {
        throw Error("oracle_scatter: half_length must exceed d + 1");
    }
    const double k = problem.k;
    const WaveguideParams& wg = problem.wg;
    const double E = dispersion(k, wg);

    // Unknowns: [r, u(-L..L), t, ue1, ue2]
    const int nsites = 2 * L + 1;
    const int idx_r = 0;
    const auto idx_u = [L](int j) { return 1 + (j + L); };
    const int idx_t = nsites + 1;
    const int idx_e1 = nsites + 2;
    const int idx_e2 = nsites + 3;
    const int dim = nsites + 4;

    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(static_cast<std::size_t>(4 * dim));
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim);
    int row = 0;

    // Left closure: u(j) = e^{ikj} + r e^{-ikj} at j = -L, -L+1.
    for (int j = -L; j <= -L + 1; ++j) {
        trip.emplace_back(row, idx_u(j), Complex(1.0, 0.0));
        trip.emplace_back(row, idx_r, -plane_wave(-k, j));
        rhs(row) = plane_wave(k, j);
        ++row;
    }
    // Right closure: u(j) = t e^{ikj} at j = L-1, L.
    for (int j = L - 1; j <= L; ++j) {
        trip.emplace_back(row, idx_u(j), Complex(1.0, 0.0));
        trip.emplace_back(row, idx_t, -plane_wave(k, j));
        ++row;
    }
    // Lattice equations at the interior sites, with the atomic amplitudes as
    // explicit unknowns:
    //   (E - omega) u(j) + xi [u(j+1) + u(j-1)] = J1 ue1 d_{j,-d} + J2 ue2 d_{j,d}
    for (int j = -L + 1; j <= L - 1; ++j) {
        trip.emplace_back(row, idx_u(j), Complex(E - wg.omega, 0.0));
        trip.emplace_back(row, idx_u(j - 1), Complex(wg.xi, 0.0));
        trip.emplace_back(row, idx_u(j + 1), Complex(wg.xi, 0.0));
        if (j == -d) trip.emplace_back(row, idx_e1, Complex(-problem.atoms.j1, 0.0));
        if (j == d) trip.emplace_back(row, idx_e2, Complex(-problem.atoms.j2, 0.0));
        ++row;
    }
    // Atomic equations: (E - Omega_l) ue_l = J_l u(-+d).
    trip.emplace_back(row, idx_e1, Complex(E - problem.atoms.omega1, 0.0));
    trip.emplace_back(row, idx_u(-d), Complex(-problem.atoms.j1, 0.0));
    ++row;
    trip.emplace_back(row, idx_e2, Complex(E - problem.atoms.omega2, 0.0));
    trip.emplace_back(row, idx_u(d), Complex(-problem.atoms.j2, 0.0));
    ++row;

    Eigen::SparseMatrix<Complex> mat(dim, dim);
    mat.setFromTriplets(trip.begin(), trip.end());
    mat.makeCompressed();

    Eigen::SparseLU<Eigen::SparseMatrix<Complex>> lu;
    lu.compute(mat);
    if (lu.info() != Eigen::Success) {
        throw SingularSystemError("oracle_scatter: sparse LU factorization failed",
                                  std::numeric_limits<double>::infinity());
    }
    const Eigen::VectorXcd sol = lu.solve(rhs);
    if (lu.info() != Eigen::Success) {
        throw SingularSystemError("oracle_scatter: sparse solve failed",
                                  std::numeric_limits<double>::infinity());
    }
    return ScatterOracleResult{sol(idx_r), sol(idx_t)};
}

std::vector<double> oracle_diagonalize(int chain_length,
                                       const WaveguideParams& wg) {
    if (chain_length < 1 || chain_length > 10000) {
        throw Error("oracle_diagonalize: chain_length out of range");
    }
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(chain_length, chain_length);
    for (int i = 0; i < chain_length; ++i) {
        h(i, i) = wg.omega;
        if (i + 1 < chain_length) {
            h(i, i + 1) = -wg.xi;
            h(i + 1, i) = -wg.xi;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h,
                                                      Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(),
                           es.eigenvalues().data() + chain_length);
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<double> oracle_diagonalize(int chain_length,
                                       const WaveguideParams& wg,
                                       const AtomPair& atoms) {
    if (chain_length < 1 || chain_length > 10000) {
        throw Error("oracle_diagonalize: chain_length out of range");
    }
    if (chain_length % 2 == 0) {
        throw Error("oracle_diagonalize: need an odd chain length to centre the atoms");
    }
    const int L = (chain_length - 1) / 2;
    if (atoms.d > L) {
        throw Error("oracle_diagonalize: atoms fall outside the chain");
    }
    const int dim = chain_length + 2;
    const auto site = [L](int j) { return j + L; };
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < chain_length; ++i) {
        h(i, i) = wg.omega;
        if (i + 1 < chain_length) {
            h(i, i + 1) = -wg.xi;
            h(i + 1, i) = -wg.xi;
        }
    }
    const int e1 = chain_length;
    const int e2 = chain_length + 1;
    h(e1, e1) = atoms.omega1;
    h(e2, e2) = atoms.omega2;
    h(e1, site(-atoms.d)) = atoms.j1;
    h(site(-atoms.d), e1) = atoms.j1;
    h(e2, site(atoms.d)) = atoms.j2;
    h(site(atoms.d), e2) = atoms.j2;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h,
                                                      Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(),
                           es.eigenvalues().data() + dim);
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<Complex> oracle_root_scan(const std::function<Complex(Complex)>& f,
                                      Complex lo, Complex hi, int nre, int nim,
                                      double threshold) {
    if (nre < 3 || nim < 3) {
        throw Error("oracle_root_scan: need at least a 3x3 grid");
    }
    std::vector<double> mag(static_cast<std::size_t>(nre) * nim);
    const double dre = (hi.real() - lo.real()) / (nre - 1);
    const double dim_ = (hi.imag() - lo.imag()) / (nim - 1);
    for (int ir = 0; ir < nre; ++ir) {
        for (int ii = 0; ii < nim; ++ii) {
            const Complex z(lo.real() + ir * dre, lo.imag() + ii * dim_);
            mag[static_cast<std::size_t>(ir) * nim + ii] = std::abs(f(z));
        }
    }
    std::vector<Complex> seeds;
    for (int ir = 1; ir + 1 < nre; ++ir) {
        for (int ii = 1; ii + 1 < nim; ++ii) {
            const double v = mag[static_cast<std::size_t>(ir) * nim + ii];
            if (v >= threshold) continue;
            bool is_min = true;
            for (int a = -1; a <= 1 && is_min; ++a) {
                for (int b = -1; b <= 1; ++b) {
                    if (a == 0 && b == 0) continue;
                    if (mag[static_cast<std::size_t>(ir + a) * nim + (ii + b)] < v) {
                        is_min = false;
                        break;
                    }
                }
            }
            if (is_min) {
                seeds.emplace_back(lo.real() + ir * dre, lo.imag() + ii * dim_);
            }
        }
    }
    return seeds;
}

int winding_number(const std::function<Complex(Complex)>& f, Complex lo,
                   Complex hi, int samples_per_edge) {
    // Walk the rectangle counter-clockwise and accumulate the phase of f.
    std::vector<Complex> path;
    path.reserve(static_cast<std::size_t>(4 * samples_per_edge) + 1);
    const auto push_edge = [&](Complex a, Complex b) {
        for (int i = 0; i < samples_per_edge; ++i) {
            const double s = static_cast<double>(i) / samples_per_edge;
            path.push_back(a + s * (b - a));
        }
    };
    const Complex bl = lo;
    const Complex br(hi.real(), lo.imag());
    const Complex tr = hi;
    const Complex tl(lo.real(), hi.imag());
    push_edge(bl, br);
    push_edge(br, tr);
    push_edge(tr, tl);
    push_edge(tl, bl);
    path.push_back(bl);

    double total = 0.0;
    Complex prev = f(path.front());
    if (std::abs(prev) == 0.0) {
        throw Error("winding_number: zero of f on the contour");
    }
    for (std::size_t i = 1; i < path.size(); ++i) {
        const Complex cur = f(path[i]);
        if (std::abs(cur) == 0.0) {
            throw Error("winding_number: zero of f on the contour");
        }
        total += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

}  // namespace crw
