#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace crw {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested energy lies outside the propagation band [omega - 2 xi, omega + 2 xi].
struct OutOfBandError : Error {
    using Error::Error;
};

// Mode index maps to a wave number outside the first Brillouin zone.
struct IndexOutOfBandError : Error {
    using Error::Error;
};

// A linear system used to extract amplitudes is numerically singular.
struct SingularSystemError : Error {
    SingularSystemError(const std::string& what, double cond)
        : Error(what), condition_estimate(cond) {}
    double condition_estimate;
};

// The atom-cavity detuning omega - Omega_l vanishes where a formula divides by it.
struct ZeroDetuningError : Error {
    using Error::Error;
};

// The Green factor J/(E - Omega) is evaluated exactly at its pole E = Omega.
struct PoleAtOmegaError : Error {
    using Error::Error;
};

// An iterative root search failed to reach its residual tolerance.
struct NoConvergenceError : Error {
    NoConvergenceError(const std::string& what, std::complex<double> last,
                       double residual)
        : Error(what), last_iterate(last), final_residual(residual) {}
    std::complex<double> last_iterate;
    double final_residual;
};

// The two algebraic routes to the inside/outside amplitude ratio disagree,
// which signals that the supplied wave number is not a resonance root.
struct InconsistentAmplitudesError : Error {
    InconsistentAmplitudesError(const std::string& what, double mism)
        : Error(what), mismatch(mism) {}
    double mismatch;
};

// Malformed run configuration (bad key, bad value, missing field).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace crw
