#pragma once

#include <functional>

#include "crw/core.hpp"

namespace crw {

struct NewtonOptions {
    int max_iterations = 100;
    double tolerance = 1e-12;   // on |f(k)|
    double max_step = 0.5;      // clamp on |k_{n+1} - k_n|
};

struct NewtonResult {
    Complex root;
    int iterations = 0;
    double residual = 0.0;
};

// Newton iteration in the complex plane with an analytic derivative.
// Throws NoConvergenceError (carrying the last iterate and residual) when the
// tolerance is not reached within max_iterations.
NewtonResult newton_complex(const std::function<Complex(Complex)>& f,
                            const std::function<Complex(Complex)>& df,
                            Complex seed, const NewtonOptions& opts = {});

// Bisection for a real root of f on [lo, hi]; f(lo) and f(hi) must have
// opposite signs.  Returns the midpoint of the final bracket.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol = 1e-14, int max_iterations = 200);

// Golden-section minimisation of f on [lo, hi] down to interval width xtol.
double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi, double xtol = 1e-10);

}  // namespace crw
