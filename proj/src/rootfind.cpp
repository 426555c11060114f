#include "crw/rootfind.hpp"

#include <cmath>

namespace crw {

NewtonResult newton_complex(const std::function<Complex(Complex)>& f,
                            const std::function<Complex(Complex)>& df,
                            Complex seed, const NewtonOptions& opts) {
    Complex k = seed;
    Complex fk = f(k);
    for (int it = 0; it < opts.max_iterations; ++it) {
        if (std::abs(fk) < opts.tolerance) {
            return NewtonResult{k, it, std::abs(fk)};
        }
        const Complex dfk = df(k);
        if (std::abs(dfk) == 0.0) {
            throw NoConvergenceError("Newton derivative vanished", k,
                                     std::abs(fk));
        }
        Complex step = fk / dfk;
        const double len = std::abs(step);
        if (len > opts.max_step) step *= opts.max_step / len;
        k -= step;
        fk = f(k);
    }
    if (std::abs(fk) < opts.tolerance) {
        return NewtonResult{k, opts.max_iterations, std::abs(fk)};
    }
    throw NoConvergenceError("Newton iteration did not converge", k,
                             std::abs(fk));
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol, int max_iterations) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw Error("bisect: interval does not bracket a sign change");
    }
    for (int it = 0; it < max_iterations && hi - lo > xtol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi, double xtol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace crw
