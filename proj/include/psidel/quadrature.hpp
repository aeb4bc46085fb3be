#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "psidel/numerics.hpp"

namespace psidel {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod on a finite interval, relative tolerance `tol`,
/// absolute floor 1e-14.
template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-10) {
    if (!(b > a)) return 0.0;
    double err = 0.0;
    const double val = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        std::forward<F>(f), a, b, 15, tol, &err);
    if (!(std::isfinite(val)))
        throw QuadratureError("quadrature non-convergence: non-finite result");
    if (err > tol * std::abs(val) + 1e-14)
        throw QuadratureError("quadrature non-convergence: error " + std::to_string(err) +
                              " vs value " + std::to_string(val));
    return val;
}

/// Same but tolerant of endpoint singularities (tanh-sinh rule).
template <typename F>
double integrate_singular(F&& f, double a, double b, double tol = 1e-10) {
    if (!(b > a)) return 0.0;
    boost::math::quadrature::tanh_sinh<double> ts;
    double err = 0.0, l1 = 0.0;
    const double val = ts.integrate(std::forward<F>(f), a, b, tol, &err, &l1);
    if (!std::isfinite(val)) throw QuadratureError("tanh-sinh: non-finite result");
    return val;
}

/// Integral over (0, inf) of a positive-axis integrand supplied in
/// log coordinates: expects g(u) = f(e^u) * e^u and integrates g over
/// [log_lo, log_hi]. Kernel integrands here are unimodal on a log axis,
/// so a generous fixed window plus adaptivity is reliable.
template <typename F>
double integrate_log_axis(F&& f, double log_lo, double log_hi, double tol = 1e-10) {
    auto g = [&](double u) {
        const double t = std::exp(u);
        return f(t) * t;
    };
    return integrate(g, log_lo, log_hi, tol);
}

/// Complex-valued adaptive Gauss-Kronrod over [a, b] (real and imaginary
/// parts integrated jointly; boost handles complex integrands).
template <typename F>
complex integrate_complex(F&& f, double a, double b, double tol = 1e-10) {
    double err = 0.0;
    const complex val = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        std::forward<F>(f), a, b, 15, tol, &err);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
        throw QuadratureError("complex quadrature: non-finite result");
    return val;
}

}  // namespace psidel
