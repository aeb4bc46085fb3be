#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "psidel/bernstein.hpp"
#include "psidel/quadrature.hpp"

namespace psidel {

struct DensityUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Levy density t -> m(t) of the subordinator attached to a catalog member,
/// with int_0^inf (1 - e^{-x t}) m(t) dt = Psi(x).
class LevyDensity {
public:
    LevyDensity(std::function<double(double)> f, bool approximate)
        : f_(std::move(f)), approximate_(approximate) {}

    double operator()(double t) const {
        if (!(t > 0)) throw std::domain_error("LevyDensity: t > 0 required");
        return f_(t);
    }
    /// True for the log-modified kinds, whose density comes from numerical
    /// Stieltjes inversion instead of a closed form.
    bool approximate() const { return approximate_; }

private:
    std::function<double(double)> f_;
    bool approximate_;
};

/// int_0^inf (1 - e^{-x t}) m(t) dt computed on a log axis; used to verify
/// the Laplace identity against Psi(x).
inline double laplace_identity_value(const LevyDensity& m, double x) {
    return integrate_log_axis(
        [&](double t) { return -std::expm1(-x * t) * m(t); }, -42.0, 42.0, 1e-11);
}

namespace detail {

// Boundary values of Psi' on the upper edge of the cut (-inf, 0]. The
// Bromwich contour for L^{-1}[Psi'] collapses onto the cut, giving
//   t m(t) = -(1/pi) int_0^inf e^{-s t} Im Psi'(-s + i0) ds,
// exact for the whole catalog and used numerically for the log kinds.
inline double stieltjes_density(const BernsteinFunction& psi, double t) {
    auto im_dpsi = [&](double s) {
        // tiny positive tilt fixes the branch on the cut (signed zeros are
        // not reliable through complex division)
        return psi.derivative_complex(complex(-s, s * 1e-18)).imag();
    };
    // kink at s = 1 (branch point of log(1+z)); e^{-st} caps the range
    const double s_cap = std::max(4.0, 745.0 / t);
    auto f = [&](double s) { return std::exp(-s * t) * im_dpsi(s); };
    double total = integrate_singular(f, 0.0, 1.0, 1e-11);
    // branch-point kink at s = 1 sits on the endpoint; tanh-sinh absorbs it
    total += integrate_singular([&](double u) { return f(std::exp(u)) * std::exp(u); }, 0.0,
                                std::log(s_cap), 1e-11);
    return -total / (pi * t);
}

inline double stable_density(double gamma, double t) {
    return gamma / std::tgamma(1.0 - gamma) * std::pow(t, -1.0 - gamma);
}

}  // namespace detail

/// Levy density of the subordinator for psi. Closed forms for the stable,
/// relativistic and sum-stable kinds; numerical Stieltjes inversion for the
/// log-modified kinds (flagged approximate, validated against the Laplace
/// identity at x in {0.1, 1, 10} to 1e-6 relative).
inline LevyDensity subordinator_levy_density(const BernsteinFunction& psi) {
    if (!psi.has_levy_density())
        throw DensityUnavailable("density unavailable: " + psi.describe() +
                                 " carries drift mass (alpha = 2)");
    switch (psi.kind()) {
        case BernsteinKind::Stable: {
            const double g = psi.alpha() / 2;
            return LevyDensity([g](double t) { return detail::stable_density(g, t); }, false);
        }
        case BernsteinKind::Relativistic: {
            const double g = psi.alpha() / 2, th = psi.theta();
            return LevyDensity(
                [g, th](double t) { return detail::stable_density(g, t) * std::exp(-th * t); },
                false);
        }
        case BernsteinKind::SumStable: {
            const double g1 = psi.alpha() / 2, g2 = psi.beta() / 2;
            return LevyDensity(
                [g1, g2](double t) {
                    return detail::stable_density(g1, t) + detail::stable_density(g2, t);
                },
                false);
        }
        case BernsteinKind::LogDamped:
        case BernsteinKind::LogBoosted: {
            LevyDensity m([psi](double t) { return detail::stieltjes_density(psi, t); }, true);
            for (double x : {0.1, 1.0, 10.0}) {
                double lhs = 0, rhs = psi(x);
                try {
                    lhs = laplace_identity_value(m, x);
                } catch (const QuadratureError& e) {
                    throw DensityUnavailable(std::string("density unavailable: ") + e.what());
                }
                if (std::abs(lhs - rhs) > 1e-6 * rhs)
                    throw DensityUnavailable("density unavailable: Laplace identity residual " +
                                             std::to_string(std::abs(lhs - rhs) / rhs) + " at x=" +
                                             std::to_string(x));
            }
            return m;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace psidel
