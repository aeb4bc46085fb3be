#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "psidel/bernstein.hpp"
#include "psidel/quadrature.hpp"

namespace psidel {

namespace detail {

/// Laplace exponent of the ascending ladder-height process at complex s,
/// |arg s| < pi. For Re s > 0 this is the Poisson-type integral
///   log LT(s) = (1/pi) int_0^inf s log Psi(u^2) / (s^2 + u^2) du;
/// the integration ray is rotated away from the pole at u = -is, and
/// continuation past arg s = pi/2 picks up the residue factor Psi(-s^2).
inline complex ladder_complex(const BernsteinFunction& psi, complex s) {
    const bool conj = std::arg(s) < 0.0;
    if (conj) s = std::conj(s);
    const double p = std::arg(s) - 0.5 * pi;
    double chi;
    bool crossed;
    if (p >= 0.0) {
        chi = 0.5 * (p - 0.5 * pi);
        crossed = true;
    } else {
        chi = 0.5 * (p + 0.5 * pi);
        crossed = false;
    }
    const double R = std::abs(s);
    const complex w = std::polar(1.0, chi);

    auto g = [&](double v) -> complex {
        const complex u = w * (R * v);
        return std::log(psi.eval_complex(u * u)) * (s * w * R) / (s * s + u * u);
    };
    // v = e^{-t} on (0,1] and v = e^{+t} on [1,inf): integrands decay like
    // t e^{-t}, and the log singularity at v -> 0 never underflows
    const complex inner =
        integrate_complex([&](double t) { return g(std::exp(-t)) * std::exp(-t); }, 0.0, 40.0,
                          1e-10);
    const complex outer = integrate_complex(
        [&](double t) { return g(std::exp(t)) * std::exp(t); }, 0.0, 40.0, 1e-10);
    complex out = std::exp((inner + outer) / pi);
    if (crossed) out *= psi.eval_complex(-s * s);
    return conj ? std::conj(out) : out;
}

/// Fixed-Talbot inverse Laplace transform with M nodes, orientation for
/// real-valued originals (upper contour half + real part).
template <typename F>
double talbot_invert(F&& laplace, double t, int M = 32) {
    if (!(t > 0)) throw std::domain_error("talbot_invert: t > 0 required");
    const double rc = 2.0 * M / (5.0 * t);
    double total = 0.5 * std::real(laplace(complex(rc, 0.0)) * std::exp(rc * t));
    for (int k = 1; k < M; ++k) {
        const double th = pi * k / M;
        const double cot = std::cos(th) / std::sin(th);
        const complex s(rc * th * cot, rc * th);
        const double sigma = th + (th * cot - 1.0) * cot;
        total += std::real(std::exp(s * t) * laplace(s) * complex(1.0, sigma));
    }
    return rc / M * total;
}

}  // namespace detail

/// Ladder-height Laplace exponent at real x > 0, computed from the
/// split-and-reflect form of the Poisson integral; relative target 1e-8.
inline double ladder_exponent(const BernsteinFunction& psi, double x) {
    if (!(x > 0)) throw std::domain_error("ladder_exponent: x > 0 required");
    // split at y = 1 and reflect the outer piece; then y = e^{-t}
    auto f = [&](double t) {
        const double y = std::exp(-t);
        const double y2 = y * y;
        return (std::log(psi(x * x * y2)) + std::log(psi(x * x / y2))) / (1.0 + y2) * y;
    };
    const double I = integrate(f, 0.0, 40.0, 1e-11);
    return std::exp(I / pi);
}

/// Renewal function V of the ladder-height process, from its Laplace
/// transform 1/(s LadderExponent(s)) by a 32-node fixed-Talbot inversion.
inline double renewal_function(const BernsteinFunction& psi, double r, int talbot_nodes = 32) {
    if (!(r > 0)) throw std::domain_error("renewal_function: r > 0 required");
    const double v = detail::talbot_invert(
        [&](complex s) { return 1.0 / (s * detail::ladder_complex(psi, s)); }, r, talbot_nodes);
    if (!(v > 0)) throw QuadratureError("inversion unstable: V(" + std::to_string(r) +
                                        ") = " + std::to_string(v));
    return v;
}

/// Boundary gauge phi(r) = 1 / sqrt(Psi(1/r^2)).
inline double gauge_phi(const BernsteinFunction& psi, double r) {
    if (!(r > 0)) throw std::domain_error("gauge_phi: r > 0 required");
    return 1.0 / std::sqrt(psi(1.0 / (r * r)));
}

/// Evaluators bundled per catalog member, plus the inversion settings.
struct RenewalProfile {
    BernsteinFunction psi;
    int talbot_nodes = 32;

    double ladder(double x) const { return ladder_exponent(psi, x); }
    double V(double r) const { return renewal_function(psi, r, talbot_nodes); }
    double phi(double r) const { return gauge_phi(psi, r); }

    /// V on an increasing grid with the monotonicity contract enforced.
    std::vector<double> V_grid(const std::vector<double>& rs) const {
        std::vector<double> out;
        out.reserve(rs.size());
        for (double r : rs) out.push_back(V(r));
        for (std::size_t i = 1; i < out.size(); ++i)
            if (!(out[i] > out[i - 1]))
                throw QuadratureError("inversion unstable: V not increasing at r = " +
                                      std::to_string(rs[i]));
        return out;
    }
};

/// Two-sided comparison constant for V^2 ~ 1/Psi(1/r^2): the max over the
/// grid of max(rho, 1/rho) with rho(r) = V(r) sqrt(Psi(1/r^2)).
inline double check_comparison_3_5(const BernsteinFunction& psi, const std::vector<double>& rgrid) {
    if (rgrid.size() < 2) throw std::invalid_argument("check_comparison_3_5: degenerate grid");
    RenewalProfile prof{psi};
    double C = 1.0;
    for (double r : rgrid) {
        const double rho = prof.V(r) * std::sqrt(psi(1.0 / (r * r)));
        if (!(rho > 0)) throw QuadratureError("comparison check: rho <= 0 (inversion bug)");
        C = std::max({C, rho, 1.0 / rho});
    }
    return C;
}

inline std::vector<double> default_comparison_grid() { return logspace(1e-3, 1e3, 121); }

/// Limit of V(r)/phi(r) as r -> 0+, extrapolated from the dyadic sequence
/// r = 2^-k, k = 8..16, by polynomial extrapolation in 1/k (handles both
/// power-law and logarithmic correction terms). Successive levels must
/// agree within 1%.
inline double kappa_limit(const BernsteinFunction& psi) {
    RenewalProfile prof{psi};
    std::vector<double> xs, ys;
    for (int k = 16; k >= 8; --k) {  // newest first so level m uses the smallest radii
        const double r = std::pow(2.0, -k);
        xs.push_back(1.0 / double(k));
        ys.push_back(prof.V(r) / prof.phi(r));
    }
    const auto diag = neville_to_zero(xs, ys);
    const std::size_t depth = 3;  // higher degrees amplify inversion noise
    const double est = diag[depth], prev = diag[depth - 1];
    if (!(est > 0) || std::abs(est - prev) > 0.01 * std::abs(est))
        throw QuadratureError("limit not resolved: kappa levels " + std::to_string(prev) +
                              " vs " + std::to_string(est));
    return est;
}

}  // namespace psidel
