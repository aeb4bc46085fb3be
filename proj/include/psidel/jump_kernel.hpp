#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "psidel/bernstein.hpp"
#include "psidel/levy_density.hpp"
#include "psidel/quadrature.hpp"

namespace psidel {

/// Radial jump density j of the subordinate process in dimension d,
///   j(r) = int_0^inf (4 pi t)^{-d/2} e^{-r^2/(4t)} m(t) dt,
/// evaluated by adaptive quadrature after the substitution t = r^2 s, with
/// a monotone log-log cache for the bulk range used in grid assembly.
class JumpKernel {
public:
    JumpKernel(BernsteinFunction psi, int d)
        : psi_(std::move(psi)), d_(d), m_(subordinator_levy_density(psi_)) {
        if (d < 1) throw std::invalid_argument("JumpKernel: d >= 1 required");
        if (m_.approximate()) build_density_cache();
        build_cache(1e-7, 400.0);
    }

    int dimension() const { return d_; }
    const BernsteinFunction& psi() const { return psi_; }
    const LevyDensity& levy_density() const { return m_; }

    double operator()(double r) const {
        if (!(r > 0)) throw std::domain_error("JumpKernel: r > 0 required");
        const double lr = std::log(r);
        if (cache_.covers(lr)) {
            const double lj = cache_(lr);
            return lj <= -690.0 ? 0.0 : std::exp(lj);
        }
        if (lr > cache_.x_max()) return 0.0;  // past the underflow frontier
        return evaluate_raw(r);
    }

    /// Direct quadrature evaluation (no cache); relative target 1e-8.
    double evaluate_raw(double r) const {
        // t = r^2 s; integrand in log s
        const double pref = std::pow(4.0 * pi, -0.5 * d_);
        auto f = [&](double s) {
            const double e = -1.0 / (4.0 * s) - 0.5 * d_ * std::log(s * r * r);
            if (e < -745.0) return 0.0;
            return pref * std::exp(e) * m_eval(r * r * s) * r * r;
        };
        return integrate_log_axis(f, -7.0, 46.0, 1e-9);
    }

    double derivative(double r) const {
        const double pref = std::pow(4.0 * pi, -0.5 * d_);
        auto f = [&](double s) {
            const double e = -1.0 / (4.0 * s) - 0.5 * d_ * std::log(s * r * r);
            if (e < -745.0) return 0.0;
            return pref * std::exp(e) / (2.0 * s) * m_eval(r * r * s);
        };
        return -integrate_log_axis(f, -7.0, 46.0, 1e-9) / r;
    }

    /// Mass of the kernel outside the ball of radius R:
    /// int_{|z| > R} j(|z|) dz, via the subordinator representation.
    double tail_mass(double R) const {
        if (d_ == 1)
            return integrate_log_axis(
                [&](double t) { return std::erfc(R / (2.0 * std::sqrt(t))) * m_eval(t); }, -42.0,
                46.0, 1e-10);
        if (d_ == 2)
            return integrate_log_axis(
                [&](double t) {
                    const double e = -R * R / (4.0 * t);
                    return e < -745.0 ? 0.0 : std::exp(e) * m_eval(t);
                },
                -42.0, 46.0, 1e-10);
        throw std::invalid_argument("tail_mass: d in {1,2}");
    }

    /// int_A^inf j(r) dr (line tail, d = 1 reduction).
    double line_tail(double A) const {
        return 0.5 * integrate_log_axis(
                         [&](double t) { return std::erfc(A / (2.0 * std::sqrt(t))) * m_eval(t); },
                         -42.0, 46.0, 1e-10);
    }

    /// int_A^inf r j(r) dr (radial tail, d = 2 reduction).
    double radial_tail(double A) const {
        return integrate_log_axis(
                   [&](double t) {
                       const double e = -A * A / (4.0 * t);
                       return e < -745.0 ? 0.0 : std::exp(e) * m_eval(t);
                   },
                   -42.0, 46.0, 1e-10) /
               (2.0 * pi);
    }

    /// int_a^b r^p j(r) dr through the evaluator, log axis.
    double radial_moment(double p, double a, double b, double tol = 1e-9) const {
        if (!(b > a) || !(a >= 0)) throw std::invalid_argument("radial_moment: bad range");
        const double lo = std::max(a, 1e-12);
        return integrate_log_axis([&](double r) { return std::pow(r, p) * (*this)(r); },
                                  std::log(lo), std::log(b), tol);
    }

private:
    double m_eval(double t) const {
        if (!m_cache_.covers(std::log(t))) return m_(t);
        return std::exp(m_cache_(std::log(t)));
    }

    // numerically inverted densities are costly; interpolate log m(t) on a
    // log axis across the full quadrature window
    void build_density_cache() {
        const double lo = -44.0, hi = 48.0;
        const std::size_t n = std::size_t((hi - lo) / std::log(10.0) * 64) + 2;
        std::vector<double> lx, ly;
        lx.reserve(n);
        ly.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double lt = lo + (hi - lo) * double(i) / double(n - 1);
            const double mv = m_(std::exp(lt));
            if (!(mv > 0)) throw DensityUnavailable("density unavailable: m(t) <= 0 at log t = " +
                                                    std::to_string(lt));
            lx.push_back(lt);
            ly.push_back(std::log(mv));
        }
        m_cache_ = PchipInterpolant(std::move(lx), std::move(ly));
    }

    void build_cache(double r_lo, double r_hi) {
        const std::size_t per_decade = 48;
        const double decades = std::log10(r_hi / r_lo);
        const std::size_t n = std::size_t(decades * per_decade) + 2;
        std::vector<double> lx, ly;
        lx.reserve(n);
        ly.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double r = r_lo * std::pow(r_hi / r_lo, double(i) / double(n - 1));
            const double j = evaluate_raw(r);
            if (j <= 1e-290) break;  // exponential kinds underflow; tails handled analytically
            lx.push_back(std::log(r));
            ly.push_back(std::log(j));
        }
        if (lx.size() < 8) throw QuadratureError("jump kernel cache: too few usable samples");
        cache_ = PchipInterpolant(std::move(lx), std::move(ly));
    }

    BernsteinFunction psi_;
    int d_;
    LevyDensity m_;
    PchipInterpolant m_cache_;
    PchipInterpolant cache_;
};

inline JumpKernel jump_kernel(const BernsteinFunction& psi, int d) { return JumpKernel(psi, d); }

/// min over a dense grid of r in [1, rmax] of j(r+1)/j(r); the constant of
/// the jump-kernel comparability condition. Always <= 1 since j decreases.
inline double check_A22(const JumpKernel& k, double rmax) {
    if (!(rmax >= 2)) throw std::invalid_argument("check_A22: rmax >= 2 required");
    const std::size_t n = std::size_t(40 * std::log10(rmax)) + 64;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double r = 1.0 + (rmax - 1.0) * double(i) / double(n - 1);
        const double num = k(r + 1.0), den = k(r);
        if (den <= 0.0) continue;
        best = std::min(best, num / den);
    }
    return best;
}

/// Relative residual of the symbol identity
///   Psi(|z|^2) = int (1 - cos(y.z)) j(|y|) dy
/// computed in radial coordinates. The near-origin piece uses the
/// 1 - cos expansion below a cutoff; the far tail combines the exact
/// kernel tail with integration-by-parts corrections for the oscillation.
inline double verify_symbol(const JumpKernel& k, double zmag) {
    if (zmag == 0.0) return 0.0;  // integrand vanishes identically
    const int d = k.dimension();
    const double z = zmag;
    const double psi_val = k.psi()(z * z);

    const double r0 = std::min(0.08 / z, 0.05);
    double A = std::max(200.0, 40.0 / z);

    double total = 0.0;
    if (d == 1) {
        // 2 int_0^inf (1 - cos(z r)) j(r) dr
        const double m2 = k.radial_moment(2.0, 0.0, r0);
        const double m4 = k.radial_moment(4.0, 0.0, r0);
        total += 2.0 * (0.5 * z * z * m2 - z * z * z * z / 24.0 * m4);
        total += 2.0 * integrate_log_axis(
                           [&](double r) {
                               const double ss = std::sin(0.5 * z * r);
                               return 2.0 * ss * ss * k(r);
                           },
                           std::log(r0), std::log(A), 1e-9);
        const double jA = k(A);
        double osc = 0.0;
        if (jA > 1e-280) {
            const double jpA = k.derivative(A);
            osc = jA * std::sin(z * A) / z + jpA * std::cos(z * A) / (z * z);
        }
        total += 2.0 * (k.line_tail(A) + osc);
    } else if (d == 2) {
        // 2 pi int_0^inf (1 - J0(z r)) j(r) r dr
        const double m3 = k.radial_moment(3.0, 0.0, r0);
        const double m5 = k.radial_moment(5.0, 0.0, r0);
        total += 2.0 * pi * (0.25 * z * z * m3 - z * z * z * z / 64.0 * m5);
        total += 2.0 * pi *
                 integrate_log_axis(
                     [&](double r) { return (1.0 - std::cyl_bessel_j(0, z * r)) * k(r) * r; },
                     std::log(r0), std::log(A), 1e-9);
        const double jA = k(A);
        double osc = 0.0;
        if (jA > 1e-280) {
            const double jpA = k.derivative(A);
            osc = jA * A * std::cyl_bessel_j(1, z * A) / z +
                  jpA * A * std::cyl_bessel_j(0, z * A) / (z * z);
        }
        total += 2.0 * pi * (k.radial_tail(A) + osc);
    } else {
        throw std::invalid_argument("verify_symbol: d in {1,2}");
    }
    return std::abs(total - psi_val) / psi_val;
}

/// Vector-argument form; the kernel is radial so only |z| enters.
inline double verify_symbol(const JumpKernel& k, const std::vector<double>& zvec) {
    if (int(zvec.size()) != k.dimension())
        throw std::invalid_argument("verify_symbol: z dimension mismatch");
    double s = 0.0;
    for (double c : zvec) s += c * c;
    return verify_symbol(k, std::sqrt(s));
}

}  // namespace psidel
