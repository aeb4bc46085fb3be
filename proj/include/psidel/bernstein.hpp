#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psidel/numerics.hpp"

namespace psidel {

enum class BernsteinKind { Stable, Relativistic, SumStable, LogDamped, LogBoosted };

inline const char* to_string(BernsteinKind k) {
    switch (k) {
        case BernsteinKind::Stable: return "stable";
        case BernsteinKind::Relativistic: return "relativistic";
        case BernsteinKind::SumStable: return "sum-stable";
        case BernsteinKind::LogDamped: return "log-damped";
        case BernsteinKind::LogBoosted: return "log-boosted";
    }
    return "?";
}

/// A member of the closed catalog of Bernstein functions with vanishing
/// drift. Parameters are validated at construction; an invalid parameter
/// set never produces a usable object.
class BernsteinFunction {
public:
    static BernsteinFunction stable(double alpha) {
        require(alpha > 0 && alpha <= 2, "stable: alpha in (0,2]");
        return {BernsteinKind::Stable, alpha, 0.0, 0.0};
    }
    static BernsteinFunction relativistic(double alpha, double m) {
        require(alpha > 0 && alpha < 2, "relativistic: alpha in (0,2)");
        require(m > 0, "relativistic: m > 0");
        return {BernsteinKind::Relativistic, alpha, 0.0, m};
    }
    static BernsteinFunction sum_stable(double alpha, double beta) {
        require(alpha > 0 && alpha <= 2, "sum-stable: alpha in (0,2]");
        require(beta > 0 && beta <= 2, "sum-stable: beta in (0,2]");
        return {BernsteinKind::SumStable, alpha, beta, 0.0};
    }
    static BernsteinFunction log_damped(double alpha, double beta) {
        require(alpha > 0 && alpha <= 2, "log-damped: alpha in (0,2]");
        require(beta >= 0 && beta < alpha, "log-damped: beta in [0,alpha)");
        return {BernsteinKind::LogDamped, alpha, beta, 0.0};
    }
    static BernsteinFunction log_boosted(double alpha, double beta) {
        require(alpha > 0 && alpha < 2, "log-boosted: alpha in (0,2)");
        require(beta > 0 && beta < 2 - alpha, "log-boosted: beta in (0,2-alpha)");
        return {BernsteinKind::LogBoosted, alpha, beta, 0.0};
    }

    BernsteinKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double mass() const { return m_; }
    /// Drift coefficient of the subordinator; identically zero here
    /// (pure-jump setting).
    double drift() const { return 0.0; }

    /// Relativistic shift theta = m^{2/alpha}.
    double theta() const { return std::pow(m_, 2.0 / alpha_); }

    double operator()(double x) const {
        if (x < 0) throw std::domain_error("BernsteinFunction: x >= 0 required");
        if (x == 0) return 0.0;
        return eval_complex(complex(x, 0.0)).real();
    }

    /// Principal-branch evaluation off the cut (-inf, 0]; all catalog
    /// formulas extend analytically there.
    complex eval_complex(complex z) const {
        const double a = alpha_ / 2, b = beta_ / 2;
        switch (kind_) {
            case BernsteinKind::Stable:
                return std::pow(z, a);
            case BernsteinKind::Relativistic:
                // m((1+z/theta)^{a}-1) evaluated without cancellation
                return m_ * expm1_c(a * log1p_c(z / theta()));
            case BernsteinKind::SumStable:
                return std::pow(z, a) + std::pow(z, b);
            case BernsteinKind::LogDamped:
                return std::pow(z, a) * std::pow(log1p_c(z), -b);
            case BernsteinKind::LogBoosted:
                return std::pow(z, a) * std::pow(log1p_c(z), b);
        }
        throw std::logic_error("unreachable");
    }

    complex derivative_complex(complex z) const {
        const double a = alpha_ / 2, b = beta_ / 2;
        switch (kind_) {
            case BernsteinKind::Stable:
                return a * std::pow(z, a - 1.0);
            case BernsteinKind::Relativistic:
                return a * std::pow(z + theta(), a - 1.0);
            case BernsteinKind::SumStable:
                return a * std::pow(z, a - 1.0) + b * std::pow(z, b - 1.0);
            case BernsteinKind::LogDamped: {
                const complex L = log1p_c(z);
                return std::pow(z, a - 1.0) * std::pow(L, -b) *
                       (a - b * z / ((1.0 + z) * L));
            }
            case BernsteinKind::LogBoosted: {
                const complex L = log1p_c(z);
                return std::pow(z, a - 1.0) * std::pow(L, b) *
                       (a + b * z / ((1.0 + z) * L));
            }
        }
        throw std::logic_error("unreachable");
    }

    /// True when an exact subordinator increment sampler exists
    /// (stable / relativistic / sum-stable).
    bool has_exact_sampler() const {
        return kind_ == BernsteinKind::Stable || kind_ == BernsteinKind::Relativistic ||
               kind_ == BernsteinKind::SumStable;
    }

    /// True when the Levy density of the subordinator exists as a function
    /// (excludes the degenerate alpha = 2 cases, which carry drift mass).
    bool has_levy_density() const {
        switch (kind_) {
            case BernsteinKind::Stable: return alpha_ < 2;
            case BernsteinKind::SumStable: return alpha_ < 2 && beta_ < 2;
            case BernsteinKind::Relativistic:
            case BernsteinKind::LogDamped:
            case BernsteinKind::LogBoosted: return true;
        }
        return false;
    }

    /// Density obtained by numerical inversion rather than a closed form.
    bool density_is_approximate() const {
        return kind_ == BernsteinKind::LogDamped || kind_ == BernsteinKind::LogBoosted;
    }

    std::string describe() const {
        std::string s = to_string(kind_);
        s += "(alpha=" + std::to_string(alpha_);
        if (kind_ == BernsteinKind::SumStable || kind_ == BernsteinKind::LogDamped ||
            kind_ == BernsteinKind::LogBoosted)
            s += ", beta=" + std::to_string(beta_);
        if (kind_ == BernsteinKind::Relativistic) s += ", m=" + std::to_string(m_);
        return s + ")";
    }

private:
    BernsteinFunction(BernsteinKind k, double a, double b, double m)
        : kind_(k), alpha_(a), beta_(b), m_(m) {}
    static void require(bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("BernsteinFunction: ") + what);
    }

    BernsteinKind kind_;
    double alpha_, beta_, m_;
};

// ---------------------------------------------------------------------------
// Weak scaling certificates
// ---------------------------------------------------------------------------

enum class ScalingSide { Lower, Upper };

struct ScalingCertificate {
    ScalingSide side = ScalingSide::Lower;
    double mu = 0.0;     // exponent
    double c = 1.0;      // constant, (0,1] for lower, [1,inf) for upper
    double theta = 0.0;  // threshold

    ScalingCertificate(ScalingSide s, double mu_, double c_, double theta_)
        : side(s), mu(mu_), c(c_), theta(theta_) {
        if (mu <= 0) throw std::invalid_argument("ScalingCertificate: mu > 0 required");
        if (theta < 0) throw std::invalid_argument("ScalingCertificate: theta >= 0 required");
        if (s == ScalingSide::Lower && !(c > 0 && c <= 1))
            throw std::invalid_argument("ScalingCertificate: lower c in (0,1]");
        if (s == ScalingSide::Upper && !(c >= 1))
            throw std::invalid_argument("ScalingCertificate: upper c in [1,inf)");
    }
};

/// The certificates tabulated for the catalog members (lower and upper
/// scaling exponents with their thresholds). The relativistic family also
/// carries the alternative upper certificate with exponent alpha/2 valid
/// above a positive threshold; its constant is the exact corner value.
inline std::vector<ScalingCertificate> default_certificates(const BernsteinFunction& psi) {
    const double a = psi.alpha(), b = psi.beta();
    std::vector<ScalingCertificate> out;
    switch (psi.kind()) {
        case BernsteinKind::Stable:
            out.emplace_back(ScalingSide::Lower, a / 2, 1.0, 0.0);
            out.emplace_back(ScalingSide::Upper, a / 2, 1.0, 0.0);
            break;
        case BernsteinKind::Relativistic: {
            out.emplace_back(ScalingSide::Lower, a / 2, 1.0, 0.0);
            out.emplace_back(ScalingSide::Upper, 1.0, 1.0, 0.0);
            const double th = psi.theta();
            const double cbar = std::pow(th, a / 2) / psi(th);
            out.emplace_back(ScalingSide::Upper, a / 2, cbar * (1 + 1e-12), th);
            break;
        }
        case BernsteinKind::SumStable:
            out.emplace_back(ScalingSide::Lower, std::min(a, b) / 2, 1.0, 0.0);
            out.emplace_back(ScalingSide::Upper, std::max(a, b) / 2, 1.0, 0.0);
            break;
        case BernsteinKind::LogDamped:
            out.emplace_back(ScalingSide::Lower, (a - b) / 2, 1.0, 0.0);
            out.emplace_back(ScalingSide::Upper, a / 2, 1.0, 0.0);
            break;
        case BernsteinKind::LogBoosted:
            out.emplace_back(ScalingSide::Lower, a / 2, 1.0, 0.0);
            out.emplace_back(ScalingSide::Upper, (a + b) / 2, 1.0, 0.0);
            break;
    }
    return out;
}

struct ScalingGrid {
    double x_lo = 1e-6;
    double x_hi = 1e6;
    double gamma_hi = 1e4;
    std::size_t pts_per_decade = 64;

    static ScalingGrid default_for(const ScalingCertificate& cert) {
        ScalingGrid g;
        g.x_hi = 1e6 * std::max(cert.theta, 1.0);
        g.x_lo = cert.theta > 0 ? cert.theta * (1 + 1e-6) : 1e-6;
        return g;
    }
};

struct ScalingReport {
    bool holds = false;
    double worst_ratio = 0.0;  // min over the lattice of lhs/rhs; holds iff >= 1
    double witness_x = 0.0;    // violating pair when holds is false
    double witness_gamma = 0.0;
};

/// Finite-lattice certificate validator for WLSC/WUSC. Not a prover: it
/// checks Psi(g x) >= c g^mu Psi(x) (lower) or <= (upper) at every lattice
/// point of the x-gamma grid.
inline ScalingReport check_scaling(const BernsteinFunction& psi, const ScalingCertificate& cert,
                                   const ScalingGrid& grid) {
    if (!(grid.x_hi > grid.x_lo) || !(grid.gamma_hi >= 1.0) || grid.pts_per_decade == 0)
        throw std::invalid_argument("check_scaling: degenerate grid");
    const double decades_x = std::log10(grid.x_hi / grid.x_lo);
    const double decades_g = std::log10(grid.gamma_hi);
    const std::size_t nx = std::max<std::size_t>(2, std::size_t(decades_x * grid.pts_per_decade) + 1);
    const std::size_t ng = std::max<std::size_t>(2, std::size_t(decades_g * grid.pts_per_decade) + 1);
    const auto xs = logspace(grid.x_lo, grid.x_hi, nx);
    const auto gs = logspace(1.0, grid.gamma_hi, ng);

    ScalingReport rep;
    rep.worst_ratio = std::numeric_limits<double>::infinity();
    rep.holds = true;
    // equality cases sit exactly on the bound; allow rounding slack
    const double slack = 1e-12;
    for (double x : xs) {
        const double px = psi(x);
        for (double g : gs) {
            const double lhs = psi(g * x);
            const double rhs = cert.c * std::pow(g, cert.mu) * px;
            const double ratio = cert.side == ScalingSide::Lower ? lhs / rhs : rhs / lhs;
            if (ratio < rep.worst_ratio) {
                rep.worst_ratio = ratio;
                rep.witness_x = x;
                rep.witness_gamma = g;
            }
        }
    }
    rep.holds = rep.worst_ratio >= 1.0 - slack;
    return rep;
}

}  // namespace psidel
