#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace psidel {

using complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// log(1+z) for complex z without cancellation at small |z| (Kahan's trick).
inline complex log1p_c(complex z) {
    const complex u = 1.0 + z;
    if (u == complex(1.0, 0.0)) return z;
    return std::log(u) * (z / (u - 1.0));
}

/// exp(z)-1 for complex z without cancellation at small |z|.
inline complex expm1_c(complex z) {
    const complex u = std::exp(z);
    if (u == complex(1.0, 0.0)) return z;
    return (u - 1.0) * (z / std::log(u));
}

/// 1 - (1+x) e^{-x}, stable for small x >= 0.
inline double one_minus_e_onepx(double x) {
    if (x < 1e-3) return x * x * (0.5 - x / 3.0 + x * x / 8.0);
    return 1.0 - (1.0 + x) * std::exp(-x);
}

/// Polynomial extrapolation of (x_i, y_i) to x = 0 (Neville's scheme).
/// Returns the table diagonal: entry m is the degree-m extrapolant.
inline std::vector<double> neville_to_zero(const std::vector<double>& xs,
                                           const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    if (n == 0 || ys.size() != n) throw std::invalid_argument("neville_to_zero: bad input");
    std::vector<double> t(ys), diag;
    diag.reserve(n);
    diag.push_back(t[0]);
    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t i = 0; i + m < n; ++i)
            t[i] = (xs[i] * t[i + 1] - xs[i + m] * t[i]) / (xs[i] - xs[i + m]);
        diag.push_back(t[0]);
    }
    return diag;
}

inline std::vector<double> logspace(double lo, double hi, std::size_t n) {
    if (n < 2 || lo <= 0 || hi <= lo) throw std::invalid_argument("logspace: bad range");
    std::vector<double> out(n);
    const double la = std::log(lo), lb = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::exp(la + (lb - la) * double(i) / double(n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

/// Monotone piecewise-cubic interpolant (Fritsch-Carlson slopes).
/// Used for cached kernel samples on log-log axes.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 3 || y_.size() != n) throw std::invalid_argument("pchip: need >= 3 points");
        for (std::size_t i = 1; i < n; ++i)
            if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("pchip: x not increasing");
        std::vector<double> d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        m_.assign(n, 0.0);
        m_[0] = d[0];
        m_[n - 1] = d[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (d[i - 1] * d[i] <= 0.0) { m_[i] = 0.0; continue; }
            const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
            const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
            m_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }

    bool covers(double x) const { return !x_.empty() && x >= x_.front() && x <= x_.back(); }
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

    double operator()(double x) const {
        const std::size_t n = x_.size();
        std::size_t lo = 0, hi = n - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (x_[mid] <= x ? lo : hi) = mid;
        }
        const double h = x_[lo + 1] - x_[lo];
        const double t = (x - x_[lo]) / h;
        const double t2 = t * t, t3 = t2 * t;
        return y_[lo] * (2 * t3 - 3 * t2 + 1) + h * m_[lo] * (t3 - 2 * t2 + t) +
               y_[lo + 1] * (-2 * t3 + 3 * t2) + h * m_[lo + 1] * (t3 - t2);
    }

private:
    std::vector<double> x_, y_, m_;
};

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::size_t n = 0;
};

/// Sample mean and standard error of a series (two-pass).
inline MeanStderr mean_stderr(const std::vector<double>& v) {
    MeanStderr out;
    out.n = v.size();
    if (out.n < 2) throw std::invalid_argument("mean_stderr: need n >= 2");
    double s = 0.0;
    for (double x : v) s += x;
    out.mean = s / double(out.n);
    double q = 0.0;
    for (double x : v) q += (x - out.mean) * (x - out.mean);
    out.stderr_ = std::sqrt(q / double(out.n - 1)) / std::sqrt(double(out.n));
    return out;
}

}  // namespace psidel
