#pragma once

// Log-gamma kernels (real and complex), Pochhammer symbols, and the
// normalized Pochhammer ratio used in large-parameter limit studies.

#include <cmath>
#include <complex>
#include <limits>

#include "mlfrac/core.hpp"

namespace mlfrac {

namespace detail {

inline bool is_nonpositive_integer(double x, double tol = 0.0) {
    if (x > 0.5) return false;
    const double r = std::nearbyint(x);
    return std::abs(x - r) <= tol;
}

// Sign of Gamma(x) for real non-pole x.
inline int gamma_sign(double x) {
    if (x > 0.0) return 1;
    // Gamma alternates sign on the intervals (-1,0), (-2,-1), ... :
    // negative on (-1,0), positive on (-2,-1), negative on (-3,-2), ...
    const long long fl = static_cast<long long>(std::floor(x));
    return (fl % 2 != 0) ? -1 : 1;
}

// ln|Gamma(x)| together with the sign of Gamma(x); valid for all real
// non-pole x. Thread-safe (does not rely on the signgam global).
inline double lgamma_signed(double x, int& sign) {
    if (is_nonpositive_integer(x)) {
        throw domain_error("gamma-pole", "log-gamma pole at non-positive integer");
    }
    sign = gamma_sign(x);
    return std::lgamma(x);
}

// Complex log-gamma on the full plane (poles excluded), principal-ish
// branch: real part is exact ln|Gamma|, imaginary part may differ from the
// principal arg by multiples of 2*pi (harmless under exp()).
//
// Strategy: reflection for Re z < 0.5, recurrence push to Re >= 15, then a
// Stirling series with eight Bernoulli-number correction terms.
inline std::complex<double> ln_gamma_complex_full(std::complex<double> z) {
    using cd = std::complex<double>;
    const double half_log_2pi = 0.91893853320467274178;

    if (z.imag() == 0.0) {
        // Real axis: delegate so that the branch (sign of Gamma) is explicit.
        if (is_nonpositive_integer(z.real())) {
            throw domain_error("gamma-pole", "log-gamma pole at non-positive integer");
        }
        if (z.real() > 0.0) return cd(std::lgamma(z.real()), 0.0);
        int sign = 0;
        const double lg = lgamma_signed(z.real(), sign);
        const double pi_const = 3.14159265358979323846;
        return cd(lg, sign < 0 ? pi_const : 0.0);
    }

    if (z.real() < 0.5) {
        // Reflection: lnGamma(z) = ln(pi) - ln_sin(pi z) - lnGamma(1 - z).
        // ln sin computed overflow-safely for large |Im z|.
        const double pi_const = 3.14159265358979323846;
        const cd one_minus = cd(1.0, 0.0) - z;
        // sin(pi z) = -(1/(2i)) e^{-i pi z} (1 - e^{2 i pi z})   (Im z > 0)
        //           =  (1/(2i)) e^{ i pi z} (1 - e^{-2 i pi z})  (Im z < 0)
        cd ln_sin;
        const cd ipi = cd(0.0, pi_const);
        if (z.imag() > 0.0) {
            ln_sin = -ipi * z + std::log(cd(1.0, 0.0) - std::exp(2.0 * ipi * z)) -
                     std::log(cd(0.0, 2.0)) + ipi;
        } else {
            ln_sin = ipi * z + std::log(cd(1.0, 0.0) - std::exp(-2.0 * ipi * z)) -
                     std::log(cd(0.0, 2.0));
        }
        return std::log(cd(pi_const, 0.0)) - ln_sin - ln_gamma_complex_full(one_minus);
    }

    // Recurrence: push the argument up to Re >= 15 for the Stirling series.
    cd shift(0.0, 0.0);
    cd w = z;
    while (w.real() < 15.0) {
        shift += std::log(w);
        w += 1.0;
    }

    // Stirling: lnGamma(w) ~ (w-1/2)ln w - w + ln(2 pi)/2 + sum B_{2n}/(2n(2n-1) w^{2n-1})
    static const double coef[] = {
        1.0 / 12.0,        -1.0 / 360.0,     1.0 / 1260.0,   -1.0 / 1680.0,
        1.0 / 1188.0,      -691.0 / 360360.0, 1.0 / 156.0,   -3617.0 / 122400.0,
    };
    const cd w2 = w * w;
    cd inv = 1.0 / w;
    cd series(0.0, 0.0);
    for (double c : coef) {
        series += c * inv;
        inv /= w2;
    }
    const cd result = (w - 0.5) * std::log(w) - w + half_log_2pi + series;
    return result - shift;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

// Natural log of Gamma(x) for real x > 0 (relative error ~1e-14 on
// [0.5, 170]); throws at the poles. For negative non-integer x the returned
// value is ln|Gamma(x)| (sign available through detail::lgamma_signed).
inline double ln_gamma(double x) {
    if (detail::is_nonpositive_integer(x)) {
        throw domain_error("gamma-pole", "ln_gamma pole at non-positive integer");
    }
    return std::lgamma(x);
}

// Complex log-gamma, supported for Re z > 0 (pole-free half-plane).
inline std::complex<double> ln_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && detail::is_nonpositive_integer(z.real())) {
        throw domain_error("gamma-pole", "ln_gamma pole at non-positive integer");
    }
    return detail::ln_gamma_complex_full(z);
}

// Rising factorial (b)_k = b (b+1) ... (b+k-1), with (b)_0 = 1.
// Uses the log-gamma ratio when both gamma arguments are valid, a direct
// product otherwise; overflow is reported as +/-infinity rather than an error.
inline double pochhammer(double b, unsigned k) {
    if (k == 0) return 1.0;
    if (b > 0.0) {
        const double lg = std::lgamma(b + static_cast<double>(k)) - std::lgamma(b);
        if (lg < 700.0) {
            return std::exp(lg);
        }
        return std::numeric_limits<double>::infinity();
    }
    double p = 1.0;
    for (unsigned j = 0; j < k; ++j) {
        p *= b + static_cast<double>(j);
    }
    return p;
}

// (gamma)_k / gamma^k, computed as prod_{j<k} (1 + j/gamma): cancellation-free
// and exact in the limit gamma -> infinity for fixed k.
inline double pochhammer_ratio(double gamma_val, unsigned k) {
    if (!(gamma_val > 0.0)) {
        throw domain_error("pochhammer-ratio", "pochhammer_ratio requires gamma > 0");
    }
    double p = 1.0;
    for (unsigned j = 0; j < k; ++j) {
        p *= 1.0 + static_cast<double>(j) / gamma_val;
    }
    return p;
}

}  // namespace mlfrac
