#pragma once

// The three-parameter Mittag-Leffler function and generalized hypergeometric
// series, built on the gamma kernels and (for the deep negative real axis)
// the Mellin-Barnes contour machinery.

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "mlfrac/core.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/mellin_barnes.hpp"

namespace mlfrac {

// ---------------------------------------------------------------------------
// Parameters and evaluation metadata
// ---------------------------------------------------------------------------

struct MLParams {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;

    MLParams() = default;
    MLParams(double a, double b, double g = 1.0) : alpha(a), beta(b), gamma(g) { validate(); }

    void validate() const {
        if (!(alpha > 0.0) || !std::isfinite(alpha) || !(gamma > 0.0) ||
            !std::isfinite(gamma) || !(beta >= 0.0) || !std::isfinite(beta)) {
            throw domain_error("ml-params",
                               "MLParams requires alpha > 0, beta >= 0, gamma > 0, all finite");
        }
    }
};

enum class MLRoute { series, series_ld, kummer, contour };

struct MLEvalInfo {
    MLRoute route = MLRoute::series;
    int terms_used = 0;
    // |next term| / (1 - ratio) when the final term ratio is < 1; the
    // a-priori truncation error bound of the stopped series.
    double truncation_bound = std::numeric_limits<double>::quiet_NaN();
    // eps * max|term| * n_terms / |sum|: estimated relative rounding error
    // from alternating-series cancellation plus the per-term error the
    // product recurrence accumulates over the run of the series.
    double cancellation_estimate = 0.0;
};

namespace detail {

// Reciprocal gamma for real arguments: 0 at the poles, sign-aware elsewhere.
inline double rgamma(double x) {
    if (is_nonpositive_integer(x, 0.0)) return 0.0;
    int sign = 0;
    const double lg = lgamma_signed(x, sign);
    if (lg > 709.0) return 0.0;  // 1/Gamma underflows
    return static_cast<double>(sign) * std::exp(-lg);
}

struct SeriesOutcome {
    double value = 0.0;
    bool converged = false;
    bool overflow = false;
    int terms = 0;
    double max_abs_term = 0.0;
    double truncation_bound = std::numeric_limits<double>::quiet_NaN();
};

// Direct Prabhakar series sum_{k} (g)_k z^k / (k! Gamma(a k + b)) for real z.
inline SeriesOutcome ml_series_real(double alpha, double beta, double gamma_idx, double z) {
    SeriesOutcome out;
    KahanSum sum;
    double r = 1.0;  // (g)_k z^k / k!
    double last_term = 0.0;
    int tiny_streak = 0;
    int k = 0;
    for (; k < policy::k_max; ++k) {
        const double arg = alpha * k + beta;
        const double rg = rgamma(arg);
        const double term = r * rg;
        if (rg == 0.0 && r != 0.0 && !is_nonpositive_integer(arg, 0.0)) {
            // 1/Gamma underflowed while the Pochhammer-power factor is still
            // live. The true term magnitude is exp(ln|r| - lnGamma(arg)); if
            // that still exceeds the convergence threshold, the zero term is
            // an underflow artifact, not convergence — without this check the
            // series would silently truncate mid-growth (e.g. beta ~ 128 with
            // moderately large |z|, where the true term peak sits far beyond
            // the point where Gamma(alpha k + beta) overflows).
            int sg = 0;
            const double lg = lgamma_signed(arg, sg);
            const double ln_true = std::log(std::abs(r)) - lg;
            const double ln_floor = std::log(
                policy::eps_series * std::max(std::abs(sum.value()), 1e-300));
            if (ln_true > ln_floor) {
                out.value = sum.value();
                out.terms = k;
                out.converged = false;
                return out;
            }
        }
        sum.add(term);
        out.max_abs_term = std::max(out.max_abs_term, std::abs(term));
        last_term = term;
        r *= z * (gamma_idx + k) / (k + 1.0);
        if (!std::isfinite(r) || std::abs(r) > 1e290) {
            out.overflow = true;
            out.terms = k + 1;
            out.value = sum.value();
            return out;
        }
        if (k >= 2 && std::abs(term) <= policy::eps_series * std::abs(sum.value())) {
            if (++tiny_streak >= 2) {
                ++k;
                break;
            }
        } else {
            tiny_streak = 0;
        }
    }
    out.value = sum.value();
    out.terms = k;
    out.converged = (tiny_streak >= 2);
    const double next = r * rgamma(alpha * k + beta);
    if (last_term != 0.0) {
        const double rho = std::abs(next / last_term);
        if (rho < 1.0) {
            out.truncation_bound = std::abs(next) / (1.0 - rho);
        }
    } else if (next == 0.0) {
        out.truncation_bound = 0.0;
    }
    return out;
}

// Reciprocal gamma in extended precision; arguments here are alpha*k + beta,
// never negative.
inline long double rgamma_ld(long double x) {
    if (is_nonpositive_integer(static_cast<double>(x), 0.0)) return 0.0L;
    const long double lg = std::lgamma(std::abs(x));
    if (x > 0.0L) {
        if (lg > 11350.0L) return 0.0L;  // below extended-precision range
        return std::exp(-lg);
    }
    int sign = 0;
    const double lgd = lgamma_signed(static_cast<double>(x), sign);
    if (lgd > 11350.0) return 0.0L;
    return static_cast<long double>(sign) * std::exp(-static_cast<long double>(lgd));
}

// The Prabhakar series again, accumulated in extended precision. The rounding
// floor drops by roughly three decades, which clears the cancellation guard
// for the moderate-|z| band on the negative axis where the plain-double sum
// fails it; bulk evaluators (convolution kernels, transforms) live in that
// band, and the contour fallback costs ~1000x more per call there.
inline SeriesOutcome ml_series_real_ld(double alpha, double beta, double gamma_idx, double z) {
    constexpr long double eps_ld = std::numeric_limits<long double>::epsilon();
    SeriesOutcome out;
    long double sum = 0.0L;
    long double comp = 0.0L;  // Neumaier carry
    long double r = 1.0L;     // (g)_k z^k / k!
    long double max_abs = 0.0L;
    long double last_term = 0.0L;
    const long double zl = z;
    const long double gl = gamma_idx;
    const long double al = alpha;
    const long double bl = beta;
    int tiny_streak = 0;
    int k = 0;
    for (; k < policy::k_max; ++k) {
        // The log-gamma argument must be formed in extended precision too:
        // double rounding here puts a ~1e-16 relative wobble on each term,
        // which the cancellation ratio amplifies right back above the guard.
        const long double arg = al * k + bl;
        const long double rg = rgamma_ld(arg);
        const long double term = r * rg;
        if (rg == 0.0L && r != 0.0L && !is_nonpositive_integer(static_cast<double>(arg), 0.0)) {
            // Same underflow-artifact detection as the double pass: a zeroed
            // 1/Gamma with a live power factor is only convergence if the true
            // term magnitude is below the series floor.
            const long double ln_true = std::log(std::abs(r)) - std::lgamma(arg);
            const long double ln_floor = std::log(
                eps_ld * std::max(std::abs(sum), static_cast<long double>(1e-300)));
            if (ln_true > ln_floor) {
                out.value = static_cast<double>(sum + comp);
                out.terms = k;
                out.converged = false;
                return out;
            }
        }
        const long double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        max_abs = std::max(max_abs, std::abs(term));
        last_term = term;
        r *= zl * (gl + k) / (k + 1.0L);
        if (!(std::abs(r) <= 1e1000L)) {
            out.overflow = true;
            out.terms = k + 1;
            out.value = static_cast<double>(sum + comp);
            return out;
        }
        if (k >= 2 && std::abs(term) <= eps_ld * std::abs(sum)) {
            if (++tiny_streak >= 2) {
                ++k;
                break;
            }
        } else {
            tiny_streak = 0;
        }
    }
    out.value = static_cast<double>(sum + comp);
    out.terms = k;
    out.converged = (tiny_streak >= 2);
    out.max_abs_term = static_cast<double>(std::min(
        max_abs, static_cast<long double>(std::numeric_limits<double>::max())));
    const long double next = r * rgamma_ld(al * k + bl);
    if (last_term != 0.0L) {
        const long double rho = std::abs(next / last_term);
        if (rho < 1.0L) {
            out.truncation_bound = static_cast<double>(std::abs(next) / (1.0L - rho));
        }
    } else if (next == 0.0L) {
        out.truncation_bound = 0.0;
    }
    return out;
}

// Confluent-hypergeometric route for alpha == 1:
//   E^g_(1,b)(z) = e^z * 1F1(b-g; b; -z) / Gamma(b),
// cancellation-free on the negative axis. Computed in log space so the
// e^z growth of the 1F1 factor cannot overflow the intermediate.
inline double ml_alpha1_negative(double beta, double gamma_idx, double z) {
    // Sum S = 1F1(beta-gamma; beta; w), w = -z >= 0.
    const double w = -z;
    const double a = beta - gamma_idx;
    if (is_nonpositive_integer(beta, 0.0)) {
        // Gamma(beta) pole: the prefactor 1/Gamma(beta) annihilates the
        // value only formally; fall back to the plain series.
        const SeriesOutcome s = ml_series_real(1.0, beta, gamma_idx, z);
        return s.value;
    }
    KahanSum sum;
    double term = 1.0;
    double max_abs = 0.0;
    int k = 0;
    int tiny_streak = 0;
    double scale = 0.0;  // accumulated log rescaling applied to `term`
    for (; k < policy::k_max; ++k) {
        sum.add(term);
        max_abs = std::max(max_abs, std::abs(term));
        term *= (a + k) * w / ((k + 1.0) * (beta + k));
        if (std::abs(term) > 1e280) {
            // Rescale to keep the running sum representable.
            const double s = sum.value();
            const double shift = std::log(std::max(std::abs(term), std::abs(s)));
            scale += shift;
            term *= std::exp(-shift);
            sum = KahanSum();
            sum.add(s * std::exp(-shift));
            max_abs *= std::exp(-shift);
        }
        if (k >= 2 && std::abs(term) <= policy::eps_series * std::abs(sum.value())) {
            if (++tiny_streak >= 2) break;
        } else {
            tiny_streak = 0;
        }
    }
    const double s = sum.value();
    const int sgn = (s >= 0.0) ? 1 : -1;
    const double ln_mag = std::log(std::abs(s)) + scale + z - std::lgamma(beta);
    if (ln_mag > 709.0) {
        return sgn * std::numeric_limits<double>::infinity();
    }
    return sgn * std::exp(ln_mag);
}

inline double ml_contour_negative(double alpha, double beta, double gamma_idx, double z) {
    if (!(alpha < 2.0)) {
        throw convergence_error("ml-contour-range",
                                "contour route requires alpha < 2");
    }
    const double t = -z;
    const double line = (gamma_idx > 1.0) ? 0.5 : gamma_idx / 2.0;
    return contour_eval(ml_mb_integrand(alpha, beta, gamma_idx), ContourSpec(line), t);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// ml_prabhakar
// ---------------------------------------------------------------------------

inline double ml_prabhakar(const MLParams& p, double z, MLEvalInfo& info) {
    p.validate();
    if (!std::isfinite(z)) {
        throw domain_error("ml-z", "ml_prabhakar requires finite z");
    }
    info = MLEvalInfo{};

    if (p.alpha == 1.0 && z <= 0.0) {
        if (z < -650.0) {
            info.route = MLRoute::contour;
            return detail::ml_contour_negative(p.alpha, p.beta, p.gamma, z);
        }
        info.route = MLRoute::kummer;
        return detail::ml_alpha1_negative(p.beta, p.gamma, z);
    }
    if (z < -policy::z_switch) {
        info.route = MLRoute::contour;
        return detail::ml_contour_negative(p.alpha, p.beta, p.gamma, z);
    }

    const detail::SeriesOutcome s = detail::ml_series_real(p.alpha, p.beta, p.gamma, z);
    const double denom = std::max(std::abs(s.value), 1e-300);
    const double cancel =
        policy::eps_series * s.max_abs_term * (s.terms + 1.0) / denom;
    const bool reject = s.overflow || !s.converged || cancel > policy::cancel_guard;
    if (reject) {
        if (z < 0.0) {
            // Extended-precision rescue before falling back to the contour:
            // the ~1e3 lower accumulation floor clears the guard across the
            // moderate-cancellation band that bulk evaluations live in.
            const detail::SeriesOutcome s2 =
                detail::ml_series_real_ld(p.alpha, p.beta, p.gamma, z);
            const double denom2 = std::max(std::abs(s2.value), 1e-300);
            const double cancel2 =
                static_cast<double>(std::numeric_limits<long double>::epsilon()) *
                s2.max_abs_term * (s2.terms + 1.0) / denom2;
            if (s2.converged && !s2.overflow && cancel2 <= policy::cancel_guard) {
                info.route = MLRoute::series_ld;
                info.terms_used = s2.terms;
                info.truncation_bound = s2.truncation_bound;
                info.cancellation_estimate = cancel2;
                return s2.value;
            }
            info.route = MLRoute::contour;
            return detail::ml_contour_negative(p.alpha, p.beta, p.gamma, z);
        }
        if (s.overflow) {
            // Positive-axis blowup: the function value itself is out of range.
            return std::numeric_limits<double>::infinity();
        }
        throw convergence_error("ml-kmax",
                                "ml_prabhakar series did not converge within K_max terms");
    }
    info.route = MLRoute::series;
    info.terms_used = s.terms;
    info.truncation_bound = s.truncation_bound;
    info.cancellation_estimate = cancel;
    return s.value;
}

inline double ml_prabhakar(const MLParams& p, double z) {
    MLEvalInfo info;
    return ml_prabhakar(p, z, info);
}

// Complex evaluation, supported on Re z >= 0 (the series region; the
// negative real axis is covered by the real overload).
inline std::complex<double> ml_prabhakar(const MLParams& p, std::complex<double> z,
                                         MLEvalInfo& info) {
    p.validate();
    if (z.imag() == 0.0) {
        return {ml_prabhakar(p, z.real(), info), 0.0};
    }
    if (z.real() < 0.0) {
        throw domain_error("ml-complex-domain",
                           "complex ml_prabhakar is limited to Re z >= 0");
    }
    info = MLEvalInfo{};
    detail::ComplexKahan sum;
    std::complex<double> r(1.0, 0.0);
    double max_abs = 0.0;
    int tiny_streak = 0;
    int k = 0;
    for (; k < policy::k_max; ++k) {
        const std::complex<double> term = r * detail::rgamma(p.alpha * k + p.beta);
        sum.add(term);
        max_abs = std::max(max_abs, std::abs(term));
        r *= z * (p.gamma + static_cast<double>(k)) / (k + 1.0);
        if (!std::isfinite(std::abs(r)) || std::abs(r) > 1e290) {
            throw convergence_error("ml-overflow", "complex series overflow");
        }
        if (k >= 2 && std::abs(term) <= policy::eps_series * std::abs(sum.value())) {
            if (++tiny_streak >= 2) break;
        } else {
            tiny_streak = 0;
        }
    }
    if (tiny_streak < 2) {
        throw convergence_error("ml-kmax",
                                "ml_prabhakar series did not converge within K_max terms");
    }
    info.route = MLRoute::series;
    info.terms_used = k;
    info.cancellation_estimate = policy::eps_series * max_abs * (k + 1.0) /
                                 std::max(std::abs(sum.value()), 1e-300);
    return sum.value();
}

inline std::complex<double> ml_prabhakar(const MLParams& p, std::complex<double> z) {
    MLEvalInfo info;
    return ml_prabhakar(p, z, info);
}

// ---------------------------------------------------------------------------
// Generalized hypergeometric series
// ---------------------------------------------------------------------------

struct PfqSpec {
    std::vector<double> upper;
    std::vector<double> lower;

    PfqSpec() = default;
    PfqSpec(std::vector<double> up, std::vector<double> low)
        : upper(std::move(up)), lower(std::move(low)) {
        validate();
    }

    void validate() const {
        for (double c : lower) {
            if (detail::is_nonpositive_integer(c, 0.0)) {
                throw domain_error("pfq-lower",
                                   "lower pFq parameters must avoid non-positive integers");
            }
        }
    }
};

inline double hyper_pfq(const PfqSpec& spec, double t) {
    spec.validate();
    if (!std::isfinite(t)) {
        throw domain_error("pfq-t", "hyper_pfq requires finite t");
    }
    const std::size_t p = spec.upper.size();
    const std::size_t q = spec.lower.size();
    if (p > q + 1 && t != 0.0) {
        throw domain_error("pfq-divergent",
                           "series diverges for p > q + 1 away from t = 0");
    }
    if (p == q + 1 && std::abs(t) >= 1.0) {
        throw domain_error("pfq-domain", "|t| < 1 required when p == q + 1");
    }
    KahanSum sum;
    double term = 1.0;
    int tiny_streak = 0;
    for (int k = 0; k < policy::k_max; ++k) {
        sum.add(term);
        if (term == 0.0) {
            return sum.value();  // terminating series (non-positive-integer upper)
        }
        double next = term * t / (k + 1.0);
        for (double a : spec.upper) next *= a + k;
        for (double c : spec.lower) next /= c + k;
        term = next;
        if (k >= 2 && std::abs(term) <= policy::eps_series * std::abs(sum.value())) {
            if (++tiny_streak >= 2) {
                return sum.value();
            }
        } else {
            tiny_streak = 0;
        }
    }
    throw convergence_error("pfq-kmax", "hyper_pfq did not converge within K_max terms");
}

}  // namespace mlfrac
