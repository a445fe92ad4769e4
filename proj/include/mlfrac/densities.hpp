#pragma once

// The density family built around the generalized Mittag-Leffler law: gamma,
// generalized ML, generalized gamma, Weibull, and the one-sided Levy density,
// together with their Laplace/Mellin transforms (closed form and quadrature),
// the large-index limit study against the Levy density, the index-redundancy
// check, and the pathway-model ratio.

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <variant>
#include <vector>

#include "mlfrac/core.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/mellin_barnes.hpp"
#include "mlfrac/special.hpp"

namespace mlfrac {

// ---------------------------------------------------------------------------
// Density specifications
// ---------------------------------------------------------------------------

// gamma^gamma / Gamma(gamma) * x^{gamma-1} e^{-gamma x}, unit mean.
struct GammaDensity {
    double gamma_idx = 1.0;

    GammaDensity() = default;
    explicit GammaDensity(double g) : gamma_idx(g) { validate(); }

    void validate() const {
        if (!(gamma_idx > 0.0) || !std::isfinite(gamma_idx)) {
            throw domain_error("density-params", "GammaDensity requires gamma > 0");
        }
    }
};

// x^{alpha*gamma-1} gamma^gamma E^gamma_{alpha,alpha*gamma}(-gamma x^alpha).
// alpha == 1 collapses the law exactly onto GammaDensity.
struct GMLDensity {
    double alpha = 0.5;
    double gamma_idx = 1.0;

    GMLDensity() = default;
    GMLDensity(double a, double g) : alpha(a), gamma_idx(g) { validate(); }

    void validate() const {
        if (!(alpha > 0.0) || !(alpha <= 1.0) || !(gamma_idx > 0.0) ||
            !std::isfinite(gamma_idx)) {
            throw domain_error("density-params",
                               "GMLDensity requires 0 < alpha <= 1 and gamma > 0");
        }
    }
};

// alpha * gamma^gamma / Gamma(gamma) * x^{alpha*gamma-1} e^{-gamma x^alpha}.
struct GenGammaDensity {
    double alpha = 1.0;
    double gamma_idx = 1.0;

    GenGammaDensity() = default;
    GenGammaDensity(double a, double g) : alpha(a), gamma_idx(g) { validate(); }

    void validate() const {
        if (!(alpha > 0.0) || !std::isfinite(alpha) || !(gamma_idx > 0.0) ||
            !std::isfinite(gamma_idx)) {
            throw domain_error("density-params",
                               "GenGammaDensity requires alpha > 0 and gamma > 0");
        }
    }
};

// delta * b * x^{delta-1} e^{-b x^delta}.
struct WeibullDensity {
    double delta = 1.0;
    double b = 1.0;

    WeibullDensity() = default;
    WeibullDensity(double d, double scale) : delta(d), b(scale) { validate(); }

    void validate() const {
        if (!(delta > 0.0) || !std::isfinite(delta) || !(b > 0.0) || !std::isfinite(b)) {
            throw domain_error("density-params", "WeibullDensity requires delta > 0, b > 0");
        }
    }
};

// One-sided alpha-stable density with Laplace transform e^{-s^alpha}.
struct LevyDensity {
    double alpha = 0.5;

    LevyDensity() = default;
    explicit LevyDensity(double a) : alpha(a) { validate(); }

    void validate() const {
        if (!(alpha > 0.0) || !(alpha < 1.0)) {
            throw domain_error("density-params", "LevyDensity requires 0 < alpha < 1");
        }
    }
};

using DensitySpec =
    std::variant<GammaDensity, GMLDensity, GenGammaDensity, WeibullDensity, LevyDensity>;

inline void validate(const DensitySpec& d) {
    std::visit([](const auto& v) { v.validate(); }, d);
}

// ---------------------------------------------------------------------------
// Pointwise evaluation
// ---------------------------------------------------------------------------

namespace detail {

inline double gamma_density_value(double g, double x) {
    return std::exp(g * std::log(g) - ln_gamma(g) + (g - 1.0) * std::log(x) - g * x);
}

inline double gengamma_density_value(double alpha, double g, double x) {
    return std::exp(std::log(alpha) + g * std::log(g) - ln_gamma(g) +
                    (alpha * g - 1.0) * std::log(x) - g * std::pow(x, alpha));
}

// Coefficient of x^{-alpha*k-1} in the descending expansion shared by the
// Levy density (gamma_idx = +inf) and the generalized ML density:
//   c_k = (-1)^{k+1} [(g)_k / g^k] Gamma(alpha k + 1) sin(pi alpha k) / (pi k!)
// Returned as sign * exp(ln_mag). For the Levy case the bracket is 1.
inline void heavy_tail_coeff(double alpha, double gamma_idx, int k, double& sign,
                             double& ln_mag) {
    const double pi_const = 3.14159265358979323846;
    // sin(pi*alpha*k) by reflection off the nearest integer: exact zeros at
    // rational alpha (the plain sin leaves ~1e-16 residue there, which would
    // masquerade as a genuine term) and full precision for large k.
    const double ak = alpha * static_cast<double>(k);
    const double m = std::round(ak);
    const double r = ak - m;
    const double sk = std::abs(r) < 1e-9
                          ? 0.0
                          : (std::fmod(m, 2.0) == 0.0 ? 1.0 : -1.0) * std::sin(pi_const * r);
    if (sk == 0.0) {
        sign = 0.0;
        ln_mag = -std::numeric_limits<double>::infinity();
        return;
    }
    sign = (k % 2 == 0 ? -1.0 : 1.0) * (sk >= 0.0 ? 1.0 : -1.0);
    ln_mag = ln_gamma(alpha * k + 1.0) + std::log(std::abs(sk)) -
             std::log(pi_const) - ln_gamma(k + 1.0);
    if (std::isfinite(gamma_idx)) {
        ln_mag += ln_gamma(gamma_idx + k) - ln_gamma(gamma_idx) -
                  k * std::log(gamma_idx);
    }
}

// Descending series for the Levy density; convergent for every x > 0 when
// alpha < 1, and free of cancellation for x >= 2 where it is used.
inline double levy_descending_series(double alpha, double x) {
    const double lx = std::log(x);
    KahanSum sum;
    int tiny_streak = 0;
    for (int k = 1; k < policy::k_max; ++k) {
        double sign = 0.0;
        double ln_mag = 0.0;
        heavy_tail_coeff(alpha, std::numeric_limits<double>::infinity(), k, sign, ln_mag);
        const double lt = ln_mag + (-alpha * k - 1.0) * lx;
        const double term = std::isfinite(lt) ? sign * std::exp(lt) : 0.0;
        sum.add(term);
        if (std::abs(term) <= 1e-17 * std::abs(sum.value())) {
            if (++tiny_streak >= 2) return sum.value();
        } else {
            tiny_streak = 0;
        }
    }
    throw convergence_error("levy-series", "descending series did not converge");
}

// Deep-left-tail exponent: the density behaves like e^{-zeta} times an
// algebraic prefactor with zeta = (1-a) a^{a/(1-a)} x^{-a/(1-a)}.
inline double levy_zeta(double alpha, double x) {
    return (1.0 - alpha) * std::pow(alpha, alpha / (1.0 - alpha)) *
           std::pow(x, -alpha / (1.0 - alpha));
}

// log of the steepest-descent magnitude estimate (prefactor * e^{-zeta});
// used only to decide underflow, never as the returned value.
inline double levy_tail_log(double alpha, double x) {
    const double pi_const = 3.14159265358979323846;
    return (2.0 - alpha) / (2.0 * (1.0 - alpha)) * std::log(alpha / x) -
           0.5 * std::log(2.0 * pi_const * alpha * (1.0 - alpha)) -
           levy_zeta(alpha, x);
}

inline double levy_density_value(double alpha, double x) {
    if (x >= 2.0) {
        return levy_descending_series(alpha, x);
    }
    const double zeta = levy_zeta(alpha, x);
    if (levy_tail_log(alpha, x) < -740.0) return 0.0;
    // Deep in the left tail a fixed contour line is hopeless: the result is
    // e^{-zeta} while the integrand oscillates at O(1), so rounding alone
    // costs a factor e^{+zeta} in relative terms. Shifting the line to the
    // integrand's saddle point s* = 1 - zeta*alpha/(1-alpha) turns it into a
    // positive Gaussian peak of height ~ the result itself: perfectly
    // conditioned at any depth and exact for every index (the digamma
    // corrections to the closed-form saddle location cancel to O(1/s*^2),
    // leaving a negligible phase tilt). The Gaussian has width
    // sigma = sqrt(zeta) * alpha/(1-alpha) along the line, so the truncation
    // window scales with sigma instead of staying at the default.
    if (zeta >= 8.0) {
        const double ustar = zeta * alpha / (1.0 - alpha);
        const double sigma = std::sqrt(zeta) * alpha / (1.0 - alpha);
        const double T = std::max(32.0, 8.0 * sigma);
        int n = std::max(1025, static_cast<int>(std::ceil(8.0 * T)));
        if (n % 2 == 0) ++n;
        return contour_eval(levy_mb_integrand(alpha), ContourSpec(1.0 - ustar, T, n),
                            x);
    }
    return contour_eval(levy_mb_integrand(alpha), ContourSpec(alpha / 2.0), x);
}

struct GmlSeriesResult {
    double value = 0.0;
    bool usable = false;
    // Diagnostics for the deep-left-tail rescue in gml_density_value: the
    // peak term magnitude bounds the value (|sum| <= n * e^{ln_peak}), and
    // the cancellation estimate tells how many digits the alternating sum
    // actually delivered even when the strict guard said no.
    bool prepass_complete = false;
    bool summed = false;
    double ln_peak = std::numeric_limits<double>::infinity();
    double cancel = std::numeric_limits<double>::infinity();
    int n_terms = 0;
};

// Log-scaled alternating series for the generalized ML density. All terms are
// assembled in log space (the gamma^gamma prefactor alone overflows doubles
// near gamma ~ 150), summed relative to the peak term, and rejected through
// the same a-posteriori cancellation guard the ML series uses.
inline GmlSeriesResult gml_density_series(double alpha, double g, double x) {
    GmlSeriesResult out;
    const double lx = std::log(x);
    const double lz = std::log(g) + alpha * lx;
    const double pref = (alpha * g - 1.0) * lx + g * std::log(g) - ln_gamma(g);
    auto term_ln = [&](int k) {
        return pref + ln_gamma(g + k) + static_cast<double>(k) * lz -
               ln_gamma(k + 1.0) - ln_gamma(alpha * k + alpha * g);
    };
    // Float pre-pass: locate the peak magnitude and the stopping index. A
    // peak more than e^300 above the first term guarantees the alternating
    // sum cannot survive the cancellation guard, so bail out early and let
    // the contour route take over.
    double ln_peak = -std::numeric_limits<double>::infinity();
    const double lt0 = term_ln(0);
    int k_stop = -1;
    double prev = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4000; ++k) {
        const double lt = term_ln(k);
        ln_peak = std::max(ln_peak, lt);
        if (ln_peak - lt0 > 300.0) return out;
        if (k > 2 && lt < prev && lt < ln_peak - 45.0) {
            k_stop = k;
            break;
        }
        prev = lt;
    }
    if (k_stop < 0) return out;
    out.prepass_complete = true;
    out.ln_peak = ln_peak;
    out.n_terms = k_stop + 1;
    KahanSum scaled;
    for (int k = 0; k <= k_stop; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        scaled.add(sign * std::exp(term_ln(k) - ln_peak));
    }
    const double s = scaled.value();
    const double cancel = policy::eps_series * (k_stop + 1.0) /
                          std::max(std::abs(s), 1e-300);
    out.summed = true;
    out.cancel = cancel;
    const double lv = ln_peak + std::log(std::abs(s));
    out.value = (s >= 0.0 ? 1.0 : -1.0) * (lv < -745.0 ? 0.0 : std::exp(lv));
    if (!(cancel <= policy::cancel_guard)) return out;
    out.usable = true;
    return out;
}

// Large-argument expansion of the generalized ML density from the right-hand
// Mellin poles:
//
//   g(x) = sum_{j>=1} (-1)^j ((g)_j / g^j) / (j! Gamma(-alpha j)) x^{-alpha j - 1},
//
// a Poincare asymptotic whose truncation error is of the order of the first
// omitted term. Sums in descending magnitude and succeeds only when the
// smallest term certifies `rel_tol`; integer alpha*j hits a Gamma pole and
// contributes nothing.
inline bool gml_density_tail(double alpha, double g, double x, double rel_tol, double& out) {
    const double lx = std::log(x);
    if (-(alpha + 1.0) * lx < -760.0) {
        out = 0.0;  // even the leading term underflows
        return true;
    }
    double ln_rising = 0.0;  // ln (g)_j - j ln g
    KahanSum sum;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 80; ++j) {
        ln_rising += std::log(g + (j - 1.0)) - std::log(g);
        if (is_nonpositive_integer(-alpha * j, 0.0)) continue;
        int sg = 0;
        const double lg_neg = lgamma_signed(-alpha * j, sg);
        const double ln_mag =
            ln_rising - ln_gamma(j + 1.0) - lg_neg - (alpha * j + 1.0) * lx;
        const double mag = ln_mag < -745.0 ? 0.0 : std::exp(ln_mag);
        if (mag > prev_mag) return false;  // divergent part reached, uncertified
        const double term_sign = ((j % 2 == 0) ? 1.0 : -1.0) * sg;
        sum.add(term_sign * mag);
        prev_mag = mag;
        if (mag <= rel_tol * std::abs(sum.value())) {
            out = sum.value();
            return true;
        }
    }
    return false;
}

inline double gml_density_value(double alpha, double g, double x) {
    if (alpha == 1.0) {
        return gamma_density_value(g, x);
    }
    const GmlSeriesResult s = gml_density_series(alpha, g, x);
    if (s.usable) return s.value;
    double tail = 0.0;
    if (gml_density_tail(alpha, g, x, 1e-12, tail)) return tail;
    // Deep left tail (large alpha*g, small x): the density is positive but
    // can sit hundreds of orders of magnitude below 1, where the contour
    // quadrature can only produce signed noise near its own absolute floor
    // (~1e-13). Two rescues keep this regime honest, both gated to value
    // scales far below anything the moderate-regime routes serve, so the
    // routing above is unchanged wherever it worked before:
    //  - the alternating sum may still carry ~8 good digits even though the
    //    strict guard wants 11; accept it when it is positive and tiny;
    //  - otherwise the peak-term bound |sum| <= n e^{ln_peak} can certify
    //    that the value is invisible at double scale, making 0.0 the honest
    //    answer (absolute error below e^{-80}).
    constexpr double deep_ln = -80.0;
    if (s.summed && s.cancel <= 1e-8 && s.value > 0.0 &&
        std::log(s.value) < deep_ln) {
        return s.value;
    }
    if (s.prepass_complete &&
        s.ln_peak + std::log(s.n_terms + 1.0) < deep_ln) {
        return 0.0;
    }
    const double lo = std::max(0.0, 1.0 - alpha * g);
    ContourSpec spec(0.5 * (lo + 1.0));
    return contour_eval(gml_mb_integrand(alpha, g), spec, x);
}

}  // namespace detail

// Density value at x; zero for x <= 0 by convention.
inline double density_eval(const DensitySpec& d, double x) {
    validate(d);
    if (!std::isfinite(x)) {
        throw domain_error("density-x", "density_eval requires finite x");
    }
    if (x <= 0.0) return 0.0;
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GammaDensity>) {
                return detail::gamma_density_value(v.gamma_idx, x);
            } else if constexpr (std::is_same_v<T, GMLDensity>) {
                return detail::gml_density_value(v.alpha, v.gamma_idx, x);
            } else if constexpr (std::is_same_v<T, GenGammaDensity>) {
                return detail::gengamma_density_value(v.alpha, v.gamma_idx, x);
            } else if constexpr (std::is_same_v<T, WeibullDensity>) {
                return v.delta * v.b * std::pow(x, v.delta - 1.0) *
                       std::exp(-v.b * std::pow(x, v.delta));
            } else {
                return detail::levy_density_value(v.alpha, x);
            }
        },
        d);
}

// ---------------------------------------------------------------------------
// Laplace transforms
// ---------------------------------------------------------------------------

// Closed forms: (1+s/g)^{-g} for gamma, (1+s^a/g)^{-g} for generalized ML,
// e^{-s^a} for Levy. Weibull and generalized gamma have no elementary form
// and are rejected.
inline double laplace_closed(const DensitySpec& d, double s) {
    validate(d);
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw domain_error("laplace-s", "laplace_closed requires finite s >= 0");
    }
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GammaDensity>) {
                return std::exp(-v.gamma_idx * std::log1p(s / v.gamma_idx));
            } else if constexpr (std::is_same_v<T, GMLDensity>) {
                return std::exp(-v.gamma_idx *
                                std::log1p(std::pow(s, v.alpha) / v.gamma_idx));
            } else if constexpr (std::is_same_v<T, LevyDensity>) {
                return std::exp(-std::pow(s, v.alpha));
            } else {
                throw domain_error("unsupported-density",
                                   "no closed Laplace transform for this density");
            }
        },
        d);
}

namespace detail {

inline bool heavy_tailed(const DensitySpec& d) {
    if (std::holds_alternative<LevyDensity>(d)) return true;
    if (const auto* g = std::get_if<GMLDensity>(&d)) return g->alpha < 1.0;
    return false;
}

// For heavy-tailed members, integral over (X, inf) of x^p * density(x) dx via
// the descending expansion:  sum_k c_k X^{p - alpha k} / (alpha k - p),
// requiring p < alpha. The generalized-ML expansion is asymptotic, so terms
// are consumed only while they shrink; at X >= 32 the smallest term is far
// below every tolerance used here.
inline double heavy_tail_integral(const DensitySpec& d, double X, double p) {
    double alpha = 0.0;
    double g = std::numeric_limits<double>::infinity();
    if (const auto* lv = std::get_if<LevyDensity>(&d)) {
        alpha = lv->alpha;
    } else if (const auto* gm = std::get_if<GMLDensity>(&d)) {
        alpha = gm->alpha;
        g = gm->gamma_idx;
    } else {
        throw domain_error("tail-density", "analytic tail requires a heavy-tailed density");
    }
    if (!(p < alpha)) {
        throw domain_error("tail-exponent", "tail integral requires p < alpha");
    }
    const double lX = std::log(X);
    KahanSum sum;
    double prev_mag = std::numeric_limits<double>::infinity();
    int tiny_streak = 0;
    for (int k = 1; k < 2000; ++k) {
        double sign = 0.0;
        double ln_mag = 0.0;
        heavy_tail_coeff(alpha, g, k, sign, ln_mag);
        const double lt = ln_mag + (p - alpha * k) * lX -
                          std::log(alpha * k - p);
        const double mag = std::isfinite(lt) ? std::exp(lt) : 0.0;
        // Optimal truncation: stop once magnitudes start growing again.
        // Exactly-zero coefficients (sin(pi alpha k) = 0 at rational alpha)
        // carry no size information and are excluded from the comparison.
        if (mag > 0.0) {
            if (mag > prev_mag) break;
            prev_mag = mag;
        }
        sum.add(sign * mag);
        if (mag <= 1e-17 * std::abs(sum.value())) {
            if (++tiny_streak >= 2) break;
        } else {
            tiny_streak = 0;
        }
    }
    return sum.value();
}

// Shared segmented quadrature over (0, inf) for weight(x) * density(x):
// tanh-sinh on [0,1], then dyadic segments [2^{j-1}, 2^j]. Stops when a
// segment falls below 1e-14 of the running peak; heavy-tailed integrands that
// cannot decay on their own (tail_power set) are finished analytically at
// X = 64 instead.
template <typename Weight>
inline double transform_quadrature(const DensitySpec& d, Weight&& weight,
                                   bool analytic_tail, double tail_power,
                                   const char* err_code) {
    boost::math::quadrature::tanh_sinh<double> integ;
    const bool heavy = heavy_tailed(d);
    // Levy evaluations far into the left tail underflow every tolerance; the
    // integrand is clamped to zero there so tanh-sinh never spends contour
    // evaluations on values below ~1e-280.
    const auto* lv = std::get_if<LevyDensity>(&d);
    auto f = [&](double x) -> double {
        if (x <= 0.0) return 0.0;
        if (lv != nullptr && levy_tail_log(lv->alpha, x) < -645.0) return 0.0;
        return weight(x) * density_eval(d, x);
    };
    double total = 0.0;
    double peak = 0.0;
    double a = 0.0;
    double b = 1.0;
    for (int j = 0; j < 56; ++j) {
        const double seg = integ.integrate(f, a, b, 1e-10);
        total += seg;
        peak = std::max(peak, std::abs(seg));
        if (heavy && analytic_tail && b >= 64.0) {
            total += heavy_tail_integral(d, b, tail_power);
            return total;
        }
        if (j >= 2 && std::abs(seg) <= 1e-14 * std::max(peak, std::abs(total))) {
            return total;
        }
        a = b;
        b *= 2.0;
    }
    throw convergence_error(err_code, "segmented quadrature did not terminate");
}

}  // namespace detail

// Numeric Laplace transform by adaptive segmented quadrature; the tail is
// truncated once segments drop below 1e-14 of the peak, and the s = 0
// transform of a heavy-tailed density is completed analytically.
inline double laplace_numeric(const DensitySpec& d, double s) {
    validate(d);
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw domain_error("laplace-s", "laplace_numeric requires finite s >= 0");
    }
    const bool analytic_tail = (s == 0.0);
    return detail::transform_quadrature(
        d, [s](double x) { return std::exp(-s * x); }, analytic_tail, 0.0,
        "laplace-tail");
}

// ---------------------------------------------------------------------------
// Mellin transforms
// ---------------------------------------------------------------------------

// Closed Mellin transform of the generalized ML density on its strip:
//   Gamma(g + (s-1)/a) Gamma((1-s)/a) g^{(1-s)/a} / (a Gamma(g) Gamma(1-s)).
inline double mellin_closed_gml(double alpha, double gamma_idx, double s) {
    GMLDensity d(alpha, gamma_idx);
    if (!(alpha < 1.0)) {
        throw domain_error("mellin-strip", "closed Mellin form requires alpha < 1");
    }
    if (!(s > 0.0) || !(s < alpha)) {
        throw domain_error("mellin-strip", "s must satisfy 0 < s < alpha < 1");
    }
    const double arg = gamma_idx + (s - 1.0) / alpha;
    if (!(arg > 0.0)) {
        throw domain_error("mellin-strip", "gamma + (s-1)/alpha must be positive");
    }
    return std::exp(ln_gamma(arg) + ln_gamma((1.0 - s) / alpha) +
                    (1.0 - s) / alpha * std::log(gamma_idx) - std::log(alpha) -
                    ln_gamma(gamma_idx) - ln_gamma(1.0 - s));
}

// Numeric Mellin transform int_0^inf x^{s-1} density(x) dx; heavy tails are
// finished analytically (valid for s < 1 + alpha).
inline double mellin_numeric(const DensitySpec& d, double s) {
    validate(d);
    if (!std::isfinite(s)) {
        throw domain_error("mellin-s", "mellin_numeric requires finite s");
    }
    const double theta = std::visit(
        [](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GammaDensity>) {
                return v.gamma_idx;
            } else if constexpr (std::is_same_v<T, GMLDensity>) {
                return v.alpha * v.gamma_idx;
            } else if constexpr (std::is_same_v<T, GenGammaDensity>) {
                return v.alpha * v.gamma_idx;
            } else if constexpr (std::is_same_v<T, WeibullDensity>) {
                return v.delta;
            } else {
                return std::numeric_limits<double>::infinity();  // faster than any power
            }
        },
        d);
    if (!(s > 1.0 - theta)) {
        throw domain_error("mellin-domain", "x^{s-1} not integrable at the origin");
    }
    if (detail::heavy_tailed(d)) {
        const double alpha = std::holds_alternative<LevyDensity>(d)
                                 ? std::get<LevyDensity>(d).alpha
                                 : std::get<GMLDensity>(d).alpha;
        if (!(s < 1.0 + alpha)) {
            throw domain_error("mellin-domain", "heavy tail requires s < 1 + alpha");
        }
    }
    return detail::transform_quadrature(
        d, [s](double x) { return std::pow(x, s - 1.0); }, detail::heavy_tailed(d),
        s - 1.0, "mellin-tail");
}

// ---------------------------------------------------------------------------
// Large-index limit study
// ---------------------------------------------------------------------------

struct LevyLimitRow {
    double gamma_idx = 0.0;
    double sup_dist = 0.0;
};

// For each index in the ascending list, the sup over the grid of the pointwise
// distance between the generalized ML density and its Levy limit.
inline std::vector<LevyLimitRow> levy_limit_study(double alpha,
                                                  const std::vector<double>& gamma_list,
                                                  const Grid& grid) {
    LevyDensity levy(alpha);
    if (gamma_list.empty()) {
        throw domain_error("limit-study", "gamma list must be non-empty");
    }
    for (std::size_t i = 0; i < gamma_list.size(); ++i) {
        if (!(gamma_list[i] > 1.0)) {
            throw domain_error("limit-study", "every gamma must exceed 1");
        }
        if (i > 0 && !(gamma_list[i] > gamma_list[i - 1])) {
            throw domain_error("limit-study", "gamma list must be strictly ascending");
        }
    }
    const std::vector<double> xs = grid.abscissae();
    std::vector<double> levy_vals(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        levy_vals[i] = density_eval(levy, xs[i]);
    }
    std::vector<LevyLimitRow> rows;
    rows.reserve(gamma_list.size());
    for (double g : gamma_list) {
        GMLDensity gml(alpha, g);
        double sup = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sup = std::max(sup, std::abs(density_eval(gml, xs[i]) - levy_vals[i]));
        }
        rows.push_back({g, sup});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Index redundancy of the generalized gamma Mellin transform
// ---------------------------------------------------------------------------

// Gamma(g + (s-1)/a) g^{(1-s)/a} / Gamma(g): the Mellin transform of the
// generalized gamma density, which tends to 1 as g grows for fixed s, a.
inline double gengamma_redundancy_check(double alpha, double gamma_idx, double s) {
    GenGammaDensity d(alpha, gamma_idx);
    (void)d;
    const double arg = gamma_idx + (s - 1.0) / alpha;
    if (!(arg > 0.0)) {
        throw domain_error("gamma-pole", "gamma + (s-1)/alpha must be positive");
    }
    return std::exp(ln_gamma(arg) - ln_gamma(gamma_idx) +
                    (1.0 - s) / alpha * std::log(gamma_idx));
}

// ---------------------------------------------------------------------------
// Pathway ratio
// ---------------------------------------------------------------------------

struct PathwayParams {
    double alpha = 0.5;
    double delta = 1.0;
    double eta = 1.0;
    double q = 2.0;
    double a = 1.0;
    double beta = 8.0;

    PathwayParams() = default;
    PathwayParams(double al, double de, double et, double qq, double aa, double be)
        : alpha(al), delta(de), eta(et), q(qq), a(aa), beta(be) {
        validate();
    }

    void validate() const {
        if (!(alpha > 0.0) || !(delta > 0.0) || !(eta > 0.0) || !(q > 1.0) ||
            !(a > 0.0) || !(beta > 0.0)) {
            throw domain_error("pathway-params",
                               "pathway requires alpha, delta, eta, a, beta > 0 and q > 1");
        }
    }
};

namespace detail {

inline double pathway_factor(const PathwayParams& p, double x) {
    const double idx = p.eta / (p.q - 1.0);
    const double z = -p.a * (p.q - 1.0) * std::pow(x, p.delta) * std::pow(p.beta, p.alpha);
    return ml_prabhakar(MLParams(p.alpha, p.beta, idx), z);
}

}  // namespace detail

// R(beta) = F(x1; beta) / F(x2; beta) with
// F(x; beta) = E^{eta/(q-1)}_{(alpha, beta)}(-a(q-1) x^delta beta^alpha);
// as beta grows the ratio tends to the Tsallis-bracket target below.
inline double pathway_limit_ratio(const PathwayParams& p, double x1, double x2) {
    p.validate();
    if (!(x1 > 0.0) || !(x2 > 0.0)) {
        throw domain_error("pathway-x", "pathway ratio requires x1, x2 > 0");
    }
    if (x1 == x2) return 1.0;
    const double f1 = detail::pathway_factor(p, x1);
    const double f2 = detail::pathway_factor(p, x2);
    if (f2 == 0.0) {
        throw convergence_error("pathway-underflow", "denominator factor underflowed");
    }
    return f1 / f2;
}

// The beta -> inf limit of the ratio:
// [ (1 + a(q-1) x1^delta) / (1 + a(q-1) x2^delta) ]^{-eta/(q-1)}.
inline double pathway_limit_target(const PathwayParams& p, double x1, double x2) {
    p.validate();
    if (!(x1 > 0.0) || !(x2 > 0.0)) {
        throw domain_error("pathway-x", "pathway ratio requires x1, x2 > 0");
    }
    const double c = p.a * (p.q - 1.0);
    const double r = (1.0 + c * std::pow(x1, p.delta)) / (1.0 + c * std::pow(x2, p.delta));
    return std::pow(r, -p.eta / (p.q - 1.0));
}

}  // namespace mlfrac
