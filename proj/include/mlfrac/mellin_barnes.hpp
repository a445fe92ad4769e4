#pragma once

// Symbolic Mellin-Barnes integrands (products of Gamma(a*s+b) factors with
// scalar and power prefactors), vertical-line contour quadrature, residue
// series evaluation over the left pole ladder, and detection/removal/
// attachment of the characteristic Levy factor Gamma((1-s)/a)/(a*Gamma(1-s)).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "mlfrac/core.hpp"
#include "mlfrac/gamma.hpp"

namespace mlfrac {

// ---------------------------------------------------------------------------
// Data model
// ---------------------------------------------------------------------------

// Represents Gamma(coeff*s + shift). coeff == 0 encodes the constant Gamma(shift).
struct GammaFactor {
    double coeff = 0.0;
    double shift = 0.0;
};

// Represents base^(a*s + b) with base > 0.
struct PowerTerm {
    double base = 1.0;
    double a = 0.0;
    double b = 0.0;
};

struct MellinIntegrand {
    std::vector<GammaFactor> numerator;
    std::vector<GammaFactor> denominator;
    double scalar = 1.0;
    std::vector<PowerTerm> base_powers;
};

namespace detail {

inline bool close(double a, double b, double tol = 1e-12) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool factor_equal(const GammaFactor& f, const GammaFactor& g, double tol = 1e-12) {
    return close(f.coeff, g.coeff, tol) && close(f.shift, g.shift, tol);
}

inline std::vector<GammaFactor> sorted_factors(std::vector<GammaFactor> v) {
    std::sort(v.begin(), v.end(), [](const GammaFactor& a, const GammaFactor& b) {
        if (a.coeff != b.coeff) return a.coeff < b.coeff;
        return a.shift < b.shift;
    });
    return v;
}

}  // namespace detail

// Field-wise equality up to 1e-12 on factor parameters, order-insensitive.
inline bool integrand_equal(const MellinIntegrand& f, const MellinIntegrand& g,
                            double tol = 1e-12) {
    if (f.numerator.size() != g.numerator.size()) return false;
    if (f.denominator.size() != g.denominator.size()) return false;
    if (f.base_powers.size() != g.base_powers.size()) return false;
    if (!detail::close(f.scalar, g.scalar, tol)) return false;
    const auto fn = detail::sorted_factors(f.numerator);
    const auto gn = detail::sorted_factors(g.numerator);
    const auto fd = detail::sorted_factors(f.denominator);
    const auto gd = detail::sorted_factors(g.denominator);
    for (std::size_t i = 0; i < fn.size(); ++i) {
        if (!detail::factor_equal(fn[i], gn[i], tol)) return false;
    }
    for (std::size_t i = 0; i < fd.size(); ++i) {
        if (!detail::factor_equal(fd[i], gd[i], tol)) return false;
    }
    auto psort = [](std::vector<PowerTerm> v) {
        std::sort(v.begin(), v.end(), [](const PowerTerm& a, const PowerTerm& b) {
            if (a.base != b.base) return a.base < b.base;
            if (a.a != b.a) return a.a < b.a;
            return a.b < b.b;
        });
        return v;
    };
    const auto fp = psort(f.base_powers);
    const auto gp = psort(g.base_powers);
    for (std::size_t i = 0; i < fp.size(); ++i) {
        if (!detail::close(fp[i].base, gp[i].base, tol) || !detail::close(fp[i].a, gp[i].a, tol) ||
            !detail::close(fp[i].b, gp[i].b, tol)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Contour specification
// ---------------------------------------------------------------------------

struct ContourSpec {
    double line_re = 0.5;
    double half_height = 32.0;
    int nodes = 1025;

    ContourSpec() = default;
    ContourSpec(double c, double T, int n) : line_re(c), half_height(T), nodes(n) {
        validate();
    }
    explicit ContourSpec(double c) : line_re(c) { validate(); }

    void validate() const {
        if (!(half_height > 0.0) || !std::isfinite(line_re)) {
            throw domain_error("contour-spec", "ContourSpec requires finite line_re and T > 0");
        }
        if (nodes < 33 || nodes % 2 == 0) {
            throw domain_error("contour-spec", "ContourSpec requires odd node count >= 33");
        }
    }
};

// ---------------------------------------------------------------------------
// Pointwise evaluation of the integrand (log space)
// ---------------------------------------------------------------------------

namespace detail {

// log of the gamma-product and power part of F(s); scalar excluded.
inline std::complex<double> mb_log_eval(const MellinIntegrand& f, std::complex<double> s) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& g : f.numerator) {
        acc += ln_gamma_complex_full(g.coeff * s + g.shift);
    }
    for (const auto& g : f.denominator) {
        acc -= ln_gamma_complex_full(g.coeff * s + g.shift);
    }
    for (const auto& p : f.base_powers) {
        acc += (p.a * s + p.b) * std::log(p.base);
    }
    return acc;
}

// Sum of |coeff| over factors; the Stirling decay exponent of |F| along the
// vertical line is (pi/2) * (sum_num - sum_den) per unit |Im s|.
inline double mb_decay_rate(const MellinIntegrand& f) {
    double num = 0.0;
    double den = 0.0;
    for (const auto& g : f.numerator) num += std::abs(g.coeff);
    for (const auto& g : f.denominator) den += std::abs(g.coeff);
    const double pi_const = 3.14159265358979323846;
    return 0.5 * pi_const * (num - den);
}

struct ComplexKahan {
    KahanSum re, im;
    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Contour quadrature
// ---------------------------------------------------------------------------

// (1/2*pi) Int_{-T}^{T} F(c+iu) x^{-(c+iu)} du by the trapezoid rule on the
// truncated vertical line. T is extended by doubling until the Stirling tail
// estimate falls below 1e-12 of the accumulated value; the mesh is then
// halved until self-consistent to 1e-10 relative. The imaginary part of the
// result must cancel (conjugate-symmetric integrand) and is checked.
inline double contour_eval(const MellinIntegrand& f, ContourSpec spec, double x) {
    spec.validate();
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw domain_error("contour-x", "contour_eval requires finite x > 0");
    }
    // No numerator gamma pole may sit on the contour line (the line must lie
    // strictly inside the strip of analyticity).
    for (const auto& g : f.numerator) {
        const double arg_on_line = g.coeff * spec.line_re + g.shift;
        if (detail::is_nonpositive_integer(arg_on_line, 1e-12)) {
            throw domain_error("strip-violation",
                               "numerator gamma pole on the contour line");
        }
    }
    for (const auto& p : f.base_powers) {
        if (!(p.base > 0.0)) {
            throw domain_error("contour-power", "power bases must be positive");
        }
    }
    const double rate = detail::mb_decay_rate(f);
    if (!(rate > 1e-12)) {
        throw convergence_error("contour-decay",
                                "integrand does not decay along the vertical line");
    }

    const double pi_const = 3.14159265358979323846;
    const double lx = std::log(x);
    const double c = spec.line_re;

    auto point = [&](double u) -> std::complex<double> {
        const std::complex<double> s(c, u);
        const std::complex<double> lg = detail::mb_log_eval(f, s) - s * lx;
        // Guard against overflow in exp; the integrand decays, so large values
        // can only occur transiently near u=0 for extreme parameters.
        if (lg.real() > 700.0) {
            throw convergence_error("contour-overflow", "integrand magnitude overflow");
        }
        return f.scalar * std::exp(lg);
    };

    // l1_mass — the quadrature's own absolute-value mass (h/2pi * sum|F|) —
    // is the conditioning scale: the result cannot be resolved more finely
    // than rounding noise of order eps * l1_mass, so every convergence check
    // below carries an absolute floor proportional to it.
    double l1_mass = 0.0;
    auto sweep = [&](double T, int nodes) -> std::complex<double> {
        const double h = 2.0 * T / static_cast<double>(nodes - 1);
        detail::ComplexKahan acc;
        KahanSum mass;
        for (int k = 0; k < nodes; ++k) {
            const double u = -T + h * static_cast<double>(k);
            std::complex<double> v = point(u);
            if (k == 0 || k == nodes - 1) v *= 0.5;
            acc.add(v);
            mass.add(std::abs(v));
        }
        l1_mass = mass.value() * (h / (2.0 * pi_const));
        return acc.value() * (h / (2.0 * pi_const));
    };

    double T = spec.half_height;
    int nodes = spec.nodes;
    std::complex<double> val = sweep(T, nodes);

    // Extend the truncation height until the tail is negligible.
    for (int attempt = 0;; ++attempt) {
        const double end_mag = std::abs(point(T)) + std::abs(point(-T));
        const double tail_est = end_mag / (2.0 * pi_const * rate);
        if (tail_est <=
            1e-12 * std::max(std::abs(val), 1e-300) + 1e-14 * l1_mass) {
            break;
        }
        if (attempt >= 10) {
            throw convergence_error("contour-tail",
                                    "truncation tail estimate exceeds tolerance");
        }
        T *= 2.0;
        nodes = 2 * nodes - 1;
        val = sweep(T, nodes);
    }

    // Refine the mesh until self-converged.
    bool converged = false;
    for (int attempt = 0; attempt < 12; ++attempt) {
        const int refined = 2 * nodes - 1;
        const std::complex<double> next = sweep(T, refined);
        const double change = std::abs(next - val);
        val = next;
        nodes = refined;
        if (change <=
            1e-10 * std::max(std::abs(val), 1e-300) + 1e-13 * l1_mass) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw convergence_error("contour-refine", "mesh refinement did not converge");
    }

    if (std::abs(val.imag()) >
        1e-9 * std::abs(val.real()) + 1e-12 * l1_mass + 1e-280) {
        throw convergence_error("contour-imaginary",
                                "imaginary part failed to cancel on the contour");
    }
    return val.real();
}

// ---------------------------------------------------------------------------
// Residue series over the left pole ladder
// ---------------------------------------------------------------------------

// Sum of residues of F(s) x^{-s} at the poles s_k = -(shift+k)/coeff of the
// unique numerator factor with coeff > 0, for k < terms. Residue of
// Gamma(a*s+b) at its k-th pole contributes (1/a)(-1)^k / k!.
inline double residue_series_eval(const MellinIntegrand& f, double x, int terms) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw domain_error("residue-x", "residue_series_eval requires finite x > 0");
    }
    if (terms < 1) {
        throw domain_error("residue-terms", "residue_series_eval requires terms >= 1");
    }
    std::size_t sweep_idx = f.numerator.size();
    for (std::size_t i = 0; i < f.numerator.size(); ++i) {
        if (f.numerator[i].coeff > 1e-14) {
            if (sweep_idx != f.numerator.size()) {
                throw domain_error("ambiguous-pole-set",
                                   "more than one numerator factor sweeps left poles");
            }
            sweep_idx = i;
        }
    }
    if (sweep_idx == f.numerator.size()) {
        throw domain_error("no-left-poles", "no numerator factor generates left poles");
    }
    const double a = f.numerator[sweep_idx].coeff;
    const double b = f.numerator[sweep_idx].shift;
    const double lx = std::log(x);

    KahanSum sum;
    double max_abs = 0.0;
    int tiny_streak = 0;
    for (int k = 0; k < terms; ++k) {
        const double sk = -(b + static_cast<double>(k)) / a;
        int sign = (k % 2 == 0) ? 1 : -1;
        double ln_mag = -std::lgamma(static_cast<double>(k) + 1.0) - std::log(a);
        bool zero_term = false;
        for (std::size_t i = 0; i < f.numerator.size() && !zero_term; ++i) {
            if (i == sweep_idx) continue;
            const double w = f.numerator[i].coeff * sk + f.numerator[i].shift;
            if (detail::is_nonpositive_integer(w, 1e-12)) {
                throw domain_error("ambiguous-pole-set",
                                   "second numerator factor is singular at a swept pole");
            }
            int s = 0;
            ln_mag += detail::lgamma_signed(w, s);
            sign *= s;
        }
        for (const auto& g : f.denominator) {
            const double w = g.coeff * sk + g.shift;
            if (detail::is_nonpositive_integer(w, 1e-12)) {
                zero_term = true;  // reciprocal gamma vanishes
                break;
            }
            int s = 0;
            ln_mag -= detail::lgamma_signed(w, s);
            sign *= s;
        }
        if (!zero_term) {
            for (const auto& p : f.base_powers) {
                ln_mag += (p.a * sk + p.b) * std::log(p.base);
            }
            ln_mag += -sk * lx;
            if (f.scalar < 0.0) sign = -sign;
            ln_mag += std::log(std::abs(f.scalar));
            if (ln_mag > 700.0) {
                throw convergence_error("residue-overflow", "residue term overflow");
            }
            const double term = sign * std::exp(ln_mag);
            sum.add(term);
            max_abs = std::max(max_abs, std::abs(term));
            if (std::abs(term) < policy::eps_series * std::abs(sum.value()) && k >= 2) {
                if (++tiny_streak >= 2) break;
            } else {
                tiny_streak = 0;
            }
        }
    }
    return sum.value();
}

// ---------------------------------------------------------------------------
// Levy structure: Gamma((1-s)/a) / (a * Gamma(1-s))
// ---------------------------------------------------------------------------

namespace detail {

inline GammaFactor levy_numerator_factor(double alpha) {
    return GammaFactor{-1.0 / alpha, 1.0 / alpha};
}
inline GammaFactor levy_denominator_factor() { return GammaFactor{-1.0, 1.0}; }

inline std::ptrdiff_t find_factor(const std::vector<GammaFactor>& v, const GammaFactor& g) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (factor_equal(v[i], g)) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
}

}  // namespace detail

inline bool has_levy_structure(const MellinIntegrand& f, double alpha) {
    if (!(alpha > 0.0)) {
        throw domain_error("levy-alpha", "alpha must be positive");
    }
    return detail::find_factor(f.numerator, detail::levy_numerator_factor(alpha)) >= 0 &&
           detail::find_factor(f.denominator, detail::levy_denominator_factor()) >= 0;
}

inline MellinIntegrand strip_levy_structure(const MellinIntegrand& f, double alpha) {
    if (!has_levy_structure(f, alpha)) {
        throw domain_error("levy-structure-absent",
                           "integrand does not carry the Levy factor");
    }
    MellinIntegrand out = f;
    const auto ni = detail::find_factor(out.numerator, detail::levy_numerator_factor(alpha));
    out.numerator.erase(out.numerator.begin() + ni);
    const auto di = detail::find_factor(out.denominator, detail::levy_denominator_factor());
    out.denominator.erase(out.denominator.begin() + di);
    out.scalar *= alpha;
    return out;
}

inline MellinIntegrand attach_levy_structure(const MellinIntegrand& f, double alpha) {
    if (!(alpha > 0.0)) {
        throw domain_error("levy-alpha", "alpha must be positive");
    }
    MellinIntegrand out = f;
    out.numerator.push_back(detail::levy_numerator_factor(alpha));
    out.denominator.push_back(detail::levy_denominator_factor());
    out.scalar /= alpha;
    return out;
}

// ---------------------------------------------------------------------------
// Integrand builders
// ---------------------------------------------------------------------------

// E^g_(a,b)(-t) as a contour integral in t:
//   Gamma(s) Gamma(g - s) / (Gamma(g) Gamma(b - a s)) on 0 < Re s < g.
inline MellinIntegrand ml_mb_integrand(double alpha, double beta, double gamma_idx) {
    MellinIntegrand f;
    f.numerator.push_back({1.0, 0.0});
    f.numerator.push_back({-1.0, gamma_idx});
    f.denominator.push_back({-alpha, beta});
    if (gamma_idx != 1.0) {
        f.denominator.push_back({0.0, gamma_idx});
    }
    return f;
}

// The alpha-scaled moment function of the unit-mean gamma density:
//   Gamma(g + (s-1)/a) g^{(1-s)/a} / Gamma(g).
// Doubles as the stripped (generalized-gamma) integrand.
inline MellinIntegrand gamma_statistic_integrand(double alpha, double gamma_shape) {
    MellinIntegrand f;
    f.numerator.push_back({1.0 / alpha, gamma_shape - 1.0 / alpha});
    if (gamma_shape != 1.0) {
        f.denominator.push_back({0.0, gamma_shape});
        f.base_powers.push_back({gamma_shape, -1.0 / alpha, 1.0 / alpha});
    }
    return f;
}

inline MellinIntegrand gengamma_mb_integrand(double alpha, double gamma_shape) {
    return gamma_statistic_integrand(alpha, gamma_shape);
}

// The generalized ML density integrand (gamma statistic with the Levy factor
// attached): strip 0 < Re s < alpha < 1.
inline MellinIntegrand gml_mb_integrand(double alpha, double gamma_shape) {
    return attach_levy_structure(gamma_statistic_integrand(alpha, gamma_shape), alpha);
}

// The one-sided stable (Levy) density integrand Gamma((1-s)/a)/(a Gamma(1-s)).
inline MellinIntegrand levy_mb_integrand(double alpha) {
    MellinIntegrand f;
    f.numerator.push_back(detail::levy_numerator_factor(alpha));
    f.denominator.push_back(detail::levy_denominator_factor());
    f.scalar = 1.0 / alpha;
    return f;
}

}  // namespace mlfrac
