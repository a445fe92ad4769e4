// Unit tests for the Mellin-Barnes machinery: contour quadrature, residue
// series, the Levy-factor algebra, and JSON serialization.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mlfrac/mb_json.hpp"
#include "mlfrac/mellin_barnes.hpp"
#include "mlfrac/special.hpp"

using namespace mlfrac;

namespace {
double relerr(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

MellinIntegrand plain_gamma_integrand() {
    MellinIntegrand f;
    f.numerator.push_back({1.0, 0.0});
    return f;
}

double levy_half_closed(double x) {
    const double pi_const = 3.14159265358979323846;
    return 1.0 / (2.0 * std::sqrt(pi_const)) * std::pow(x, -1.5) * std::exp(-1.0 / (4.0 * x));
}

double gengamma_closed(double alpha, double g, double x) {
    return alpha * std::exp(g * std::log(g) - std::lgamma(g)) *
           std::pow(x, alpha * g - 1.0) * std::exp(-g * std::pow(x, alpha));
}
}  // namespace

// ---------------------------------------------------------------------------
// contour_eval
// ---------------------------------------------------------------------------

TEST_CASE("contour inversion of Gamma(s) recovers exp(-x)", "[contour]") {
    const auto f = plain_gamma_integrand();
    for (double x : {0.25, 1.0, 2.0, 4.0}) {
        const double got = contour_eval(f, ContourSpec(1.0), x);
        CHECK(relerr(got, std::exp(-x)) < 1e-10);
    }
}

TEST_CASE("contour evaluation of the stable-density integrand at alpha=1/2", "[contour]") {
    const auto f = levy_mb_integrand(0.5);
    const double got = contour_eval(f, ContourSpec(0.25), 1.0);
    CHECK(relerr(got, levy_half_closed(1.0)) < 1e-10);
    CHECK(got == Catch::Approx(0.2196956).margin(5e-8));
}

TEST_CASE("contour value is invariant under moving the line inside the strip",
          "[contour]") {
    const auto f = levy_mb_integrand(0.5);
    const double base = contour_eval(f, ContourSpec(0.25), 1.3);
    for (double c : {0.1, 0.25, 0.4}) {
        const double got = contour_eval(f, ContourSpec(c), 1.3);
        CHECK(relerr(got, base) < 1e-9);
    }
}

TEST_CASE("contour result is stable under doubling the node count", "[contour]") {
    const auto f = levy_mb_integrand(0.6);
    const double a = contour_eval(f, ContourSpec(0.3, 32.0, 1025), 0.8);
    const double b = contour_eval(f, ContourSpec(0.3, 32.0, 2049), 0.8);
    CHECK(relerr(a, b) < 1e-9);
}

TEST_CASE("contour errors: pole on line, no decay, bad spec", "[contour]") {
    const auto f = plain_gamma_integrand();
    CHECK_THROWS_AS(contour_eval(f, ContourSpec(0.0, 32.0, 1025), 1.0), domain_error);
    CHECK_THROWS_AS(contour_eval(f, ContourSpec(1.0), -2.0), domain_error);
    CHECK_THROWS_AS(ContourSpec(0.5, 32.0, 1024), domain_error);
    CHECK_THROWS_AS(ContourSpec(0.5, 32.0, 31), domain_error);

    MellinIntegrand bad;  // 1/Gamma(1-s): grows along the line
    bad.denominator.push_back({-1.0, 1.0});
    CHECK_THROWS_AS(contour_eval(bad, ContourSpec(0.5), 1.0), convergence_error);
}

// ---------------------------------------------------------------------------
// residue_series_eval
// ---------------------------------------------------------------------------

TEST_CASE("residue ladder of Gamma(s) sums to exp(-x)", "[residue]") {
    const auto f = plain_gamma_integrand();
    CHECK(relerr(residue_series_eval(f, 0.5, 200), std::exp(-0.5)) < 1e-12);
    CHECK(relerr(residue_series_eval(f, 1.0, 200), std::exp(-1.0)) < 1e-12);
}

TEST_CASE("residue evaluation of the stripped integrand gives the closed form",
          "[residue]") {
    // alpha=1, gamma=1: exponential density.
    CHECK(relerr(residue_series_eval(gengamma_mb_integrand(1.0, 1.0), 1.0, 200),
                 std::exp(-1.0)) < 1e-12);
    // alpha=0.5, gamma=2 at x=1: 2 e^{-2}.
    CHECK(relerr(residue_series_eval(gengamma_mb_integrand(0.5, 2.0), 1.0, 200),
                 2.0 * std::exp(-2.0)) < 1e-12);
    // Full sweep against the closed form at five abscissae.
    for (double x : {0.5, 0.8, 1.0, 1.5, 2.0}) {
        for (double alpha : {0.5, 0.7}) {
            for (double g : {1.5, 2.0}) {
                const double got =
                    residue_series_eval(gengamma_mb_integrand(alpha, g), x, 400);
                CHECK(relerr(got, gengamma_closed(alpha, g, x)) < 1e-10);
            }
        }
    }
}

TEST_CASE("residue and contour routes agree on the density integrand family",
          "[residue][contour]") {
    for (double alpha : {0.5, 0.7}) {
        const auto f = gml_mb_integrand(alpha, 2.0);
        for (double x : {0.5, 0.75, 1.0, 1.5, 2.0}) {
            const double res = residue_series_eval(f, x, 400);
            const double cont = contour_eval(f, ContourSpec(alpha / 2.0), x);
            INFO("alpha=" << alpha << " x=" << x);
            CHECK(relerr(res, cont) < 1e-8);
        }
    }
}

TEST_CASE("residue series matches the ML series through the density integrand",
          "[residue]") {
    // Residues of the full density integrand reproduce the direct series
    // x^{a g - 1} g^g E^g_{(a, a g)}(-g x^a).
    const double alpha = 0.6, g = 2.0, x = 0.9;
    const double got = residue_series_eval(gml_mb_integrand(alpha, g), x, 400);
    const double want = std::pow(x, alpha * g - 1.0) * std::pow(g, g) *
                        ml_prabhakar(MLParams(alpha, alpha * g, g), -g * std::pow(x, alpha));
    CHECK(relerr(got, want) < 1e-11);
}

TEST_CASE("residue error taxonomy", "[residue]") {
    MellinIntegrand two_sweepers;
    two_sweepers.numerator.push_back({1.0, 0.0});
    two_sweepers.numerator.push_back({0.5, 0.3});
    CHECK_THROWS_AS(residue_series_eval(two_sweepers, 1.0, 50), domain_error);

    MellinIntegrand no_poles;  // Gamma(1-s) alone: poles only on the right
    no_poles.numerator.push_back({-1.0, 1.0});
    CHECK_THROWS_AS(residue_series_eval(no_poles, 1.0, 50), domain_error);

    const auto f = plain_gamma_integrand();
    CHECK_THROWS_AS(residue_series_eval(f, -1.0, 50), domain_error);
    CHECK_THROWS_AS(residue_series_eval(f, 1.0, 0), domain_error);
}

// ---------------------------------------------------------------------------
// Levy-factor algebra
// ---------------------------------------------------------------------------

TEST_CASE("structure predicate on the canonical integrands", "[levy-structure]") {
    CHECK(has_levy_structure(gml_mb_integrand(0.7, 2.0), 0.7));
    CHECK_FALSE(has_levy_structure(gml_mb_integrand(0.7, 2.0), 0.5));
    CHECK_FALSE(has_levy_structure(gamma_statistic_integrand(0.7, 2.0), 0.7));
    CHECK_FALSE(has_levy_structure(MellinIntegrand{}, 0.5));
    CHECK(has_levy_structure(levy_mb_integrand(0.45), 0.45));
}

TEST_CASE("strip removes the stable factor and recovers the moment integrand",
          "[levy-structure]") {
    const double alpha = 0.7, g = 2.0;
    const auto stripped = strip_levy_structure(gml_mb_integrand(alpha, g), alpha);
    CHECK(integrand_equal(stripped, gengamma_mb_integrand(alpha, g)));
    CHECK_THROWS_AS(strip_levy_structure(stripped, alpha), domain_error);
}

TEST_CASE("attach then strip is the identity on a factor family", "[levy-structure]") {
    const MellinIntegrand family[] = {
        gamma_statistic_integrand(0.6, 2.0),
        gamma_statistic_integrand(0.6, 1.0),
        plain_gamma_integrand(),
        ml_mb_integrand(0.6, 1.1, 1.3),
    };
    for (const auto& f : family) {
        const auto attached = attach_levy_structure(f, 0.6);
        CHECK(has_levy_structure(attached, 0.6));
        CHECK(integrand_equal(strip_levy_structure(attached, 0.6), f));
    }
}

TEST_CASE("attaching the stable factor to the moment integrand gives the density "
          "integrand",
          "[levy-structure]") {
    const double alpha = 0.55, g = 3.0;
    const auto attached = attach_levy_structure(gamma_statistic_integrand(alpha, g), alpha);
    CHECK(integrand_equal(attached, gml_mb_integrand(alpha, g)));
}

// ---------------------------------------------------------------------------
// JSON round trip
// ---------------------------------------------------------------------------

TEST_CASE("integrand JSON round trip preserves all fields", "[json]") {
    const auto f = gml_mb_integrand(0.7, 2.0);
    const auto j = integrand_to_json(f);
    CHECK(j.contains("num"));
    CHECK(j.contains("den"));
    CHECK(j.contains("scalar"));
    CHECK(j.contains("powers"));
    const auto back = integrand_from_json(j);
    CHECK(integrand_equal(back, f));
}

TEST_CASE("integrand JSON shape validation", "[json]") {
    CHECK_THROWS_AS(integrand_from_json(nlohmann::json::array()), domain_error);
    auto j = integrand_to_json(levy_mb_integrand(0.5));
    j["num"][0] = nlohmann::json::array({1.0});
    CHECK_THROWS_AS(integrand_from_json(j), domain_error);
    auto k = integrand_to_json(levy_mb_integrand(0.5));
    k.erase("scalar");
    CHECK_THROWS_AS(integrand_from_json(k), domain_error);
}
