#pragma once

// Shared plumbing: error types, compensated summation, evaluation grids,
// and the numeric policy constants used across the library.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlfrac {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Base class for all library errors; carries a stable machine-readable code
// alongside the human-readable message.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Invalid argument / parameter outside its documented domain.
class domain_error : public error {
public:
    domain_error(const std::string& code, const std::string& msg) : error(code, msg) {}
    explicit domain_error(const std::string& msg) : error("domain", msg) {}
};

// An iterative scheme failed to reach its tolerance within its budget.
class convergence_error : public error {
public:
    convergence_error(const std::string& code, const std::string& msg) : error(code, msg) {}
    explicit convergence_error(const std::string& msg) : error("convergence", msg) {}
};

// ---------------------------------------------------------------------------
// Numeric policy
// ---------------------------------------------------------------------------

namespace policy {
// Relative term tolerance for all power-series evaluations.
inline constexpr double eps_series = 1e-16;
// Hard cap on series terms.
inline constexpr int k_max = 10000;
// Switchover |z| between direct series and contour evaluation for the
// Mittag-Leffler function on the negative real axis.
inline constexpr double z_switch = 50.0;
// A-posteriori cancellation guard: if the estimated relative rounding error
// eps * max|term| / |sum| of an alternating series exceeds this, the series
// result is rejected and the contour route is used instead.
inline constexpr double cancel_guard = 1e-11;
}  // namespace policy

// ---------------------------------------------------------------------------
// Compensated (Kahan-Neumaier) summation
// ---------------------------------------------------------------------------

class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// ---------------------------------------------------------------------------
// Evaluation grid
// ---------------------------------------------------------------------------

enum class GridSpacing { uniform, log };

struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t n = 0;
    GridSpacing spacing = GridSpacing::uniform;

    Grid() = default;
    Grid(double lo, double hi, std::size_t count, GridSpacing sp = GridSpacing::uniform)
        : x_min(lo), x_max(hi), n(count), spacing(sp) {
        if (!(x_min > 0.0) || !(x_max > x_min) || n < 2) {
            throw domain_error("grid", "Grid requires 0 < x_min < x_max and n >= 2");
        }
        if (spacing == GridSpacing::log && !(x_min > 0.0)) {
            throw domain_error("grid", "log spacing requires x_min > 0");
        }
    }

    std::vector<double> abscissae() const {
        std::vector<double> xs(n);
        if (spacing == GridSpacing::uniform) {
            const double h = (x_max - x_min) / static_cast<double>(n - 1);
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = x_min + h * static_cast<double>(i);
            }
        } else {
            const double l0 = std::log(x_min);
            const double h = (std::log(x_max) - l0) / static_cast<double>(n - 1);
            for (std::size_t i = 0; i < n; ++i) {
                xs[i] = std::exp(l0 + h * static_cast<double>(i));
            }
        }
        xs.front() = x_min;
        xs.back() = x_max;
        return xs;
    }
};

}  // namespace mlfrac
