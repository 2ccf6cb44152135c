#pragma once

#include <functional>
#include <optional>

namespace qf {

using RealFn = std::function<double(double)>;

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long panels_used = 0;
    bool converged = true;
};

struct QuadOptions {
    long max_panels = 2'000'000;
    int max_depth = 60;
    // Initial panels are no wider than this (0 means a single panel).
    double max_initial_width = 0.0;
};

// Adaptive Simpson with a Richardson-corrected embedded pair. tol is absolute.
QuadratureResult integrate_adaptive(const RealFn& f, double a, double b, double tol,
                                    const QuadOptions& opt = {});

// Integral over (0,1] of u(t) t^-sigma via t = w^(1/(1-sigma)).
QuadratureResult integrate_singular_power(const RealFn& u, double sigma, double tol,
                                          const QuadOptions& opt = {});

// Upper bound for the unit-window average of w beyond Tmax, as a function of |t|.
// When absent, the average over the two boundary windows is used.
struct CauchyTail {
    RealFn window_average;
    // Central estimate of the tail is window_average itself; the error
    // estimate receives rel_uncertainty times that amount.
    double rel_uncertainty = 1.0;
    bool add_to_value = false;
};

// Integral of w(t)/(b^2+(t-u)^2) over [-Tmax, Tmax] plus an analytic tail term.
QuadratureResult integrate_cauchy_kernel(const RealFn& w, double b, double u, double tol,
                                         double Tmax, const std::optional<CauchyTail>& tail = {},
                                         const QuadOptions& opt = {});

// Integral of 1/(b^2+(t-u)^2) over |t| > T.
double cauchy_kernel_tail_mass(double b, double u, double T);

}  // namespace qf
