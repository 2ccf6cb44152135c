#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qf/common.hpp"

namespace qf {

// A test function on (0,1], extended 1-periodically. Membership in the Dini
// class at rationals is documented per builder, never checked.
struct PeriodicFunction {
    std::string name;
    std::function<double(double)> eval;
    double value_at_0 = 0.0;
    std::optional<double> exact_integral;
    // Integral of f(x)/x^sigma over (0,1), where known in closed form.
    std::function<std::optional<double>(double)> exact_weighted_integral;
    std::optional<FourierMap> fourier;

    double operator()(double x) const { return eval(x); }
    std::optional<double> weighted_integral(double sigma) const;
};

// Re sum_nu c(nu) e^{2 pi i nu x}.
double trig_eval(const FourierMap& c, double x);

// Stable sin(a L)/L with its limit a at L = 0.
double sin_over(double a, double L);

PeriodicFunction make_constant(double c);
// cos 2 pi x: smooth, hence Dini at every point.
PeriodicFunction make_cosine();
// Real part of a finite Fourier sum: smooth.
PeriodicFunction make_trig_polynomial(const FourierMap& c, std::string name = "trig");
// sin(a log x)/log x, g(a,1) = a, g(a,0) = 0: Lipschitz near 1, bounded by 1/|log x| near 0.
PeriodicFunction make_g(double a);
// cos((n+1/2) log x) sin(log x / 2)/log x, g_n(1) = 1/2.
PeriodicFunction make_gn(long n);
// sin((b-a) L/2) cos((a+b) L/2)/L with L = log x, g(1) = (b-a)/2.
PeriodicFunction make_gab(double a, double b);

// f(x)/x^sigma.
PeriodicFunction sigma_weight(const PeriodicFunction& f, double sigma);
// x^sigma p(x), so that sigma_weight of the result is p again.
PeriodicFunction power_weight(const PeriodicFunction& p, double sigma);

struct CoefficientResult {
    cplx value;
    double error_estimate = 0.0;
    bool converged = true;
};

// Integral over (0,1) of f(x) x^-sigma e^{-2 pi i nu x}.
CoefficientResult fourier_coeff_numeric(const PeriodicFunction& f, long nu, double sigma, double tol);

struct SeriesCoefficient {
    double value = 0.0;
    double first_omitted = 0.0;  // magnitude of the first term left out
    double max_term = 0.0;
};

// Real part of the k-th coefficient of (g_n)_sigma by its power series in 2 pi k.
SeriesCoefficient gn_sigma_coeff_series(long n, double sigma, long k, int terms);

// arctan(a/(1-sigma)) = integral over (0,1) of sin(a log t)/(t^sigma log t).
double integral_g_sigma(double a, double sigma);

struct JordanFunction {
    PeriodicFunction f;
    double normalizer = 0.0;  // c(a) = 1/(2 zeta(a))
    double tail_bound = 0.0;  // pointwise bound on the truncated part
};

// c(a) sum_{0<|l|<=T} |l|^-a e_l(x): absolutely convergent series, continuous.
JordanFunction make_jordan_function(double a, long truncation);

}  // namespace qf
