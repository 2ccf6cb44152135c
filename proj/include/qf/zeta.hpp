#pragma once

#include <utility>
#include <vector>

#include "qf/common.hpp"
#include "qf/quad.hpp"

namespace qf {

enum class ZetaMethod { euler_maclaurin, approx_fe };

struct ZetaEvaluator {
    ZetaMethod method = ZetaMethod::euler_maclaurin;
    double target_accuracy = 1e-10;
    int em_correction_order = 12;
    double afe_x_factor = 2.0;
    double t_ceiling = 1e4;
};

struct ZetaValue {
    cplx value;
    double error_bound = 0.0;
    long terms = 0;
};

// zeta(s) for real s > 0, s != 1, by the accelerated alternating series.
double zeta_real(double s, double tol = 1e-15);

ZetaValue zeta_point_detail(const ZetaEvaluator& ev, double sigma, double t);
cplx zeta_point(const ZetaEvaluator& ev, double sigma, double t);

// Closed form of the integral over [a,b] of |sum_{k<=N} k^{-sigma-it}|^2.
double dirichlet_poly_sq_integral(long N, double sigma, double a, double b);

// Integral of |zeta(sigma+it)|^2 over [a,b], unit windows with panel widths
// below 2 pi/(4 log(2t)).
QuadratureResult zeta_sq_integral(const ZetaEvaluator& ev, double sigma, double a, double b, double tol);

struct LocalIntegralReport {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
    double quadratic_sum = 0.0;      // S_{b,sigma}(g(a,b))
    double prediction = 0.0;         // -zeta(2 sigma)(b-a) + 4 S
    double residual = 0.0;
    double prediction_finite = 0.0;  // -(b-a) sum_{k<=b} k^{-2 sigma} + 4 S
    double residual_finite = 0.0;
};

LocalIntegralReport local_zeta_integral(const ZetaEvaluator& ev, double a, double b, double sigma, double tol);

struct ParsevalConstantReport {
    double closed_form = 0.0;
    double integral_route = 0.0;
    double integral_error = 0.0;
    double bracket = 0.0;  // zeta(2 sigma)/2 + zeta(2 sigma - 1)/(2 sigma - 1)
};

ParsevalConstantReport parseval_constant(double sigma, double tol);

struct CauchyIntegralReport {
    double value = 0.0;
    double error_estimate = 0.0;
    double truncated = 0.0;
    double tail = 0.0;
    bool converged = true;
};

// Mean density log(t/2 pi) + 2 gamma of |zeta(1/2+it)|^2, used for tails.
double critical_mean_density(double t);

CauchyIntegralReport parseval_half(const ZetaEvaluator& ev, double Tmax, double tol);
CauchyIntegralReport lw_cauchy_integral(const ZetaEvaluator& ev, long n, double Tmax, double tol);

QuadratureResult mean_value(const ZetaEvaluator& ev, double T, double sigma, double tol);

struct StepanovScan {
    std::vector<double> windows;      // windows[i] = integral over [i+1, i+2]
    std::vector<double> running_sup;
    double error_estimate = 0.0;
    bool converged = true;
};

StepanovScan stepanov_scan(const ZetaEvaluator& ev, double sigma, long N, double tol);

// (k_b, K_b).
std::pair<double, double> amalgam_norm_bounds(double b);

}  // namespace qf
