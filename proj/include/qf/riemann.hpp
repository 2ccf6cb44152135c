#pragma once

#include <vector>

#include "qf/common.hpp"
#include "qf/funclib.hpp"

namespace qf {

struct RiemannSum {
    double D = 0.0;  // sum_{k<=l} f(k/l)(k/l)^-sigma
    double R = 0.0;  // D / l
};

RiemannSum riemann_partial_sum(const PeriodicFunction& f, long ell, double sigma);

// R_{f_sigma}(l) for l = 1..n (index 0 unused).
std::vector<double> riemann_means(const PeriodicFunction& f, long n, double sigma);

// d-1 if d | l, else -1.
inline double epsilon_l(long l, long d) { return (l % d == 0) ? static_cast<double>(d - 1) : -1.0; }

// f(1) + sum_l c(l) eps_l(d).
double fourier_riemann_sum(const FourierMap& c, double f1, long d);

double quadratic_riemann_sum(const PeriodicFunction& f, long n, double sigma);
// S_{m,sigma}(f) for m = 0..n.
std::vector<double> quadratic_riemann_prefix(const PeriodicFunction& f, long n, double sigma);
// The k <= l double loop, kept as an oracle.
double quadratic_riemann_sum_naive(const PeriodicFunction& f, long n, double sigma);
double quadratic_riemann_sum_truncated(const PeriodicFunction& f, long n, double sigma, double alpha);

// Coefficients are those of f_sigma, f1 = f_sigma(1). With f1 = 0 these are
// the expansions for functions vanishing at 1; in general the endpoint term
// f1 * sum l^{-2 sigma} is carried explicitly.
double fourier_expansion_S(const FourierMap& c, double f1, long n, double sigma);
// Same quantity through divisor sums over l | nu.
double fourier_expansion_S_divisor(const FourierMap& c, double f1, long n, double sigma);

struct PowerSumEstimate {
    long m = 0;
    double sigma = 0.0;
    double exact = 0.0;
    double main_term = 0.0;
    double constant_term = 0.0;
    double residual = 0.0;
};

// sum_{l<=m} l^{1-2 sigma} against its main and constant terms.
PowerSumEstimate power_sum_partial(long m, double sigma);

struct VarpiAccumulation {
    std::vector<double> partial;  // partial[N-1] = sum_{n<=N} |Theta_n|/n^2
    std::vector<double> running_max;
    double value = 0.0;
};

VarpiAccumulation varpi_error_accumulation(const PeriodicFunction& f, double sigma, long N);

}  // namespace qf
