#pragma once

#include <vector>

#include "qf/arith.hpp"
#include "qf/funclib.hpp"

namespace qf {

struct FareyFraction {
    long num = 1;
    long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const FareyFraction&) const = default;
};

// Constant-memory enumeration of F_n in increasing order, ending at 1/1.
class FareyStream {
public:
    explicit FareyStream(long n);
    bool next(FareyFraction& out);

private:
    long n_, a_, b_, c_, d_;
    bool done_ = false;
};

std::vector<FareyFraction> farey_sequence(long n);

double farey_sum(const PeriodicFunction& f, long n);
double weighted_farey_sum(const PeriodicFunction& f, long n, double sigma);
// F_{m,sigma}(f) for m = 0..n, accumulated by denominator bands.
std::vector<double> weighted_farey_prefix(const PeriodicFunction& f, long n, double sigma);
// Sum of |f(k/l)|/(kl)^sigma over F_n; the conditioning scale of the sum.
double weighted_farey_abs_sum(const PeriodicFunction& f, long n, double sigma);

double farey_sum_via_convolution(const PeriodicFunction& f, long n, double sigma, const SieveTables& t);
// Convolution path for every m = 0..n, sharing the Riemann sums.
std::vector<double> farey_convolution_prefix(const PeriodicFunction& f, long n, double sigma, const SieveTables& t);

double farey_error_term(const PeriodicFunction& f, long n, const SieveTables& t);
double farey_error_fourier_formula(const FourierMap& c, double f1, long n, const SieveTables& t);

}  // namespace qf
