#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace qf {

using cplx = std::complex<double>;

// Fourier coefficient map nu -> c(nu); finitely supported by construction.
using FourierMap = std::map<long, cplx>;

namespace constants {
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 6.28318530717958647692;
// Euler-Mascheroni, 20 significant digits (OEIS A001620).
inline constexpr double euler_gamma = 0.57721566490153286061;
// log(2*pi) (OEIS A061444).
inline constexpr double log_two_pi = 1.8378770664093454836;
// pi^2/6 (OEIS A013661).
inline constexpr double zeta2 = 1.6449340668482264365;
}  // namespace constants

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Neumaier variant of Kahan summation.
class KahanSum {
public:
    KahanSum() = default;
    explicit KahanSum(double v) : sum_(v) {}

    void add(double x) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    KahanSum& operator+=(double x) {
        add(x);
        return *this;
    }
    KahanSum& operator+=(const KahanSum& o) {
        add(o.sum_);
        add(o.comp_);
        return *this;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexKahanSum {
public:
    void add(cplx z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    ComplexKahanSum& operator+=(cplx z) {
        add(z);
        return *this;
    }
    ComplexKahanSum& operator+=(const ComplexKahanSum& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    cplx value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidArgument(msg);
}

}  // namespace qf
