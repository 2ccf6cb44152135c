#include "qf/farey.hpp"

#include <cmath>
#include <numeric>

#include "qf/parallel.hpp"
#include "qf/riemann.hpp"

namespace qf {

FareyStream::FareyStream(long n) : n_(n), a_(0), b_(1), c_(1), d_(n) {
    require(n >= 1, "farey_sequence: n must be positive");
}

bool FareyStream::next(FareyFraction& out) {
    if (done_) return false;
    out = {c_, d_};
    if (c_ == 1 && d_ == 1) {
        done_ = true;
        return true;
    }
    long k = (n_ + b_) / d_;
    long c = k * c_ - a_, d = k * d_ - b_;
    a_ = c_;
    b_ = d_;
    c_ = c;
    d_ = d;
    return true;
}

std::vector<FareyFraction> farey_sequence(long n) {
    FareyStream s(n);
    std::vector<FareyFraction> out;
    FareyFraction f;
    while (s.next(f)) out.push_back(f);
    return out;
}

double weighted_farey_sum(const PeriodicFunction& f, long n, double sigma) {
    FareyStream s(n);
    KahanSum acc;
    FareyFraction q;
    while (s.next(q)) {
        double v = f(q.value());
        if (sigma != 0.0) v *= std::pow(static_cast<double>(q.num) * static_cast<double>(q.den), -sigma);
        acc.add(v);
    }
    return acc.value();
}

double farey_sum(const PeriodicFunction& f, long n) { return weighted_farey_sum(f, n, 0.0); }

namespace {

// Contribution of denominator l: sum over reduced k/l.
template <class Fn>
std::vector<double> denominator_bands(long n, Fn term) {
    auto parts = map_blocks<std::vector<double>>(static_cast<std::size_t>(n), 64, [&](std::size_t i0, std::size_t i1) {
        std::vector<double> r;
        for (std::size_t i = i0; i < i1; ++i) {
            long l = static_cast<long>(i) + 1;
            KahanSum s;
            for (long k = 1; k <= l; ++k)
                if (std::gcd(k, l) == 1) s.add(term(k, l));
            r.push_back(s.value());
        }
        return r;
    });
    std::vector<double> out(1, 0.0);
    KahanSum acc;
    for (const auto& p : parts)
        for (double v : p) {
            acc.add(v);
            out.push_back(acc.value());
        }
    return out;
}

}  // namespace

std::vector<double> weighted_farey_prefix(const PeriodicFunction& f, long n, double sigma) {
    require(n >= 1, "weighted_farey_prefix: n must be positive");
    return denominator_bands(n, [&](long k, long l) {
        double x = (k == l) ? 1.0 : static_cast<double>(k) / static_cast<double>(l);
        double v = f(x);
        if (sigma != 0.0) v *= std::pow(static_cast<double>(k) * static_cast<double>(l), -sigma);
        return v;
    });
}

double weighted_farey_abs_sum(const PeriodicFunction& f, long n, double sigma) {
    require(n >= 1, "weighted_farey_abs_sum: n must be positive");
    return denominator_bands(n, [&](long k, long l) {
        double x = (k == l) ? 1.0 : static_cast<double>(k) / static_cast<double>(l);
        return std::fabs(f(x)) * std::pow(static_cast<double>(k) * static_cast<double>(l), -sigma);
    }).back();
}

std::vector<double> farey_convolution_prefix(const PeriodicFunction& f, long n, double sigma, const SieveTables& t) {
    require(n >= 1, "farey_convolution_prefix: n must be positive");
    if (n > t.limit) throw OutOfRange("farey_convolution_prefix: n exceeds sieve limit");
    auto R = riemann_means(f, n, sigma);
    auto m = weighted_mobius_prefix(t, n, 2.0 * sigma);
    // D(d)/d^{2 sigma} = R(d) d^{1 - 2 sigma}.
    std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
    for (long d = 1; d <= n; ++d) w[d] = R[d] * std::pow(static_cast<double>(d), 1.0 - 2.0 * sigma);
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    auto parts = map_blocks<std::vector<double>>(static_cast<std::size_t>(n), 64, [&](std::size_t i0, std::size_t i1) {
        std::vector<double> r;
        for (std::size_t i = i0; i < i1; ++i) {
            long nn = static_cast<long>(i) + 1;
            KahanSum s;
            for (long d = 1; d <= nn; ++d) s.add(w[d] * m[nn / d]);
            r.push_back(s.value());
        }
        return r;
    });
    std::size_t idx = 1;
    for (const auto& p : parts)
        for (double v : p) out[idx++] = v;
    return out;
}

double farey_sum_via_convolution(const PeriodicFunction& f, long n, double sigma, const SieveTables& t) {
    require(n >= 1, "farey_sum_via_convolution: n must be positive");
    if (n > t.limit) throw OutOfRange("farey_sum_via_convolution: n exceeds sieve limit");
    auto R = riemann_means(f, n, sigma);
    auto m = weighted_mobius_prefix(t, n, 2.0 * sigma);
    KahanSum s;
    for (long d = 1; d <= n; ++d) s.add(R[d] * std::pow(static_cast<double>(d), 1.0 - 2.0 * sigma) * m[n / d]);
    return s.value();
}

double farey_error_term(const PeriodicFunction& f, long n, const SieveTables& t) {
    if (!f.exact_integral) throw InvalidArgument("farey_error_term: f lacks an exact integral");
    return farey_sum(f, n) - static_cast<double>(totient_summatory(t, n)) * *f.exact_integral;
}

double farey_error_fourier_formula(const FourierMap& c, double f1, long n, const SieveTables& t) {
    require(n >= 1, "farey_error_fourier_formula: n must be positive");
    if (n > t.limit) throw OutOfRange("farey_error_fourier_formula: n exceeds sieve limit");
    ComplexKahanSum s;
    s.add(cplx(f1, 0.0));
    for (const auto& [l, cv] : c) s.add(-cv);
    for (const auto& [l, cv] : c) {
        if (l == 0) continue;
        KahanSum inner;
        for (auto d : divisors(std::labs(l)))
            if (d <= n) inner.add(static_cast<double>(d) * static_cast<double>(mertens(t, n / d)));
        s.add(cv * inner.value());
    }
    return s.value().real();
}

}  // namespace qf
