#include "qf/moebinv.hpp"

#include <cmath>
#include <limits>

#include "qf/arith.hpp"
#include "qf/common.hpp"

namespace qf {

namespace {

template <class T>
void check_grid(const GridSequence<T>& g) {
    require(g.support_bound >= 1, "grid: support bound must be positive");
    for (const auto& [k, v] : g.values) require(k >= 1 && k <= g.support_bound, "grid: index outside 1..support_bound");
}

template <class T>
GridSequence<T> invert(const GridSequence<T>& g) {
    check_grid(g);
    if (!std::isfinite(check_inversion_condition(g)))
        throw InvalidArgument("mobius_invert: inversion condition fails");
    long B = g.support_bound;
    SieveTables t = build_sieve(B);
    GridSequence<T> f;
    f.support_bound = B;
    for (long m = 1; m <= B; ++m) {
        T acc(0);
        for (long n = 1; n * m <= B; ++n) {
            if (t.mu[n] == 0) continue;
            auto it = g.values.find(n * m);
            if (it == g.values.end()) continue;
            if (t.mu[n] > 0)
                acc += it->second;
            else
                acc -= it->second;
        }
        if (acc != T(0)) f.values.emplace(m, acc);
    }
    return f;
}

template <class T>
GridSequence<T> multiples(const GridSequence<T>& f) {
    check_grid(f);
    long B = f.support_bound;
    GridSequence<T> g;
    g.support_bound = B;
    for (long m = 1; m <= B; ++m) {
        T acc(0);
        for (long k = 1; k * m <= B; ++k) {
            auto it = f.values.find(k * m);
            if (it != f.values.end()) acc += it->second;
        }
        if (acc != T(0)) g.values.emplace(m, acc);
    }
    return g;
}

double condition(const std::map<long, double>& absval, long bound, const std::optional<DecayMajorant>& maj) {
    KahanSum s;
    for (const auto& [k, v] : absval) s.add(static_cast<double>(divisor_count(k)) * v);
    if (maj) {
        double p = maj->exponent, A = maj->coefficient;
        if (p <= 1.0) return std::numeric_limits<double>::infinity();
        // sum_{n>B} d(n) n^-p against the mean value log x + 2 gamma of d.
        double B = static_cast<double>(bound), q = p - 1.0;
        double tail = std::pow(B, -q) * (std::log(B) / q + 1.0 / (q * q) + 2.0 * constants::euler_gamma / q);
        s.add(A * tail);
    }
    return s.value();
}

}  // namespace

RationalGrid mobius_invert(const RationalGrid& g) { return invert(g); }
RealGrid mobius_invert(const RealGrid& g) { return invert(g); }
RationalGrid mobius_sum_multiples(const RationalGrid& f) { return multiples(f); }
RealGrid mobius_sum_multiples(const RealGrid& f) { return multiples(f); }

double check_inversion_condition(const RealGrid& g) {
    std::map<long, double> a;
    for (const auto& [k, v] : g.values) a[k] = std::fabs(v);
    return condition(a, g.support_bound, g.majorant);
}

double check_inversion_condition(const RationalGrid& g) {
    std::map<long, double> a;
    for (const auto& [k, v] : g.values) a[k] = std::fabs(static_cast<double>(v));
    return condition(a, g.support_bound, g.majorant);
}

}  // namespace qf
