#include "qf/arith.hpp"

#include <algorithm>
#include <cmath>

#include "qf/common.hpp"

namespace qf {

SieveTables build_sieve(std::int64_t N) {
    require(N >= 1, "build_sieve: N must be positive");
    SieveTables t;
    t.limit = N;
    std::size_t sz = static_cast<std::size_t>(N) + 1;
    t.mu.assign(sz, 0);
    t.phi.assign(sz, 0);
    t.spf.assign(sz, 0);
    t.mertens.assign(sz, 0);
    std::vector<std::int32_t> primes;
    t.mu[1] = 1;
    t.phi[1] = 1;
    for (std::int64_t i = 2; i <= N; ++i) {
        if (t.spf[i] == 0) {
            t.spf[i] = static_cast<std::int32_t>(i);
            t.mu[i] = -1;
            t.phi[i] = i - 1;
            primes.push_back(static_cast<std::int32_t>(i));
        }
        for (std::int32_t p : primes) {
            std::int64_t ip = i * p;
            if (p > t.spf[i] || ip > N) break;
            t.spf[ip] = p;
            if (p == t.spf[i]) {
                t.mu[ip] = 0;
                t.phi[ip] = t.phi[i] * p;
            } else {
                t.mu[ip] = static_cast<std::int8_t>(-t.mu[i]);
                t.phi[ip] = t.phi[i] * (p - 1);
            }
        }
    }
    std::int64_t acc = 0;
    for (std::int64_t i = 1; i <= N; ++i) {
        acc += t.mu[i];
        t.mertens[i] = acc;
    }
    return t;
}

std::int64_t mertens(const SieveTables& t, std::int64_t n) {
    if (n < 1) return 0;
    if (n > t.limit) throw OutOfRange("mertens: argument exceeds sieve limit");
    return t.mertens[n];
}

std::int64_t mertens(const SieveTables& t, double x) {
    if (x < 1.0) return 0;
    return mertens(t, static_cast<std::int64_t>(std::floor(x)));
}

double weighted_mobius_sum(const SieveTables& t, double x, double tau) {
    if (x < 1.0) return 0.0;
    auto n = static_cast<std::int64_t>(std::floor(x));
    if (n > t.limit) throw OutOfRange("weighted_mobius_sum: argument exceeds sieve limit");
    KahanSum s;
    for (std::int64_t k = 1; k <= n; ++k)
        if (t.mu[k] != 0) s.add(t.mu[k] * std::pow(static_cast<double>(k), -tau));
    return s.value();
}

std::vector<double> weighted_mobius_prefix(const SieveTables& t, std::int64_t n, double tau) {
    if (n > t.limit) throw OutOfRange("weighted_mobius_prefix: argument exceeds sieve limit");
    std::vector<double> out(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)) + 1, 0.0);
    KahanSum s;
    for (std::int64_t k = 1; k <= n; ++k) {
        if (t.mu[k] != 0) s.add(t.mu[k] * std::pow(static_cast<double>(k), -tau));
        out[k] = s.value();
    }
    return out;
}

std::int64_t totient_summatory(const SieveTables& t, std::int64_t n) {
    require(n >= 1, "totient_summatory: n must be positive");
    if (n > t.limit) throw OutOfRange("totient_summatory: argument exceeds sieve limit");
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d) s += t.phi[d];
    return s;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require(n >= 1, "divisors: n must be positive");
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

int mobius(std::int64_t n) {
    require(n >= 1, "mobius: n must be positive");
    int m = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

double divisor_power_sum(std::int64_t n, double s) {
    require(n >= 1, "divisor_power_sum: n must be positive");
    KahanSum acc;
    for (auto d : divisors(n)) acc.add(std::pow(static_cast<double>(d), s));
    return acc.value();
}

std::int64_t divisor_count(std::int64_t n) {
    return static_cast<std::int64_t>(divisors(n).size());
}

double jordan_totient(std::int64_t n, double s) {
    require(n >= 1, "jordan_totient: n must be positive");
    KahanSum acc;
    for (auto d : divisors(n)) {
        int m = mobius(n / d);
        if (m) acc.add(m * std::pow(static_cast<double>(d), s));
    }
    return acc.value();
}

}  // namespace qf
