#pragma once

#include <cstdint>
#include <vector>

namespace qf {

// Index 0 of every table is unused; entries run 1..limit.
struct SieveTables {
    std::int64_t limit = 0;
    std::vector<std::int8_t> mu;
    std::vector<std::int64_t> phi;
    std::vector<std::int32_t> spf;
    std::vector<std::int64_t> mertens;
};

SieveTables build_sieve(std::int64_t N);

// M(floor(x)); zero for x < 1.
std::int64_t mertens(const SieveTables& t, double x);
std::int64_t mertens(const SieveTables& t, std::int64_t n);

// Sum_{k <= floor(x)} mu(k) / k^tau, compensated.
double weighted_mobius_sum(const SieveTables& t, double x, double tau);

// Table of m_tau(j) for j = 0..n, used by the convolution formulas.
std::vector<double> weighted_mobius_prefix(const SieveTables& t, std::int64_t n, double tau);

std::int64_t totient_summatory(const SieveTables& t, std::int64_t n);

double divisor_power_sum(std::int64_t n, double s);
std::int64_t divisor_count(std::int64_t n);
double jordan_totient(std::int64_t n, double s);

// Positive divisors of n in increasing order (trial division).
std::vector<std::int64_t> divisors(std::int64_t n);

int mobius(std::int64_t n);

}  // namespace qf
