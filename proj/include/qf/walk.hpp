#pragma once

#include <cstdint>
#include <random>

#include "qf/zeta.hpp"

namespace qf {

struct WalkConfig {
    long n = 8;
    long samples = 10000;
    std::uint64_t seed = 1;
    double t_cap = 5000.0;
    ZetaEvaluator ev;
};

// Open-interval uniform from 53 random bits.
double uniform_open(std::mt19937_64& rng);
// tan(pi (U - 1/2)).
double sample_cauchy(std::mt19937_64& rng);
// Seed of sample block `block`, derived from the master seed by splitmix64.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t block);

struct WalkReport {
    long n = 0;
    long samples = 0;
    long used = 0;
    double clipped_fraction = 0.0;
    double second_moment = 0.0;  // E|zeta(1/2 + i S_n)|^2
    double second_moment_se = 0.0;
    double increment_moment = 0.0;  // E|zeta(1/2 + i S_{n+2}) - zeta(1/2 + i S_n)|^2
    double increment_se = 0.0;
    cplx mean_zeta;  // E zeta(1/2 + i S_n)
    double mean_zeta_se_re = 0.0;
    double mean_zeta_se_im = 0.0;
    bool reliable = true;  // clipped fraction at most 20%
};

WalkReport walk_moments(const WalkConfig& cfg);

// Samples per independently seeded block.
inline constexpr long kWalkBlock = 256;

}  // namespace qf
