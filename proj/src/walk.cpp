#include "qf/walk.hpp"

#include <algorithm>
#include <cmath>

#include "qf/parallel.hpp"

namespace qf {

double uniform_open(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double sample_cauchy(std::mt19937_64& rng) {
    return std::tan(constants::pi * (uniform_open(rng) - 0.5));
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t block) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (block + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

struct Moments {
    long used = 0, clipped = 0;
    KahanSum z2, z2sq, inc, incsq, re, resq, im, imsq;
};

}  // namespace

WalkReport walk_moments(const WalkConfig& cfg) {
    require(cfg.n >= 1, "walk_moments: n must be positive");
    require(cfg.samples >= 2, "walk_moments: need at least two samples");
    require(cfg.t_cap > 0 && cfg.t_cap <= cfg.ev.t_ceiling, "walk_moments: t_cap must lie in (0, ceiling]");
    auto nblocks = static_cast<std::size_t>((cfg.samples + kWalkBlock - 1) / kWalkBlock);
    auto parts = map_blocks<Moments>(nblocks, 1, [&](std::size_t b0, std::size_t) {
        Moments m;
        std::mt19937_64 rng(substream_seed(cfg.seed, b0));
        long lo = static_cast<long>(b0) * kWalkBlock;
        long hi = std::min(cfg.samples, lo + kWalkBlock);
        for (long i = lo; i < hi; ++i) {
            double s = 0.0;
            for (long j = 0; j < cfg.n; ++j) s += sample_cauchy(rng);
            double s2 = s + sample_cauchy(rng) + sample_cauchy(rng);
            if (std::fabs(s) > cfg.t_cap || std::fabs(s2) > cfg.t_cap) {
                ++m.clipped;
                continue;
            }
            cplx z1 = zeta_point(cfg.ev, 0.5, s);
            cplx z2 = zeta_point(cfg.ev, 0.5, s2);
            double a = std::norm(z1), d = std::norm(z2 - z1);
            ++m.used;
            m.z2.add(a);
            m.z2sq.add(a * a);
            m.inc.add(d);
            m.incsq.add(d * d);
            m.re.add(z1.real());
            m.resq.add(z1.real() * z1.real());
            m.im.add(z1.imag());
            m.imsq.add(z1.imag() * z1.imag());
        }
        return m;
    });
    Moments t;
    for (const auto& p : parts) {
        t.used += p.used;
        t.clipped += p.clipped;
        t.z2 += p.z2;
        t.z2sq += p.z2sq;
        t.inc += p.inc;
        t.incsq += p.incsq;
        t.re += p.re;
        t.resq += p.resq;
        t.im += p.im;
        t.imsq += p.imsq;
    }
    WalkReport r;
    r.n = cfg.n;
    r.samples = cfg.samples;
    r.used = t.used;
    r.clipped_fraction = static_cast<double>(t.clipped) / static_cast<double>(cfg.samples);
    r.reliable = r.clipped_fraction <= 0.2;
    if (t.used < 2) {
        r.reliable = false;
        return r;
    }
    double u = static_cast<double>(t.used);
    auto se = [u](const KahanSum& s, const KahanSum& sq) {
        double mean = s.value() / u;
        double var = (sq.value() / u - mean * mean) * u / (u - 1.0);
        return std::sqrt(std::max(var, 0.0) / u);
    };
    r.second_moment = t.z2.value() / u;
    r.second_moment_se = se(t.z2, t.z2sq);
    r.increment_moment = t.inc.value() / u;
    r.increment_se = se(t.inc, t.incsq);
    r.mean_zeta = cplx(t.re.value() / u, t.im.value() / u);
    r.mean_zeta_se_re = se(t.re, t.resq);
    r.mean_zeta_se_im = se(t.im, t.imsq);
    return r;
}

}  // namespace qf
