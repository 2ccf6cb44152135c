#include "qf/riemann.hpp"

#include <algorithm>
#include <cmath>

#include "qf/arith.hpp"
#include "qf/parallel.hpp"
#include "qf/zeta.hpp"

namespace qf {

namespace {

double weighted_riemann_D(const PeriodicFunction& f, long ell, double sigma) {
    KahanSum s;
    double inv = 1.0 / static_cast<double>(ell);
    for (long k = 1; k <= ell; ++k) {
        double x = (k == ell) ? 1.0 : static_cast<double>(k) * inv;
        double v = f(x);
        if (sigma != 0.0) v *= std::pow(x, -sigma);
        s.add(v);
    }
    return s.value();
}

}  // namespace

RiemannSum riemann_partial_sum(const PeriodicFunction& f, long ell, double sigma) {
    require(ell >= 1, "riemann_partial_sum: ell must be positive");
    double D = weighted_riemann_D(f, ell, sigma);
    return {D, D / static_cast<double>(ell)};
}

std::vector<double> riemann_means(const PeriodicFunction& f, long n, double sigma) {
    require(n >= 1, "riemann_means: n must be positive");
    // (k/l)^-sigma = k^-sigma l^sigma, with k^-sigma tabulated once.
    std::vector<double> kp(static_cast<std::size_t>(n) + 1, 1.0);
    if (sigma != 0.0)
        for (long k = 1; k <= n; ++k) kp[k] = std::pow(static_cast<double>(k), -sigma);
    auto parts = map_blocks<std::vector<double>>(static_cast<std::size_t>(n), 256, [&](std::size_t i0, std::size_t i1) {
        std::vector<double> r;
        for (std::size_t i = i0; i < i1; ++i) {
            long ell = static_cast<long>(i) + 1;
            double inv = 1.0 / static_cast<double>(ell);
            KahanSum s;
            for (long k = 1; k < ell; ++k) s.add(f(static_cast<double>(k) * inv) * kp[k]);
            s.add(f(1.0) * kp[ell]);
            r.push_back(s.value() / (kp[ell] * static_cast<double>(ell)));
        }
        return r;
    });
    std::vector<double> out(1, 0.0);
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

double fourier_riemann_sum(const FourierMap& c, double f1, long d) {
    require(d >= 1, "fourier_riemann_sum: d must be positive");
    ComplexKahanSum s;
    s.add(cplx(f1, 0.0));
    for (const auto& [l, cv] : c) s.add(cv * epsilon_l(l, d));
    return s.value().real();
}

std::vector<double> quadratic_riemann_prefix(const PeriodicFunction& f, long n, double sigma) {
    auto R = riemann_means(f, n, sigma);
    std::vector<double> S(static_cast<std::size_t>(n) + 1, 0.0);
    KahanSum acc;
    for (long l = 1; l <= n; ++l) {
        acc.add(std::pow(static_cast<double>(l), 1.0 - 2.0 * sigma) * R[l]);
        S[l] = acc.value();
    }
    return S;
}

double quadratic_riemann_sum(const PeriodicFunction& f, long n, double sigma) {
    require(n >= 1, "quadratic_riemann_sum: n must be positive");
    return quadratic_riemann_prefix(f, n, sigma).back();
}

double quadratic_riemann_sum_naive(const PeriodicFunction& f, long n, double sigma) {
    require(n >= 1, "quadratic_riemann_sum_naive: n must be positive");
    KahanSum s;
    for (long k = 1; k <= n; ++k)
        for (long l = k; l <= n; ++l) {
            double x = (k == l) ? 1.0 : static_cast<double>(k) / static_cast<double>(l);
            s.add(f(x) / std::pow(static_cast<double>(k) * static_cast<double>(l), sigma));
        }
    return s.value();
}

double quadratic_riemann_sum_truncated(const PeriodicFunction& f, long n, double sigma, double alpha) {
    require(alpha > 0.0 && alpha < 1.0, "quadratic_riemann_sum_truncated: alpha must lie in (0,1)");
    require(n >= 1, "quadratic_riemann_sum_truncated: n must be positive");
    double top = std::pow(static_cast<double>(n), alpha);
    double r = std::round(top);
    long m = std::fabs(top - r) < 1e-9 * std::max(1.0, top) ? static_cast<long>(r) : static_cast<long>(std::floor(top));
    if (m < 1) return 0.0;
    return quadratic_riemann_sum(f, m, sigma);
}

double fourier_expansion_S(const FourierMap& c, double f1, long n, double sigma) {
    require(n >= 1, "fourier_expansion_S: n must be positive");
    ComplexKahanSum s;
    KahanSum base;
    for (long l = 1; l <= n; ++l) base.add(std::pow(static_cast<double>(l), -2.0 * sigma));
    s.add(cplx(f1 * base.value(), 0.0));
    for (const auto& [nu, cv] : c) {
        // eps_0(l) = l - 1 covers the mean term.
        KahanSum inner;
        for (long l = 1; l <= n; ++l) inner.add(std::pow(static_cast<double>(l), -2.0 * sigma) * epsilon_l(nu, l));
        s.add(cv * inner.value());
    }
    return s.value().real();
}

double fourier_expansion_S_divisor(const FourierMap& c, double f1, long n, double sigma) {
    require(n >= 1, "fourier_expansion_S_divisor: n must be positive");
    KahanSum pw, neg;
    for (long l = 1; l <= n; ++l) {
        pw.add(std::pow(static_cast<double>(l), 1.0 - 2.0 * sigma));
        neg.add(std::pow(static_cast<double>(l), -2.0 * sigma));
    }
    ComplexKahanSum s, total;
    s.add(cplx(f1 * neg.value(), 0.0));
    for (const auto& [nu, cv] : c) {
        total.add(cv);
        if (nu == 0) {
            s.add(cv * pw.value());
            continue;
        }
        KahanSum d;
        for (auto l : divisors(std::labs(nu)))
            if (l <= n) d.add(std::pow(static_cast<double>(l), 1.0 - 2.0 * sigma));
        s.add(cv * d.value());
    }
    s.add(-total.value() * neg.value());
    return s.value().real();
}

PowerSumEstimate power_sum_partial(long m, double sigma) {
    require(m >= 1, "power_sum_partial: m must be positive");
    require(sigma >= 0.0 && sigma <= 1.0, "power_sum_partial: sigma must lie in [0,1]");
    PowerSumEstimate e;
    e.m = m;
    e.sigma = sigma;
    double md = static_cast<double>(m);
    if (sigma == 0.0) {
        e.exact = md * (md + 1.0) / 2.0;
        e.main_term = e.exact;
    } else if (sigma == 0.5) {
        e.exact = md;
        e.main_term = md;
    } else {
        KahanSum s;
        for (long l = m; l >= 1; --l) s.add(std::pow(static_cast<double>(l), 1.0 - 2.0 * sigma));
        e.exact = s.value();
        if (sigma == 1.0) {
            e.main_term = std::log(md);
            e.constant_term = constants::euler_gamma;
        } else {
            e.main_term = std::pow(md, 2.0 * (1.0 - sigma)) / (2.0 * (1.0 - sigma));
            if (sigma > 0.5) e.constant_term = zeta_real(2.0 * sigma - 1.0);
        }
    }
    e.residual = e.exact - e.main_term - e.constant_term;
    return e;
}

VarpiAccumulation varpi_error_accumulation(const PeriodicFunction& f, double sigma, long N) {
    require(N >= 1, "varpi_error_accumulation: N must be positive");
    auto I = f.weighted_integral(sigma);
    if (!I) throw InvalidArgument("varpi_error_accumulation: f lacks an exact weighted integral");
    auto S = quadratic_riemann_prefix(f, N, sigma);
    VarpiAccumulation v;
    KahanSum pw, acc;
    double mx = 0.0;
    for (long n = 1; n <= N; ++n) {
        pw.add(std::pow(static_cast<double>(n), 1.0 - 2.0 * sigma));
        double theta = S[n] - *I * pw.value();
        acc.add(std::fabs(theta) / (static_cast<double>(n) * static_cast<double>(n)));
        v.partial.push_back(acc.value());
        mx = std::max(mx, acc.value());
        v.running_max.push_back(mx);
    }
    v.value = acc.value();
    return v;
}

}  // namespace qf
