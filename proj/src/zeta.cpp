#include "qf/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qf/funclib.hpp"
#include "qf/parallel.hpp"
#include "qf/riemann.hpp"

namespace qf {

namespace {

// B_{2j}/(2j)! for j = 1..15.
const std::array<double, 16>& bernoulli_ratio() {
    static const std::array<double, 16> table = [] {
        const double b2j[16] = {0.0,
                                1.0 / 6.0,
                                -1.0 / 30.0,
                                1.0 / 42.0,
                                -1.0 / 30.0,
                                5.0 / 66.0,
                                -691.0 / 2730.0,
                                7.0 / 6.0,
                                -3617.0 / 510.0,
                                43867.0 / 798.0,
                                -174611.0 / 330.0,
                                854513.0 / 138.0,
                                -236364091.0 / 2730.0,
                                8553103.0 / 6.0,
                                -23749461029.0 / 870.0,
                                8615841276005.0 / 14322.0};
        std::array<double, 16> r{};
        double fact = 1.0;
        for (int j = 1; j < 16; ++j) {
            fact *= (2.0 * j - 1.0) * (2.0 * j);
            r[j] = b2j[j] / fact;
        }
        return r;
    }();
    return table;
}

constexpr std::size_t kLogTable = 1u << 18;

const std::vector<double>& log_table() {
    static const std::vector<double> t = [] {
        std::vector<double> v(kLogTable);
        v[0] = 0.0;
        for (std::size_t k = 1; k < kLogTable; ++k) v[k] = std::log(static_cast<double>(k));
        return v;
    }();
    return t;
}

inline double logk(long k) {
    return static_cast<std::size_t>(k) < kLogTable ? log_table()[k] : std::log(static_cast<double>(k));
}

// sum_{k<=N} k^{-sigma-it}
cplx dirichlet_partial(double sigma, double t, long N) {
    ComplexKahanSum acc;
    for (long k = 1; k <= N; ++k) {
        double lk = logk(k);
        double mag = std::exp(-sigma * lk);
        acc.add(cplx(mag * std::cos(t * lk), -mag * std::sin(t * lk)));
    }
    return acc.value();
}

ZetaValue zeta_em(const ZetaEvaluator& ev, double sigma, double t) {
    int p = std::clamp(ev.em_correction_order, 1, 14);
    const auto& br = bernoulli_ratio();
    cplx s(sigma, t);
    // log of the remainder constant; the remainder is C N^{-(sigma+2p+1)}.
    double logC = std::log(std::fabs(br[p + 1]));
    for (int j = 0; j <= 2 * p; ++j) logC += std::log(std::abs(s + static_cast<double>(j)));
    logC += std::log(std::abs(s + (2.0 * p + 1.0)) / (sigma + 2.0 * p + 1.0));
    double expo = sigma + 2.0 * p + 1.0;
    double target = ev.target_accuracy;
    double logN = (logC - std::log(target)) / expo;
    long N = logN > 40 ? (1L << 40) : std::max(2L, static_cast<long>(std::ceil(std::exp(logN))));

    ZetaValue out;
    out.terms = N;
    ComplexKahanSum acc;
    acc.add(dirichlet_partial(sigma, t, N));
    double lN = logk(N);
    cplx Ns = std::exp(-s * lN);
    acc.add(static_cast<double>(N) * Ns / (s - 1.0));
    acc.add(-0.5 * Ns);
    cplx poch = s;
    cplx Npow = Ns / static_cast<double>(N);
    double N2 = static_cast<double>(N) * static_cast<double>(N);
    for (int j = 1; j <= p; ++j) {
        acc.add(br[j] * poch * Npow);
        poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        Npow /= N2;
    }
    out.value = acc.value();
    out.error_bound = std::exp(logC - expo * lN) + 1e-15 * static_cast<double>(N);
    return out;
}

ZetaValue zeta_afe(const ZetaEvaluator& ev, double sigma, double t) {
    if (sigma > 0.9 && std::fabs(t) < 0.1)
        throw InvalidArgument("zeta_point: approx_fe mode rejects points near the pole");
    cplx s(sigma, t);
    double x = ev.afe_x_factor * std::max(std::fabs(t), 1.0);
    long N = static_cast<long>(std::floor(x));
    ZetaValue out;
    out.terms = N;
    out.value = dirichlet_partial(sigma, t, N) - std::exp((1.0 - s) * std::log(x)) / (1.0 - s);
    double xs = std::pow(x, -sigma);
    out.error_bound = 0.5 * xs + std::abs(s) / 12.0 * xs / x * (1.0 + std::abs(s + 1.0) / (sigma + 1.0));
    return out;
}

// Integral over [a,b] of fn on unit-aligned windows, processed as fixed blocks.
QuadratureResult integrate_windows(const RealFn& fn, double a, double b, double tol) {
    std::vector<std::pair<double, double>> win;
    double lo = a;
    while (lo < b) {
        double hi = std::min(b, std::floor(lo) + 1.0);
        if (hi <= lo) hi = std::min(b, lo + 1.0);
        win.emplace_back(lo, hi);
        lo = hi;
    }
    double len = b - a;
    auto parts = map_blocks<std::vector<QuadratureResult>>(win.size(), 4, [&](std::size_t i0, std::size_t i1) {
        std::vector<QuadratureResult> r;
        for (std::size_t i = i0; i < i1; ++i) {
            auto [wa, wb] = win[i];
            double tm = std::max({std::fabs(wa), std::fabs(wb), 1.0});
            QuadOptions opt;
            opt.max_initial_width = constants::two_pi / (4.0 * std::log(2.0 * tm));
            r.push_back(integrate_adaptive(fn, wa, wb, tol * (wb - wa) / len, opt));
        }
        return r;
    });
    QuadratureResult out;
    KahanSum v, e;
    for (const auto& blk : parts)
        for (const auto& r : blk) {
            v.add(r.value);
            e.add(r.error_estimate);
            out.panels_used += r.panels_used;
            out.converged = out.converged && r.converged;
        }
    out.value = v.value();
    out.error_estimate = e.value();
    return out;
}

// zeta at real s in (-1,0] via the functional equation.
double zeta_real_extended(double s) {
    if (s > 0.0) return zeta_real(s);
    if (s == 0.0) return -0.5;
    using constants::pi;
    return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(pi * s / 2.0) * std::tgamma(1.0 - s) * zeta_real(1.0 - s);
}

}  // namespace

double zeta_real(double s, double tol) {
    require(s != 1.0, "zeta_real: pole at s = 1");
    require(s > 0.0, "zeta_real: s must be positive");
    require(tol > 0.0, "zeta_real: tol must be positive");
    if (s > 60.0) return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s);
    double denom = 1.0 - std::pow(2.0, 1.0 - s);
    // eta(s) by the Cohen-Villegas-Zagier weights; error below 3/(3+sqrt 8)^n.
    double need = std::log(3.0 / (tol * std::fabs(denom))) / std::log(3.0 + std::sqrt(8.0));
    int n = std::clamp(static_cast<int>(std::ceil(need)), 8, 64);
    std::vector<double> d(n + 1);
    double term = 1.0, acc = 1.0;
    d[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
        acc += term;
        d[i + 1] = acc;
    }
    KahanSum sum;
    for (int k = 0; k < n; ++k) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum.add(sign * (d[k] - d[n]) * std::pow(k + 1.0, -s));
    }
    double eta = -sum.value() / d[n];
    return eta / denom;
}

ZetaValue zeta_point_detail(const ZetaEvaluator& ev, double sigma, double t) {
    require(sigma >= 0.4, "zeta_point: sigma must be at least 0.4");
    require(std::fabs(t) <= ev.t_ceiling, "zeta_point: |t| exceeds the evaluation ceiling");
    require(ev.target_accuracy > 0.0, "zeta_point: target accuracy must be positive");
    require(!(sigma == 1.0 && t == 0.0), "zeta_point: pole at s = 1");
    return ev.method == ZetaMethod::euler_maclaurin ? zeta_em(ev, sigma, t) : zeta_afe(ev, sigma, t);
}

cplx zeta_point(const ZetaEvaluator& ev, double sigma, double t) { return zeta_point_detail(ev, sigma, t).value; }

double dirichlet_poly_sq_integral(long N, double sigma, double a, double b) {
    require(N >= 1, "dirichlet_poly_sq_integral: N must be positive");
    require(a < b, "dirichlet_poly_sq_integral: need a < b");
    std::vector<double> lg(static_cast<std::size_t>(N) + 1), w(static_cast<std::size_t>(N) + 1);
    for (long k = 1; k <= N; ++k) {
        lg[k] = logk(k);
        w[k] = std::exp(-sigma * lg[k]);
    }
    KahanSum diag;
    for (long k = 1; k <= N; ++k) diag.add(w[k] * w[k]);
    double h = 0.5 * (b - a), c = 0.5 * (a + b);
    // Rows l = 2..N in fixed blocks; sin(bL)-sin(aL) = 2 cos(cL) sin(hL).
    auto parts = map_blocks<KahanSum>(static_cast<std::size_t>(N), 64, [&](std::size_t i0, std::size_t i1) {
        KahanSum s;
        for (std::size_t l = std::max<std::size_t>(i0 + 1, 2); l <= i1; ++l) {
            KahanSum row;
            for (std::size_t k = 1; k < l; ++k) {
                double L = lg[l] - lg[k];
                row.add(w[k] * 2.0 * std::cos(c * L) * sin_over(h, L));
            }
            s.add(2.0 * w[l] * row.value());
        }
        return s;
    });
    KahanSum total;
    total.add((b - a) * diag.value());
    for (const auto& p : parts) total += p;
    return total.value();
}

QuadratureResult zeta_sq_integral(const ZetaEvaluator& ev, double sigma, double a, double b, double tol) {
    require(a < b, "zeta_sq_integral: need a < b");
    auto fn = [&](double t) { return std::norm(zeta_point(ev, sigma, t)); };
    return integrate_windows(fn, a, b, tol);
}

LocalIntegralReport local_zeta_integral(const ZetaEvaluator& ev, double a, double b, double sigma, double tol) {
    require(a >= 1.0 && a < b, "local_zeta_integral: need 1 <= a < b");
    require(b <= ev.t_ceiling, "local_zeta_integral: b exceeds the evaluation ceiling");
    require(sigma >= 0.5 && sigma < 1.0, "local_zeta_integral: sigma must lie in [1/2,1)");
    LocalIntegralReport r;
    auto q = zeta_sq_integral(ev, sigma, a, b, tol);
    r.value = q.value;
    r.error_estimate = q.error_estimate;
    r.converged = q.converged;
    long nb = static_cast<long>(std::floor(b));
    r.quadratic_sum = quadratic_riemann_sum(make_gab(a, b), nb, sigma);
    KahanSum fin;
    for (long k = 1; k <= nb; ++k) fin.add(std::pow(static_cast<double>(k), -2.0 * sigma));
    r.prediction_finite = -(b - a) * fin.value() + 4.0 * r.quadratic_sum;
    // At sigma = 1/2 zeta(2 sigma) is the pole; only the finite form exists.
    r.prediction = sigma == 0.5 ? r.prediction_finite : -zeta_real(2.0 * sigma) * (b - a) + 4.0 * r.quadratic_sum;
    r.residual = r.value - r.prediction;
    r.residual_finite = r.value - r.prediction_finite;
    return r;
}

ParsevalConstantReport parseval_constant(double sigma, double tol) {
    require(sigma > 0.0 && sigma < 1.0, "parseval_constant: sigma must lie in (0,1)");
    require(tol > 0.0, "parseval_constant: tol must be positive");
    ParsevalConstantReport r;
    if (sigma == 0.5) {
        // Limit of the closed form as sigma -> 1/2.
        r.closed_form = constants::log_two_pi - constants::euler_gamma;
        r.bracket = std::nan("");
    } else {
        r.bracket = zeta_real(2.0 * sigma) / 2.0 + zeta_real_extended(2.0 * sigma - 1.0) / (2.0 * sigma - 1.0);
        r.closed_form = -r.bracket / sigma;
    }
    // With y = 1/x the integral becomes int_0^inf {y}^2 y^{-1-2 sigma} dy.
    double e = -1.0 - 2.0 * sigma;
    double tail_tol = 0.1 * tol;
    double K = std::ceil(std::pow(tail_tol * 6.0 * sigma, -1.0 / (2.0 * sigma)));
    long Kmax = std::clamp(static_cast<long>(K), 16L, 2'000'000L);
    auto parts = map_blocks<std::pair<KahanSum, double>>(
        static_cast<std::size_t>(Kmax - 1), 1024, [&](std::size_t i0, std::size_t i1) {
            KahanSum s;
            double err = 0.0;
            for (std::size_t i = i0; i < i1; ++i) {
                double k = static_cast<double>(i + 1);
                auto f = [&](double v) { return v * v * std::pow(k + v, e); };
                auto q = integrate_adaptive(f, 0.0, 1.0, 0.5 * tol / static_cast<double>(Kmax));
                s.add(q.value);
                err += q.error_estimate;
            }
            return std::make_pair(s, err);
        });
    KahanSum total;
    total.add(1.0 / (2.0 - 2.0 * sigma));
    double err = 0.0;
    for (const auto& [s, e2] : parts) {
        total += s;
        err += e2;
    }
    // Tail y >= Kmax: {y}^2 has mean 1/3; its periodic fluctuation
    // contributes -y0^e/12 after one integration by parts.
    double y0 = static_cast<double>(Kmax);
    double first = std::pow(y0, -2.0 * sigma) / (6.0 * sigma);
    double second = -std::pow(y0, e) / 12.0;
    total.add(first + second);
    r.integral_route = total.value();
    r.integral_error = err + std::fabs(e) * std::pow(y0, e - 1.0);
    return r;
}

double critical_mean_density(double t) {
    return std::log(std::fabs(t) / constants::two_pi) + 2.0 * constants::euler_gamma;
}

namespace {

// Integral of (log(t/2pi) + 2 gamma)/t^2 over t > T, an upper bound for the
// same density against 1/(b^2+t^2).
double mean_density_tail(double T) {
    return (std::log(T / constants::two_pi) + 1.0 + 2.0 * constants::euler_gamma) / T;
}

}  // namespace

CauchyIntegralReport parseval_half(const ZetaEvaluator& ev, double Tmax, double tol) {
    require(Tmax >= 100.0, "parseval_half: Tmax must be at least 100");
    auto fn = [&](double t) { return std::norm(zeta_point(ev, 0.5, t)) / (0.25 + t * t); };
    // Even integrand: twice the half line, divided by 2 pi.
    auto q = integrate_windows(fn, 0.0, Tmax, tol * constants::pi);
    CauchyIntegralReport r;
    r.truncated = q.value / constants::pi;
    r.tail = mean_density_tail(Tmax) / constants::pi;
    r.value = r.truncated + r.tail;
    r.error_estimate = q.error_estimate / constants::pi + r.tail;
    r.converged = q.converged;
    return r;
}

CauchyIntegralReport lw_cauchy_integral(const ZetaEvaluator& ev, long n, double Tmax, double tol) {
    require(n >= 2, "lw_cauchy_integral: n must be at least 2");
    require(Tmax >= 50.0 * static_cast<double>(n), "lw_cauchy_integral: Tmax must be at least 50 n");
    double nn = static_cast<double>(n);
    auto fn = [&](double t) { return std::norm(zeta_point(ev, 0.5, t)) * nn / (nn * nn + t * t); };
    auto q = integrate_windows(fn, 0.0, Tmax, tol * constants::pi / 2.0);
    CauchyIntegralReport r;
    r.truncated = 2.0 * q.value / constants::pi;
    r.tail = 2.0 * nn * mean_density_tail(Tmax) / constants::pi;
    r.value = r.truncated + r.tail;
    r.error_estimate = 2.0 * q.error_estimate / constants::pi + r.tail;
    r.converged = q.converged;
    return r;
}

QuadratureResult mean_value(const ZetaEvaluator& ev, double T, double sigma, double tol) {
    require(T > 0.0 && T <= ev.t_ceiling, "mean_value: T must lie in (0, ceiling]");
    return zeta_sq_integral(ev, sigma, 0.0, T, tol);
}

StepanovScan stepanov_scan(const ZetaEvaluator& ev, double sigma, long N, double tol) {
    require(N >= 1, "stepanov_scan: N must be positive");
    require(static_cast<double>(N) + 1.0 <= ev.t_ceiling, "stepanov_scan: N exceeds the evaluation ceiling");
    auto fn = [&](double t) { return std::norm(zeta_point(ev, sigma, t)); };
    auto parts = map_blocks<std::vector<QuadratureResult>>(static_cast<std::size_t>(N), 8, [&](std::size_t i0, std::size_t i1) {
        std::vector<QuadratureResult> r;
        for (std::size_t i = i0; i < i1; ++i) {
            double a = static_cast<double>(i + 1);
            QuadOptions opt;
            opt.max_initial_width = constants::two_pi / (4.0 * std::log(2.0 * (a + 1.0)));
            r.push_back(integrate_adaptive(fn, a, a + 1.0, tol, opt));
        }
        return r;
    });
    StepanovScan s;
    double sup = 0.0;
    for (const auto& blk : parts)
        for (const auto& r : blk) {
            s.windows.push_back(r.value);
            sup = std::max(sup, r.value);
            s.running_sup.push_back(sup);
            s.error_estimate = std::max(s.error_estimate, r.error_estimate);
            s.converged = s.converged && r.converged;
        }
    return s;
}

std::pair<double, double> amalgam_norm_bounds(double b) {
    require(b > 0.0, "amalgam_norm_bounds: b must be positive");
    double b2 = b * b;
    const long W = 100000;
    KahanSum s;
    for (long w = W - 1; w >= 0; --w) s.add(1.0 / (b2 + static_cast<double>(w) * static_cast<double>(w)));
    // Remaining terms w >= W by the midpoint integral.
    s.add((constants::pi / 2.0 - std::atan((W - 0.5) / b)) / b);
    return {1.0 / (b2 + 1.0), 2.0 * s.value() + 1.0 / b2};
}

}  // namespace qf
