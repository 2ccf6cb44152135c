#include "qf/funclib.hpp"

#include <cmath>
#include <utility>

#include "qf/quad.hpp"
#include "qf/zeta.hpp"

namespace qf {

std::optional<double> PeriodicFunction::weighted_integral(double sigma) const {
    if (exact_weighted_integral) return exact_weighted_integral(sigma);
    if (sigma == 0.0) return exact_integral;
    return std::nullopt;
}

double trig_eval(const FourierMap& c, double x) {
    double s = 0.0;
    for (const auto& [nu, cv] : c) {
        double th = constants::two_pi * static_cast<double>(nu) * x;
        s += cv.real() * std::cos(th) - cv.imag() * std::sin(th);
    }
    return s;
}

double sin_over(double a, double L) {
    double y = a * L;
    if (std::fabs(y) < 1e-3) {
        double L2 = L * L, a2 = a * a;
        return a - a * a2 * L2 / 6.0 + a * a2 * a2 * L2 * L2 / 120.0;
    }
    return std::sin(y) / L;
}

PeriodicFunction make_constant(double c) {
    PeriodicFunction f;
    f.name = "const";
    f.eval = [c](double) { return c; };
    f.value_at_0 = c;
    f.exact_integral = c;
    f.exact_weighted_integral = [c](double s) -> std::optional<double> {
        if (s < 1.0) return c / (1.0 - s);
        return std::nullopt;
    };
    f.fourier = FourierMap{{0, cplx(c, 0.0)}};
    return f;
}

PeriodicFunction make_cosine() {
    PeriodicFunction f;
    f.name = "cos";
    f.eval = [](double x) { return std::cos(constants::two_pi * x); };
    f.value_at_0 = 1.0;
    f.exact_integral = 0.0;
    f.fourier = FourierMap{{-1, cplx(0.5, 0.0)}, {1, cplx(0.5, 0.0)}};
    return f;
}

PeriodicFunction make_trig_polynomial(const FourierMap& c, std::string name) {
    PeriodicFunction f;
    f.name = std::move(name);
    f.eval = [c](double x) { return trig_eval(c, x); };
    f.value_at_0 = trig_eval(c, 0.0);
    auto it = c.find(0);
    f.exact_integral = it == c.end() ? 0.0 : it->second.real();
    f.fourier = c;
    return f;
}

PeriodicFunction make_g(double a) {
    require(a != 0.0, "make_g: a must be nonzero");
    PeriodicFunction f;
    f.name = "g";
    f.eval = [a](double x) {
        if (x <= 0.0) return 0.0;
        return sin_over(a, std::log(x));
    };
    f.value_at_0 = 0.0;
    f.exact_integral = integral_g_sigma(a, 0.0);
    f.exact_weighted_integral = [a](double s) -> std::optional<double> {
        if (s < 1.0) return integral_g_sigma(a, s);
        return std::nullopt;
    };
    return f;
}

PeriodicFunction make_gab(double a, double b) {
    require(a < b, "make_gab: need a < b");
    PeriodicFunction f;
    f.name = "gab";
    double h = 0.5 * (b - a), c = 0.5 * (a + b);
    f.eval = [h, c](double x) {
        if (x <= 0.0) return 0.0;
        double L = std::log(x);
        return sin_over(h, L) * std::cos(c * L);
    };
    f.value_at_0 = 0.0;
    // sin(bL) - sin(aL) over 2L integrates termwise.
    f.exact_weighted_integral = [a, b](double s) -> std::optional<double> {
        if (s < 1.0) return 0.5 * (integral_g_sigma(b, s) - integral_g_sigma(a, s));
        return std::nullopt;
    };
    f.exact_integral = f.exact_weighted_integral(0.0);
    return f;
}

PeriodicFunction make_gn(long n) {
    require(n >= 1, "make_gn: n must be positive");
    PeriodicFunction f = make_gab(static_cast<double>(n), static_cast<double>(n + 1));
    f.name = "gn";
    return f;
}

PeriodicFunction sigma_weight(const PeriodicFunction& f, double sigma) {
    if (sigma == 0.0) return f;
    PeriodicFunction w;
    w.name = f.name + "_sigma";
    auto inner = f.eval;
    w.eval = [inner, sigma](double x) { return inner(x) * std::pow(x, -sigma); };
    w.value_at_0 = 0.0;
    if (auto wi = f.weighted_integral(sigma)) w.exact_integral = *wi;
    auto parent = f.exact_weighted_integral;
    if (parent)
        w.exact_weighted_integral = [parent, sigma](double s) { return parent(s + sigma); };
    return w;
}

PeriodicFunction power_weight(const PeriodicFunction& p, double sigma) {
    if (sigma == 0.0) return p;
    PeriodicFunction f;
    f.name = p.name + "_unweighted";
    auto inner = p.eval;
    f.eval = [inner, sigma](double x) { return inner(x) * std::pow(x, sigma); };
    f.value_at_0 = 0.0;
    auto pi = p.exact_integral;
    auto pw = p.exact_weighted_integral;
    f.exact_weighted_integral = [pi, pw, sigma](double s) -> std::optional<double> {
        double shifted = s - sigma;
        if (shifted == 0.0) return pi;
        if (pw) return pw(shifted);
        return std::nullopt;
    };
    f.exact_integral = f.exact_weighted_integral(0.0);
    return f;
}

CoefficientResult fourier_coeff_numeric(const PeriodicFunction& f, long nu, double sigma, double tol) {
    require(tol > 0, "fourier_coeff_numeric: tol must be positive");
    require(sigma < 1.0, "fourier_coeff_numeric: sigma must be below 1");
    double w = constants::two_pi * static_cast<double>(nu);
    QuadOptions opt;
    if (nu != 0) opt.max_initial_width = 0.25 / std::fabs(static_cast<double>(nu));
    auto re = [&](double t) { return f(t) * std::cos(w * t); };
    auto im = [&](double t) { return -f(t) * std::sin(w * t); };
    QuadratureResult r, i;
    if (sigma >= 0.0) {
        r = integrate_singular_power(re, sigma, 0.5 * tol, opt);
        i = nu == 0 ? QuadratureResult{} : integrate_singular_power(im, sigma, 0.5 * tol, opt);
    } else {
        auto rw = [&](double t) { return re(t) * std::pow(t, -sigma); };
        auto iw = [&](double t) { return im(t) * std::pow(t, -sigma); };
        r = integrate_adaptive(rw, 0.0, 1.0, 0.5 * tol, opt);
        i = nu == 0 ? QuadratureResult{} : integrate_adaptive(iw, 0.0, 1.0, 0.5 * tol, opt);
    }
    return {cplx(r.value, i.value), r.error_estimate + i.error_estimate, r.converged && i.converged};
}

SeriesCoefficient gn_sigma_coeff_series(long n, double sigma, long k, int terms) {
    require(n >= 1, "gn_sigma_coeff_series: n must be positive");
    require(sigma > 0.5 && sigma < 1.0, "gn_sigma_coeff_series: sigma must lie in (1/2,1)");
    require(terms >= 1, "gn_sigma_coeff_series: terms must be positive");
    double x = constants::two_pi * static_cast<double>(k);
    auto moment = [&](int m) {
        double c = 2.0 * m + 1.0 - sigma;
        return 0.5 * (std::atan((n + 1.0) / c) - std::atan(static_cast<double>(n) / c));
    };
    SeriesCoefficient out;
    KahanSum s;
    double coef = 1.0;  // (2 pi k)^{2m}/(2m)! with sign
    for (int m = 0; m < terms; ++m) {
        double term = coef * moment(m);
        s.add(term);
        out.max_term = std::max(out.max_term, std::fabs(term));
        coef *= -x * x / ((2.0 * m + 1.0) * (2.0 * m + 2.0));
    }
    out.value = s.value();
    out.first_omitted = std::fabs(coef * moment(terms));
    double scale = std::max(std::fabs(out.value), std::fabs(moment(0)));
    if (out.max_term > 1e8 * scale)
        throw InvalidArgument("gn_sigma_coeff_series: 2 pi k too large for the power series; use fourier_coeff_numeric");
    return out;
}

double integral_g_sigma(double a, double sigma) {
    require(sigma < 1.0, "integral_g_sigma: sigma must be below 1");
    return std::atan(a / (1.0 - sigma));
}

JordanFunction make_jordan_function(double a, long truncation) {
    require(a > 1.0 && a < 2.0, "make_jordan_function: a must lie in (1,2)");
    require(truncation >= 1, "make_jordan_function: truncation must be positive");
    JordanFunction j;
    j.normalizer = 1.0 / (2.0 * zeta_real(a));
    j.tail_bound = 2.0 * j.normalizer * std::pow(static_cast<double>(truncation), 1.0 - a) / (a - 1.0);
    FourierMap c;
    std::vector<double> w(static_cast<std::size_t>(truncation) + 1, 0.0);
    for (long l = 1; l <= truncation; ++l) {
        w[l] = j.normalizer * std::pow(static_cast<double>(l), -a);
        c[l] = cplx(w[l], 0.0);
        c[-l] = cplx(w[l], 0.0);
    }
    PeriodicFunction f;
    f.name = "jordan";
    // Paired terms give 2 c(a) l^-a cos(2 pi l x); summed smallest-first.
    f.eval = [w, truncation](double x) {
        KahanSum s;
        for (long l = truncation; l >= 1; --l) s.add(2.0 * w[l] * std::cos(constants::two_pi * static_cast<double>(l) * x));
        return s.value();
    };
    f.value_at_0 = f.eval(1.0);
    f.exact_integral = 0.0;
    f.fourier = std::move(c);
    j.f = std::move(f);
    return j;
}

}  // namespace qf
