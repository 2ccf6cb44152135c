#include "qf/quad.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <vector>

#include "qf/common.hpp"

namespace qf {

namespace {

struct Panel {
    double a, b, fa, fm, fb, flm, frm;
    double estimate;  // Richardson-corrected value
    double err;
};

double simpson(double h, double fa, double fm, double fb) { return h / 6.0 * (fa + 4.0 * fm + fb); }

Panel make_panel(const RealFn& f, double a, double b, double fa, double fm, double fb) {
    double m = 0.5 * (a + b);
    double flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
    double whole = simpson(b - a, fa, fm, fb);
    double fine = simpson(m - a, fa, flm, fm) + simpson(b - m, fm, frm, fb);
    if (!std::isfinite(fine)) throw InvalidArgument("integrate_adaptive: integrand is not finite");
    return {a, b, fa, fm, fb, flm, frm, fine + (fine - whole) / 15.0, std::fabs(fine - whole) / 15.0};
}

// Max-heap on error; ties broken by position so the refinement order is fixed.
struct WorseFirst {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.a > y.a;
    }
};

}  // namespace

QuadratureResult integrate_adaptive(const RealFn& f, double a, double b, double tol, const QuadOptions& opt) {
    require(a < b, "integrate_adaptive: need a < b");
    require(tol > 0, "integrate_adaptive: tol must be positive");
    long pieces = 1;
    if (opt.max_initial_width > 0)
        pieces = std::max<long>(1, static_cast<long>(std::ceil((b - a) / opt.max_initial_width)));

    std::vector<Panel> heap;
    std::vector<Panel> done;  // panels too narrow to split further
    heap.reserve(static_cast<std::size_t>(pieces) * 4);
    double h = (b - a) / static_cast<double>(pieces);
    double fa = f(a);
    double total_err = 0.0;
    for (long i = 0; i < pieces; ++i) {
        double lo = a + h * static_cast<double>(i);
        double hi = (i + 1 == pieces) ? b : a + h * static_cast<double>(i + 1);
        double fb = f(hi);
        heap.push_back(make_panel(f, lo, hi, fa, f(0.5 * (lo + hi)), fb));
        total_err += heap.back().err;
        fa = fb;
    }
    WorseFirst cmp;
    std::make_heap(heap.begin(), heap.end(), cmp);
    long panels = pieces;
    bool exhausted = false;
    while (!heap.empty() && total_err > tol) {
        if (panels >= opt.max_panels) {
            exhausted = true;
            break;
        }
        std::pop_heap(heap.begin(), heap.end(), cmp);
        Panel p = heap.back();
        heap.pop_back();
        double m = 0.5 * (p.a + p.b);
        if (!(m > p.a && m < p.b) || (p.b - p.a) < (b - a) * std::ldexp(1.0, -opt.max_depth)) {
            done.push_back(p);
            continue;
        }
        Panel l = make_panel(f, p.a, m, p.fa, p.flm, p.fm);
        Panel r = make_panel(f, m, p.b, p.fm, p.frm, p.fb);
        total_err += l.err + r.err - p.err;
        heap.push_back(l);
        std::push_heap(heap.begin(), heap.end(), cmp);
        heap.push_back(r);
        std::push_heap(heap.begin(), heap.end(), cmp);
        ++panels;
    }
    heap.insert(heap.end(), done.begin(), done.end());
    std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    KahanSum val, err;
    for (const auto& p : heap) {
        val.add(p.estimate);
        err.add(p.err);
    }
    QuadratureResult r;
    r.value = val.value();
    r.error_estimate = err.value();
    r.panels_used = static_cast<long>(heap.size());
    r.converged = !exhausted && r.error_estimate <= tol;
    return r;
}

QuadratureResult integrate_singular_power(const RealFn& u, double sigma, double tol, const QuadOptions& opt) {
    require(sigma >= 0.0 && sigma < 1.0, "integrate_singular_power: sigma must lie in [0,1)");
    double p = 1.0 / (1.0 - sigma);
    // t^-sigma dt = p dw; t = 0 is never evaluated (clamped to the smallest normal).
    auto h = [&](double w) {
        double t = std::max(std::pow(w, p), DBL_MIN);
        return p * u(std::min(t, 1.0));
    };
    return integrate_adaptive(h, 0.0, 1.0, tol, opt);
}

double cauchy_kernel_tail_mass(double b, double u, double T) {
    // Right tail t > T and left tail t < -T.
    double right = constants::pi / 2 - std::atan((T - u) / b);
    double left = constants::pi / 2 - std::atan((T + u) / b);
    return (right + left) / b;
}

QuadratureResult integrate_cauchy_kernel(const RealFn& w, double b, double u, double tol, double Tmax,
                                         const std::optional<CauchyTail>& tail, const QuadOptions& opt) {
    require(b > 0, "integrate_cauchy_kernel: b must be positive");
    require(Tmax > std::fabs(u), "integrate_cauchy_kernel: Tmax must exceed |u|");
    auto g = [&](double t) { return w(t) / (b * b + (t - u) * (t - u)); };
    QuadratureResult r = integrate_adaptive(g, -Tmax, Tmax, tol, opt);

    double tail_val = 0.0;
    if (tail && tail->window_average) {
        // Tail integral with the supplied window envelope, t = T / v.
        auto side = [&](double sign) {
            auto h = [&](double v) {
                if (v <= 0) return 0.0;
                double t = Tmax / v;
                double d = sign * t - u;
                return tail->window_average(t) / (b * b + d * d) * Tmax / (v * v);
            };
            return integrate_adaptive(h, 0.0, 1.0, 1e-3 * tol + 1e-12, opt).value;
        };
        tail_val = side(1.0) + side(-1.0);
        if (tail->add_to_value) r.value += tail_val;
        r.error_estimate += tail->rel_uncertainty * tail_val;
    } else {
        double lo = std::max(0.0, Tmax - 1.0);
        auto avg = [&](double a0, double a1) {
            return integrate_adaptive(w, a0, a1, 1e-3 * tol + 1e-12, opt).value / (a1 - a0);
        };
        double sup = std::max(avg(lo, Tmax), avg(-Tmax, -lo));
        tail_val = sup * cauchy_kernel_tail_mass(b, u, Tmax);
        r.error_estimate += tail_val;
    }
    r.converged = r.converged && r.error_estimate <= tol;
    return r;
}

}  // namespace qf
