#include <doctest.h>

#include <cmath>

#include "qf/riemann.hpp"
#include "qf/zeta.hpp"

using namespace qf;

TEST_SUITE("zeta") {
    TEST_CASE("real axis") {
        CHECK(std::fabs(zeta_real(2.0) - constants::pi * constants::pi / 6.0) < 1e-12);
        CHECK(std::fabs(zeta_real(4.0) - std::pow(constants::pi, 4) / 90.0) < 1e-12);

        // sum_{n<=N} n^-1/2 - 2 sqrt(x), evaluated at the midpoint x = N + 1/2.
        const long N = 1'000'000;
        KahanSum s;
        for (long n = N; n >= 1; --n) s.add(1.0 / std::sqrt(static_cast<double>(n)));
        double lim = s.value() - 2.0 * std::sqrt(static_cast<double>(N) + 0.5);
        CHECK(std::fabs(zeta_real(0.5) - lim) < 1e-5);

        // Partial sum plus Euler-Maclaurin tail.
        const long M = 100000;
        KahanSum p;
        for (long n = M; n >= 1; --n) p.add(std::pow(static_cast<double>(n), -1.5));
        double m = static_cast<double>(M);
        double tail = 2.0 / std::sqrt(m) - 0.5 * std::pow(m, -1.5) + 0.125 * std::pow(m, -2.5);
        CHECK(std::fabs(zeta_real(1.5) - (p.value() + tail)) < 1e-10);

        CHECK_THROWS_AS(zeta_real(1.0), InvalidArgument);
        CHECK_THROWS_AS(zeta_real(-0.5), InvalidArgument);
    }

    TEST_CASE("critical strip points") {
        ZetaEvaluator ev;
        auto z = zeta_point_detail(ev, 0.75, 0.0);
        CHECK(std::fabs(z.value.real() - zeta_real(0.75)) <= z.error_bound + 1e-12);
        CHECK(std::fabs(z.value.imag()) <= z.error_bound + 1e-12);
        CHECK(std::abs(zeta_point(ev, 0.5, 14.1347)) < 0.02);
        CHECK(std::abs(zeta_point(ev, 0.5, 14.134725141734693)) < 1e-8);
        auto conj = zeta_point(ev, 0.6, -33.0);
        CHECK(std::abs(conj - std::conj(zeta_point(ev, 0.6, 33.0))) < 1e-9);
        CHECK_THROWS_AS(zeta_point(ev, 0.5, 2.0 * ev.t_ceiling), InvalidArgument);
    }

    TEST_CASE("methods agree within combined error") {
        ZetaEvaluator em, afe;
        afe.method = ZetaMethod::approx_fe;
        for (double sigma : {0.5, 0.62, 0.75, 0.88, 1.0})
            for (double t : {5.0, 50.0, 123.4, 200.0}) {
                auto a = zeta_point_detail(em, sigma, t);
                auto b = zeta_point_detail(afe, sigma, t);
                CHECK(std::abs(a.value - b.value) <= a.error_bound + b.error_bound);
            }
    }

    TEST_CASE("dirichlet polynomial mean square") {
        CHECK(dirichlet_poly_sq_integral(1, 0.75, 3.0, 7.5) == doctest::Approx(4.5));
        auto q = integrate_adaptive(
            [](double t) {
                cplx s(0.0, 0.0);
                for (int k = 1; k <= 5; ++k) s += std::pow(static_cast<double>(k), -0.75) * std::exp(cplx(0.0, -t * std::log(k)));
                return std::norm(s);
            },
            0.0, 1.0, 1e-12);
        CHECK(std::fabs(dirichlet_poly_sq_integral(5, 0.75, 0.0, 1.0) - q.value) < 1e-8);
        // Over [0,1], g(0,1) = g(1)/2.
        double S = quadratic_riemann_sum(make_g(1.0), 200, 0.75);
        double Z = 0.0;
        for (long k = 1; k <= 200; ++k) Z += std::pow(static_cast<double>(k), -1.5);
        CHECK(dirichlet_poly_sq_integral(200, 0.75, 0.0, 1.0) == doctest::Approx(2.0 * S - Z).epsilon(1e-10));
    }

    TEST_CASE("mean square additivity and tiling") {
        ZetaEvaluator ev;
        auto whole = zeta_sq_integral(ev, 0.5, 0.0, 100.0, 1e-7);
        auto left = zeta_sq_integral(ev, 0.5, 0.0, 50.0, 1e-7);
        auto right = zeta_sq_integral(ev, 0.5, 50.0, 100.0, 1e-7);
        CHECK(std::fabs(whole.value - left.value - right.value) <=
              whole.error_estimate + left.error_estimate + right.error_estimate + 1e-9);
        auto mv = mean_value(ev, 100.0, 0.5, 1e-7);
        CHECK(std::fabs(mv.value - whole.value) <= mv.error_estimate + whole.error_estimate + 1e-9);

        auto scan = stepanov_scan(ev, 0.75, 20, 1e-8);
        REQUIRE(scan.windows.size() == 20);
        double sum = 0.0;
        for (double w : scan.windows) {
            CHECK(w > 0.0);
            sum += w;
        }
        auto tile = zeta_sq_integral(ev, 0.75, 1.0, 21.0, 1e-8);
        CHECK(std::fabs(sum - tile.value) <= scan.error_estimate + tile.error_estimate + 1e-9);
        for (std::size_t i = 1; i < scan.running_sup.size(); ++i) CHECK(scan.running_sup[i] >= scan.running_sup[i - 1]);
    }

    TEST_CASE("local integral identity pieces") {
        ZetaEvaluator ev;
        auto r = local_zeta_integral(ev, 50.0, 51.0, 0.75, 1e-8);
        CHECK(r.quadratic_sum == doctest::Approx(quadratic_riemann_sum(make_gab(50.0, 51.0), 51, 0.75)));
        CHECK(r.prediction == doctest::Approx(-zeta_real(1.5) + 4.0 * r.quadratic_sum).epsilon(1e-13));
        CHECK(r.residual == doctest::Approx(r.value - r.prediction));
        CHECK(std::fabs(r.residual_finite) <= 0.05);
        CHECK(std::fabs(make_gab(50.0, 51.0)(0.3) - make_gn(50)(0.3)) < 1e-12);
    }

    TEST_CASE("parseval constant") {
        auto p = parseval_constant(0.75, 1e-8);
        double closed = -(4.0 / 3.0) * (zeta_real(1.5) / 2.0 + 2.0 * zeta_real(0.5));
        CHECK(p.closed_form == doctest::Approx(closed).epsilon(1e-12));
        CHECK(std::fabs(p.closed_form - 2.15269512436857) < 1e-10);
        CHECK(std::fabs(p.integral_route - p.closed_form) < 1e-3);
        for (double s : {0.6, 0.75, 0.9}) CHECK(parseval_constant(s, 1e-6).bracket < 0.0);
    }

    TEST_CASE("mean density and amalgam bounds") {
        CHECK(critical_mean_density(constants::two_pi) == doctest::Approx(2.0 * constants::euler_gamma));
        auto [k, K] = amalgam_norm_bounds(0.5);
        CHECK(k == doctest::Approx(0.8));
        CHECK(K > 0.0);
        CHECK(amalgam_norm_bounds(1.0).second < K);
        CHECK(amalgam_norm_bounds(2.0).second < amalgam_norm_bounds(1.0).second);
    }
}
