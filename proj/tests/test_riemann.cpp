#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qf/riemann.hpp"
#include "qf/zeta.hpp"

using namespace qf;

TEST_SUITE("riemann") {
    TEST_CASE("partial sums") {
        auto c = riemann_partial_sum(make_constant(2.5), 9, 0.0);
        CHECK(c.D == doctest::Approx(22.5));
        CHECK(c.R == doctest::Approx(2.5));
        CHECK(std::fabs(riemann_partial_sum(make_cosine(), 7, 0.0).D) < 1e-13);
        auto xs = power_weight(make_constant(1.0), 0.6);
        for (long l : {1L, 5L, 64L}) CHECK(riemann_partial_sum(xs, l, 0.6).D == doctest::Approx(static_cast<double>(l)));
        auto means = riemann_means(make_g(3.0), 50, 0.7);
        for (long l : {1L, 2L, 17L, 50L})
            CHECK(means[l] == doctest::Approx(riemann_partial_sum(make_g(3.0), l, 0.7).R).epsilon(1e-13));
    }

    TEST_CASE("fourier riemann sum") {
        CHECK(fourier_riemann_sum({{0, cplx(1.5, 0.0)}}, 1.5, 8) == doctest::Approx(12.0));
        FourierMap cosc{{-1, cplx(0.5, 0.0)}, {1, cplx(0.5, 0.0)}};
        CHECK(fourier_riemann_sum(cosc, 1.0, 1) == doctest::Approx(1.0));
        std::mt19937_64 rng(17);
        auto c = oracle::random_real_trig(rng, 8);
        auto f = make_trig_polynomial(c);
        for (long d = 1; d <= 200; ++d)
            CHECK(std::fabs(fourier_riemann_sum(c, f(1.0), d) - riemann_partial_sum(f, d, 0.0).D) < 1e-10);
    }

    TEST_CASE("quadratic sums") {
        auto xs = power_weight(make_constant(1.0), 0.5);
        CHECK(quadratic_riemann_sum(xs, 300, 0.5) == doctest::Approx(300.0).epsilon(1e-13));
        auto g = make_g(4.0);
        CHECK(quadratic_riemann_sum(g, 1, 0.75) == doctest::Approx(g(1.0)));
        double naive = quadratic_riemann_sum_naive(g, 500, 0.75);
        CHECK(quadratic_riemann_sum(g, 500, 0.75) == doctest::Approx(naive).epsilon(1e-9));
        auto pre = quadratic_riemann_prefix(g, 40, 0.75);
        CHECK(pre[25] == doctest::Approx(quadratic_riemann_sum_naive(g, 25, 0.75)).epsilon(1e-12));
    }

    TEST_CASE("truncated quadratic sums") {
        auto g = make_g(4.0);
        double trunc = quadratic_riemann_sum_truncated(g, 10000, 0.75, 0.5);
        CHECK(trunc == quadratic_riemann_sum(g, 100, 0.75));
        CHECK(trunc == doctest::Approx(quadratic_riemann_sum_naive(g, 100, 0.75)).epsilon(1e-12));
        CHECK(quadratic_riemann_sum_truncated(g, 1, 0.75, 0.5) == quadratic_riemann_sum(g, 1, 0.75));
        CHECK_THROWS_AS(quadratic_riemann_sum_truncated(g, 10, 0.75, 1.0), InvalidArgument);
    }

    TEST_CASE("fourier expansion of S") {
        double ref = 0.0;
        for (long l = 1; l <= 30; ++l) ref += (l - 1) * std::pow(static_cast<double>(l), -1.4);
        CHECK(fourier_expansion_S({{0, cplx(1.0, 0.0)}}, 0.0, 30, 0.7) == doctest::Approx(ref).epsilon(1e-13));

        FourierMap cosc{{-1, cplx(0.5, 0.0)}, {1, cplx(0.5, 0.0)}};
        CHECK(fourier_expansion_S(cosc, 1.0, 10, 0.0) == doctest::Approx(quadratic_riemann_sum_naive(make_cosine(), 10, 0.0)));

        std::mt19937_64 rng(29);
        for (int rep = 0; rep < 4; ++rep) {
            auto c = oracle::random_real_trig(rng, 8);
            auto fs = make_trig_polynomial(c);
            for (double sigma : {0.0, 0.5, 0.75}) {
                auto f = power_weight(fs, sigma);
                for (long n : {1L, 9L, 100L}) {
                    double direct = quadratic_riemann_sum_naive(f, n, sigma);
                    double s1 = fourier_expansion_S(c, fs(1.0), n, sigma);
                    double s2 = fourier_expansion_S_divisor(c, fs(1.0), n, sigma);
                    CHECK(s1 == doctest::Approx(direct).epsilon(1e-10).scale(1.0));
                    CHECK(s2 == doctest::Approx(s1).epsilon(1e-12).scale(1.0));
                }
            }
        }
    }

    TEST_CASE("power sums") {
        auto a = power_sum_partial(10, 0.0);
        CHECK(a.exact == 55.0);
        CHECK(a.main_term == 55.0);
        auto b = power_sum_partial(10000, 0.5);
        CHECK(b.exact == 10000.0);
        CHECK(b.residual == 0.0);
        auto c = power_sum_partial(10000, 0.75);
        double direct = 0.0;
        for (long l = 10000; l >= 1; --l) direct += std::pow(static_cast<double>(l), -0.5);
        CHECK(c.exact == doctest::Approx(direct).epsilon(1e-14));
        CHECK(std::fabs(c.residual) <= 5.0 * std::pow(10000.0, -0.5));
        auto d = power_sum_partial(100000, 1.0);
        CHECK(std::fabs(d.residual) < 1e-5);
    }

    TEST_CASE("varpi accumulation") {
        auto xs = power_weight(make_constant(1.0), 0.75);
        CHECK(varpi_error_accumulation(xs, 0.75, 300).value < 1e-10);
        auto v = varpi_error_accumulation(make_g(1.0), 0.75, 2000);
        for (std::size_t i = 1; i < v.partial.size(); ++i) CHECK(v.partial[i] >= v.partial[i - 1]);
        CHECK(v.partial[1999] / v.partial[199] < 1.05);
    }
}
