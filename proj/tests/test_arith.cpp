#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qf/arith.hpp"

using namespace qf;

TEST_SUITE("arith") {
    TEST_CASE("sieve small tables") {
        auto t = build_sieve(8);
        std::vector<int> mu8{1, -1, -1, 0, -1, 1, -1, 0};
        for (int k = 1; k <= 8; ++k) CHECK(t.mu[k] == mu8[k - 1]);
        std::vector<int> phi5{1, 1, 2, 2, 4};
        for (int k = 1; k <= 5; ++k) CHECK(t.phi[k] == phi5[k - 1]);

        auto one = build_sieve(1);
        CHECK(one.mu[1] == 1);
        CHECK(one.phi[1] == 1);
        CHECK(one.mertens[1] == 1);
    }

    TEST_CASE("sieve invariants against trial division") {
        const long N = 3000;
        auto t = build_sieve(N);
        std::int64_t m = 0;
        for (long n = 1; n <= N; ++n) {
            CHECK(t.mu[n] == oracle::mobius_trial(n));
            CHECK(mobius(n) == oracle::mobius_trial(n));
            m += t.mu[n];
            CHECK(t.mertens[n] == m);
        }
        for (long n = 1; n <= 400; ++n) {
            CHECK(t.phi[n] == oracle::phi_count(n));
            std::int64_t s = 0;
            for (auto d : divisors(n)) s += t.phi[d];
            CHECK(s == n);
        }
    }

    TEST_CASE("rejects non-positive size") { CHECK_THROWS_AS(build_sieve(0), InvalidArgument); }

    TEST_CASE("mertens values") {
        auto t = build_sieve(1000);
        CHECK(mertens(t, 1.0) == 1);
        CHECK(mertens(t, 5.0) == -2);
        CHECK(mertens(t, 0.5) == 0);
        CHECK(mertens(t, 5.9) == mertens(t, std::int64_t{5}));
        std::int64_t s = 0;
        for (std::int64_t d = 1; d <= 100; ++d) s += mertens(t, std::int64_t{100 / d});
        CHECK(s == 1);
    }

    TEST_CASE("weighted mobius sum") {
        auto t = build_sieve(100000);
        CHECK(weighted_mobius_sum(t, 0.5, 0.7) == 0.0);
        CHECK(weighted_mobius_sum(t, 1.0, 0.7) == doctest::Approx(1.0));
        CHECK(std::fabs(weighted_mobius_sum(t, 1e5, 1.0)) <= 1.0);
        double direct = 0.0;
        for (int k = 1; k <= 50; ++k) direct += oracle::mobius_trial(k) / std::pow(k, 0.3);
        CHECK(weighted_mobius_sum(t, 50.0, 0.3) == doctest::Approx(direct).epsilon(1e-13));
        auto pre = weighted_mobius_prefix(t, 50, 0.3);
        CHECK(pre[50] == doctest::Approx(direct).epsilon(1e-13));
    }

    TEST_CASE("totient summatory") {
        auto t = build_sieve(10000);
        CHECK(totient_summatory(t, 1) == 1);
        CHECK(totient_summatory(t, 5) == 10);
        long pairs = 0;
        for (long m = 1; m <= 30; ++m)
            for (long j = 1; j <= m; ++j)
                if (std::gcd(j, m) == 1) ++pairs;
        CHECK(totient_summatory(t, 30) == pairs);
        double ratio = static_cast<double>(totient_summatory(t, 10000)) / 1e8;
        CHECK(std::fabs(ratio - 3.0 / (constants::pi * constants::pi)) < 1e-3);
    }

    TEST_CASE("divisor functions") {
        CHECK(divisor_power_sum(1, 0.37) == 1.0);
        CHECK(divisor_power_sum(6, 0.0) == doctest::Approx(4.0));
        CHECK(divisor_power_sum(6, -1.0) == doctest::Approx(2.0));
        CHECK(divisor_count(12) == 6);
        CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
        for (long n = 1; n <= 200; ++n) {
            double s = 0.0;
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) s += std::pow(static_cast<double>(d), 0.4);
            CHECK(divisor_power_sum(n, 0.4) == doctest::Approx(s).epsilon(1e-13));
        }
    }

    TEST_CASE("jordan totient") {
        CHECK(jordan_totient(1, -0.5) == 1.0);
        auto t = build_sieve(100);
        for (long n = 1; n <= 100; ++n) CHECK(jordan_totient(n, 1.0) == doctest::Approx(static_cast<double>(t.phi[n])));
        double j6 = 1.0 * 1.0 - std::pow(2.0, -0.5) - std::pow(3.0, -0.5) + std::pow(6.0, -0.5);
        double alt = 0.0;
        for (long d : {1L, 2L, 3L, 6L}) alt += oracle::mobius_trial(6 / d) * std::pow(static_cast<double>(d), -0.5);
        CHECK(j6 == doctest::Approx(alt));
        CHECK(jordan_totient(6, -0.5) == doctest::Approx(alt).epsilon(1e-14));
    }
}
