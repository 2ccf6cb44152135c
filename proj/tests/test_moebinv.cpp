#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qf/arith.hpp"
#include "qf/moebinv.hpp"

using namespace qf;

namespace {

// g(m) = sum_k f(km) evaluated by the double loop.
RationalGrid brute_sum_multiples(const RationalGrid& f) {
    RationalGrid g;
    g.support_bound = f.support_bound;
    for (long m = 1; m <= f.support_bound; ++m) {
        Rational s = 0;
        for (long k = 1; k * m <= f.support_bound; ++k) s += f.at(k * m);
        if (s != 0) g.values[m] = s;
    }
    return g;
}

RationalGrid brute_invert(const RationalGrid& g) {
    RationalGrid f;
    f.support_bound = g.support_bound;
    for (long m = 1; m <= g.support_bound; ++m) {
        Rational s = 0;
        for (long n = 1; n * m <= g.support_bound; ++n) s += oracle::mobius_trial(n) * g.at(n * m);
        if (s != 0) f.values[m] = s;
    }
    return f;
}

void check_same(const RationalGrid& a, const RationalGrid& b) {
    for (long m = 1; m <= std::max(a.support_bound, b.support_bound); ++m) CHECK(a.at(m) == b.at(m));
}

}  // namespace

TEST_SUITE("moebinv") {
    TEST_CASE("delta is self-inverse") {
        RationalGrid g;
        g.values[1] = 1;
        auto f = mobius_invert(g);
        CHECK(f.at(1) == 1);
        for (long m = 2; m <= 10; ++m) CHECK(f.at(m) == 0);
        CHECK(check_inversion_condition(g) == doctest::Approx(1.0));
    }

    TEST_CASE("divisors of 12") {
        RationalGrid g;
        g.support_bound = 12;
        for (long d : {1, 2, 3, 4, 6, 12}) g.values[d] = 1;
        auto f = mobius_invert(g);
        check_same(f, brute_invert(g));
        check_same(mobius_sum_multiples(f), g);
        double dsum = 0.0;
        for (long d : {1, 2, 3, 4, 6, 12}) dsum += static_cast<double>(divisor_count(d));
        CHECK(check_inversion_condition(g) == doctest::Approx(dsum));
        CHECK(dsum == 18.0);
    }

    TEST_CASE("sparse support") {
        RationalGrid g;
        g.support_bound = 14;
        g.values[5] = Rational(3, 7);
        g.values[9] = Rational(-2, 5);
        g.values[14] = Rational(11, 3);
        auto f = mobius_invert(g);
        check_same(f, brute_invert(g));
        check_same(mobius_sum_multiples(f), g);
    }

    TEST_CASE("random roundtrips are exact") {
        std::mt19937_64 rng(8);
        std::uniform_int_distribution<int> num(-50, 50), den(1, 30), sup(1, 120);
        for (int rep = 0; rep < 50; ++rep) {
            RationalGrid g;
            g.support_bound = sup(rng);
            for (long m = 1; m <= g.support_bound; ++m)
                if (rng() % 3 == 0) g.values[m] = Rational(num(rng), den(rng));
            auto f = mobius_invert(g);
            check_same(mobius_sum_multiples(f), g);
            check_same(mobius_invert(mobius_sum_multiples(g)), g);
            check_same(mobius_sum_multiples(g), brute_sum_multiples(g));
        }
    }

    TEST_CASE("real grids agree with rational grids") {
        RationalGrid q;
        RealGrid r;
        q.support_bound = r.support_bound = 40;
        for (long m = 1; m <= 40; ++m) {
            q.values[m] = Rational(1, m * m);
            r.values[m] = 1.0 / static_cast<double>(m * m);
        }
        auto fq = mobius_invert(q);
        auto fr = mobius_invert(r);
        for (long m = 1; m <= 40; ++m) CHECK(fr.at(m) == doctest::Approx(static_cast<double>(fq.at(m))).epsilon(1e-14));
    }

    TEST_CASE("inversion condition with decay majorant") {
        RealGrid g;
        g.support_bound = 10000;
        double partial = 0.0;
        for (long m = 1; m <= 10000; ++m) {
            g.values[m] = std::pow(static_cast<double>(m), -3.0);
            partial += static_cast<double>(divisor_count(m)) * std::pow(static_cast<double>(m), -3.0);
        }
        double finite = check_inversion_condition(g);
        CHECK(finite == doctest::Approx(partial).epsilon(1e-12));
        // sum d(n) n^-3 = zeta(3)^2
        CHECK(finite < 1.2020569031595942 * 1.2020569031595942);
        g.majorant = DecayMajorant{1.0, 3.0};
        double with_tail = check_inversion_condition(g);
        CHECK(with_tail >= finite);
        CHECK(std::isfinite(with_tail));
        CHECK(std::fabs(with_tail - 1.2020569031595942 * 1.2020569031595942) < 1e-8);
        g.majorant = DecayMajorant{1.0, 1.0};
        CHECK(std::isinf(check_inversion_condition(g)));
    }

    TEST_CASE("indices outside the support are rejected") {
        RationalGrid g;
        g.support_bound = 5;
        g.values[6] = 1;
        CHECK_THROWS(mobius_invert(g));
    }
}
