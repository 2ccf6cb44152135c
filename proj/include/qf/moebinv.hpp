#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>

namespace qf {

using Rational = boost::multiprecision::cpp_rational;

// |g(n)| <= coefficient * n^-exponent for n > support_bound.
struct DecayMajorant {
    double coefficient = 0.0;
    double exponent = 0.0;
};

template <class T>
struct GridSequence {
    std::map<long, T> values;  // indices in 1..support_bound
    long support_bound = 1;
    std::optional<DecayMajorant> majorant;  // absent: finitely supported

    T at(long m) const {
        auto it = values.find(m);
        return it == values.end() ? T(0) : it->second;
    }
};

using RationalGrid = GridSequence<Rational>;
using RealGrid = GridSequence<double>;

// f(m) = sum_n mu(n) g(nm), truncated at the support bound.
RationalGrid mobius_invert(const RationalGrid& g);
RealGrid mobius_invert(const RealGrid& g);

// g(m) = sum_k f(km), the inverse direction.
RationalGrid mobius_sum_multiples(const RationalGrid& f);
RealGrid mobius_sum_multiples(const RealGrid& f);

// sum_nu d(nu)|g(nu)|, plus the majorant tail when present; +inf when the
// majorant does not decay fast enough.
double check_inversion_condition(const RealGrid& g);
double check_inversion_condition(const RationalGrid& g);

}  // namespace qf
