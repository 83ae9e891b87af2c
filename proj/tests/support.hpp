#pragma once

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "gapbound/error.hpp"
#include "gapbound/expression.hpp"
#include "gapbound/lemma_lab.hpp"

namespace gapbound::testing {

inline RationalFunction rf(const std::string& text) { return parse_rational_function(text); }

inline Polynomial poly(const std::string& text) {
    RationalFunction r = rf(text);
    REQUIRE(r.is_polynomial());
    return r.num();
}

inline std::vector<BigRational> q(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

/// Random polynomial with degree exactly `degree` and coefficients in [-bound, bound].
inline Polynomial random_polynomial(std::mt19937_64& rng, long degree, long bound) {
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::vector<BigRational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = coeff(rng);
    while (c.back().is_zero()) c.back() = coeff(rng);
    return Polynomial(std::move(c));
}

/// Random local parameter at 0: t*u(t) with u(0) != 0 and a random denominator.
inline RationalFunction random_local_parameter(std::mt19937_64& rng, long max_degree, long bound) {
    std::uniform_int_distribution<long> deg(0, max_degree - 1);
    while (true) {
        Polynomial u = random_polynomial(rng, deg(rng), bound);
        Polynomial d = random_polynomial(rng, deg(rng), bound);
        if (u.evaluate(0).is_zero() || d.evaluate(0).is_zero()) continue;
        return RationalFunction(Polynomial::variable() * u, d);
    }
}

/// Kind of the gapbound::Error thrown by fn; fails the test if none is thrown.
template <class Fn>
ErrorKind kind_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no gapbound::Error thrown");
    return ErrorKind::VerificationFailure;
}

}  // namespace gapbound::testing
