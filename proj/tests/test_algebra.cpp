#include <doctest.h>

#include "gapbound/error.hpp"
#include "support.hpp"

using namespace gapbound;
using gapbound::testing::poly;
using gapbound::testing::q;
using gapbound::testing::rf;

TEST_CASE("rational canonical form") {
    CHECK(BigRational(BigInt(6), BigInt(-4)) == BigRational(BigInt(-3), BigInt(2)));
    CHECK(BigRational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
    CHECK(BigRational(4).to_string() == "4");
    CHECK(to_fraction_string(BigRational(4)) == "4/1");
    CHECK(to_fraction_string(BigRational(0)) == "0/1");
    CHECK(BigRational::parse("-10/4") == BigRational(BigInt(-5), BigInt(2)));
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
    CHECK(BigRational(BigInt(1), BigInt(3)) < BigRational(BigInt(1), BigInt(2)));
    CHECK(BigRational(BigInt(2), BigInt(3)).pow(-2) == BigRational(BigInt(9), BigInt(4)));
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(2, 3) == 0);
    CHECK(falling_factorial(7, 7) == 5040);
}

TEST_CASE("polynomial arithmetic") {
    Polynomial t = Polynomial::variable();
    CHECK(gcd(poly("t^2 - 1"), poly("t^2 - 2*t + 1")) == poly("t - 1"));
    CHECK(poly("t^3").derivative() == poly("3*t^2"));
    CHECK(poly("t^2").shifted(BigRational(-1)) == poly("t^2 - 2*t + 1"));
    CHECK((poly("1 + t") * poly("1 - t")) == poly("1 - t^2"));
    CHECK(poly("t^3 + 2").evaluate(BigRational(BigInt(1), BigInt(2))) == BigRational(BigInt(17), BigInt(8)));
    auto [quot, rem] = divrem(poly("t^3 + 1"), poly("t - 1"));
    CHECK(quot == poly("t^2 + t + 1"));
    CHECK(rem == Polynomial(2));
    CHECK(exact_quotient(poly("t^2 - 1"), poly("t + 1")) == poly("t - 1"));
    CHECK_THROWS_AS(exact_quotient(poly("t^2"), poly("t + 1")), std::logic_error);
    CHECK(divides(poly("t - 1"), poly("t^2 - 1")));
    CHECK(poly("3*t^2 + 6").monic() == poly("t^2 + 2"));
    CHECK(poly("t^3 + 2*t").reversed() == poly("2*t^2 + 1"));
    CHECK(poly("t^5 + t^3").low_order() == 3);
    CHECK(poly("t^5 + t^3").without_low_order() == poly("t^2 + 1"));
    CHECK((t + Polynomial(1)).pow(3) == poly("t^3 + 3*t^2 + 3*t + 1"));
}

TEST_CASE("polynomial degree and zero handling") {
    Polynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == Degree::minus_infinity());
    CHECK(zero.degree() < Degree(0));
    CHECK_THROWS_AS(zero.degree().value(), std::logic_error);
    CHECK_THROWS_AS(zero.deg(), Error);
    CHECK(Polynomial(q({1, 2, 0, 0})).deg() == 1);
    CHECK_THROWS_AS(divrem(poly("t"), zero), Error);
    try {
        divrem(poly("t"), zero);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivideByZeroPolynomial);
    }
    CHECK(gcd(zero, zero).is_zero());
    CHECK(gcd(zero, poly("2*t + 2")) == poly("t + 1"));
}

TEST_CASE("polynomial to_string") {
    CHECK(poly("4 - t/2 + t^3").to_string() == "t^3 - 1/2*t + 4");
    CHECK(Polynomial().to_string() == "0");
    CHECK(poly("-t").to_string() == "-t");
}

TEST_CASE("squarefree decomposition") {
    using SF = std::vector<SquarefreeFactor>;
    CHECK(squarefree_decomposition(poly("t^2")) == SF{{poly("t"), 2}});
    CHECK(squarefree_decomposition(poly("t^3 - t^2 - t + 1")) == SF{{poly("t + 1"), 1}, {poly("t - 1"), 2}});
    CHECK(squarefree_decomposition(Polynomial(7)).empty());
    CHECK(squarefree_decomposition(poly("2*(t-1)^3*(t^2+1)")) == SF{{poly("t^2 + 1"), 1}, {poly("t - 1"), 3}});
    CHECK_THROWS_AS(squarefree_decomposition(Polynomial()), Error);
    CHECK(radical(poly("(t-1)^3*(t+2)^2")) == poly("(t-1)*(t+2)"));
}

TEST_CASE("coprime refinement") {
    using V = std::vector<Polynomial>;
    CHECK(coprime_refine({poly("t^2 - 1"), poly("t - 1")}) == V{poly("t - 1"), poly("t + 1")});
    CHECK(coprime_refine({poly("t"), poly("t + 1")}) == V{poly("t"), poly("t + 1")});
    CHECK(coprime_refine({poly("t^2 + 1")}) == V{poly("t^2 + 1")});
    CHECK(coprime_refine({poly("t^2 - t"), poly("t^2 - 1")}) == V{poly("t - 1"), poly("t"), poly("t + 1")});
    CHECK_THROWS_AS(coprime_refine({Polynomial(3)}), Error);
}

TEST_CASE("rational function normal form") {
    RationalFunction f = rf("(t^2 - 1)/(2*t - 2)");
    CHECK(f.num() == poly("t/2 + 1/2"));
    CHECK(f.den() == Polynomial(1));
    CHECK(f.is_polynomial());
    CHECK(rf("(1+t)^2/(1-t)") == RationalFunction(poly("t^2 + 2*t + 1"), poly("1 - t")));
    CHECK(rf("(1+t)^2/(1-t)").den().is_monic());
    CHECK(rf("0/(t+1)") == RationalFunction());
    CHECK_THROWS_AS(RationalFunction(poly("t"), Polynomial()), Error);
    CHECK_THROWS_AS(RationalFunction().inverse(), Error);
    CHECK(rf("1/(1-t)").derivative() == rf("1/(1-t)^2"));
    CHECK(rf("t/(t+1)").compose(rf("1/t")) == rf("1/(1+t)"));
    CHECK(rf("1/(t-1)").shifted(BigRational(1)) == rf("1/t"));
    CHECK(rf("t^2/(t+1)").at_reciprocal() == rf("1/(t + t^2)"));
    CHECK(rf("t/(1-t)").pow(-2) == rf("(1-t)^2/t^2"));
}

TEST_CASE("rational function to_string round trips") {
    for (const char* text : {"1/(1-t)", "(1+t)^2/(1-t)", "-3", "t/2", "-1/(t^2+1)", "7/3", "(t^3 - 1/2)/(t + 5/7)"}) {
        RationalFunction f = rf(text);
        CAPTURE(f.to_string());
        CHECK(rf(f.to_string()) == f);
    }
    CHECK(rf("(1+t)^2/(1-t)").to_string() == "(-t^2 - 2*t - 1)/(t - 1)");
}

TEST_CASE("place clusters") {
    CHECK(PlaceCluster::at(BigRational(2)).polynomial() == poly("t - 2"));
    CHECK(PlaceCluster::finite(poly("2*t^2 + 2")).polynomial() == poly("t^2 + 1"));
    CHECK(PlaceCluster::finite(poly("t^2 + 1")).degree() == 2);
    CHECK(PlaceCluster::infinity().degree() == 1);
    CHECK(PlaceCluster::infinity().to_string() == "inf");
    CHECK(PlaceCluster::at(BigRational(0)) < PlaceCluster::infinity());
    CHECK_THROWS_AS(PlaceCluster::finite(Polynomial(3)), Error);
    CHECK_THROWS_AS(PlaceCluster::finite(poly("t^2")), Error);
}

TEST_CASE("valuations") {
    RationalFunction f = rf("(t-1)^2/t");
    CHECK(valuation(f, PlaceCluster::at(BigRational(1))) == 2);
    CHECK(valuation(f, PlaceCluster::infinity()) == -1);
    CHECK(valuation(f, PlaceCluster::at(BigRational(0))) == -1);
    CHECK(valuation(f, PlaceCluster::at(BigRational(5))) == 0);
    CHECK(valuation(rf("1/(t^2+1)"), PlaceCluster::finite(poly("t^2 + 1"))) == -1);
    CHECK_THROWS_AS(valuation(RationalFunction(), PlaceCluster::infinity()), Error);
    try {
        valuation(rf("t*(t-1)^2"), PlaceCluster::finite(poly("t^2 - t")));
        FAIL("expected HeterogeneousCluster");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HeterogeneousCluster);
    }
}

TEST_CASE("heights") {
    CHECK(height(rf("1 + t^3/(1-t^2)")) == 3);
    CHECK(height(rf("5")) == 0);
    CHECK(height(rf("(t^3+1)/(t-1)")) == 3);
    CHECK(height(rf("1/(t^2+1)")) == 2);
}

TEST_CASE("differential valuations") {
    CHECK(dxdxq_valuation(rf("t"), PlaceCluster::at(BigRational(5))) == 0);
    CHECK(dxdxq_valuation(rf("t"), PlaceCluster::infinity()) == -2);
    CHECK(dxdxq_valuation(rf("t + t^3"), PlaceCluster::finite(poly("t^2 + 1/3"))) == 1);
    CHECK(dxdxq_valuation(rf("1/t"), PlaceCluster::infinity()) == 0);
}

namespace {

/// Degree-weighted view of a support list: (cluster degree * valuation) summed
/// per valuation sign, and the complex point count.
struct SupportSummary {
    long zeros = 0, poles = 0, points = 0;
};

SupportSummary summarize(const std::vector<PlaceValuation>& s) {
    SupportSummary out;
    for (const auto& pv : s) {
        const long d = pv.place.degree();
        out.points += d;
        (pv.valuation > 0 ? out.zeros : out.poles) += d * std::abs(pv.valuation);
    }
    return out;
}

}  // namespace

TEST_CASE("supports") {
    auto s = support(rf("t"));
    REQUIRE(s.size() == 2);
    CHECK(s[0] == PlaceValuation{PlaceCluster::at(BigRational(0)), 1});
    CHECK(s[1] == PlaceValuation{PlaceCluster::infinity(), -1});

    auto s2 = summarize(support(rf("t^2 - t")));
    CHECK(s2.points == 3);
    CHECK(s2.zeros == 2);
    CHECK(s2.poles == 2);
    CHECK(support_count(rf("t^2 - t")) == 3);

    auto s3 = support(rf("1/(t^2+1)"));
    REQUIRE(s3.size() == 2);
    CHECK(s3[0] == PlaceValuation{PlaceCluster::finite(poly("t^2 + 1")), -1});
    CHECK(s3[1] == PlaceValuation{PlaceCluster::infinity(), 2});

    CHECK(support_count(rf("t + t^3")) == 4);
    CHECK_THROWS_AS(support(rf("3")), Error);
}

TEST_CASE("cluster table") {
    auto table = cluster_table({poly("t^2 - 1"), poly("(t - 1)^2*t")});
    REQUIRE(table.size() == 3);
    long points = 0;
    for (const auto& c : table) points += c.degree();
    CHECK(points == 3);
}
