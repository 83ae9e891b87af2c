#include <doctest.h>

#include "support.hpp"

using namespace gapbound;
using gapbound::testing::kind_of;
using gapbound::testing::poly;
using gapbound::testing::q;
using gapbound::testing::rf;

namespace {

GapSequence gaps_of(std::vector<long> a, std::vector<BigRational> alpha) {
    GapSequence g;
    g.exponents = std::move(a);
    g.coefficients = std::move(alpha);
    g.window = g.exponents.back() + 1;
    return g;
}

Matrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("determinant") {
    CHECK(determinant(matrix({{1, 1}, {1, 2}})) == 1);
    CHECK(determinant(matrix({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(matrix({{2, 4}, {1, 2}})) == 0);
    CHECK(determinant(matrix({{1, 1, 0}, {1, 2, 2}, {1, 3, 6}})) == 2);
    CHECK(determinant(matrix({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
    CHECK_THROWS(determinant(Matrix(2, 3)));
}

TEST_CASE("kernel vectors") {
    CHECK(kernel_vector(matrix({{1, 1}})) == std::vector<BigInt>{-1, 1});
    CHECK(kernel_vector(matrix({{1, 2}})) == std::vector<BigInt>{-2, 1});
    CHECK(kernel_vector(matrix({{1, 1, 0}, {0, 1, 1}})) == std::vector<BigInt>{1, -1, 1});
    CHECK(kernel_vector(matrix({{1, 0}, {0, 1}})).empty());
    CHECK(kernel_vector(matrix({{2, 4, 6}})) == std::vector<BigInt>{-3, 0, 1});
}

TEST_CASE("gap matrix for the geometric series") {
    GapSequence g = gaps_of({0, 1, 2}, q({1, 1, 1}));
    GapMatrix m = build_gap_matrix(g, 2);
    CHECK(m.entries == matrix({{1, 1, 0}, {0, 1, 1}, {0, 1, 2}}));
    CHECK(nullspace_vector(m) == std::vector<BigInt>{1, -1, 1});
    CHECK(wronskian_nonvanishing(m));

    GapMatrix m1 = build_gap_matrix(gaps_of({0, 3}, q({2, 5})), 1);
    CHECK(m1.entries == matrix({{1, 2}, {0, 5}}));
    CHECK(nullspace_vector(m1) == std::vector<BigInt>{-2, 1});
    CHECK(wronskian_nonvanishing(m1));

    CHECK(nullspace_vector(build_gap_matrix(gaps_of({0, 1}, q({1, 1})), 1)) == std::vector<BigInt>{-1, 1});
    CHECK(kind_of([&] { build_gap_matrix(g, 3); }) == ErrorKind::InsufficientGapTerms);
    CHECK_THROWS(build_gap_matrix(g, 0));
}

TEST_CASE("wronskian blocks") {
    CHECK(wronskian_nonvanishing(build_gap_matrix(gaps_of({0, 1, 2}, q({1, 1, 1})), 2)));
    GapMatrix m = build_gap_matrix(gaps_of({0, 1, 2, 3}, q({1, 1, 1, 1})), 3);
    Matrix block(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) block(i, j) = m.entries(i + 1, j + 1);
    CHECK(determinant(block) == 2);
    CHECK(wronskian_nonvanishing(m));
}

TEST_CASE("auxiliary function for the geometric series") {
    RationalFunction f = rf("1/(1-t)");
    BoundReport r = verify_bounds(f, rf("t"), BigRational(0), 20, false);
    AuxiliaryFunction aux = lemma2(r, 2);
    CHECK(aux.c == std::vector<BigInt>{1, -1, 1});
    CHECK(aux.F == rf("t^2/(1-t)^2"));
    CHECK(aux.achieved_valuation == 2);
    CHECK(aux.height_F == 2);

    HeightDecomposition dec = check_height_decomposition(aux, f, rf("t"), 2);
    CHECK(dec.holds);
    CHECK(dec.height_F == 2);
    CHECK(dec.theorem_rhs == 2);
    CHECK(dec.cases[0].height_F == 2);
    CHECK(dec.cases[0].allowance == 2);
    CHECK(dec.cases[3].height_F == 0);
}

TEST_CASE("auxiliary function for the example family") {
    RationalFunction f = rf("1 + t^3/(1-t^2)");
    BoundReport r = verify_bounds(f, rf("t"), BigRational(0), 30, false);
    AuxiliaryFunction a1 = lemma2(r, 1);
    CHECK(a1.c == std::vector<BigInt>{-1, 1});
    CHECK(a1.F == rf("t^3/(1-t^2)"));
    CHECK(a1.achieved_valuation == 3);
    CHECK(a1.height_F == 3);
    CHECK(check_height_decomposition(a1, f, rf("t"), 1).holds);

    AuxiliaryFunction a2 = lemma2(r, 2);
    CHECK(a2.achieved_valuation == 5);
    HeightDecomposition dec = check_height_decomposition(a2, f, rf("t"), 2);
    CHECK(dec.holds);
    CHECK(dec.theorem_rhs == 5);
    CHECK(a2.height_F <= 5);
}

TEST_CASE("combine derivatives") {
    std::vector<BigInt> c{1, -1, 1};
    CHECK(combine_derivatives(rf("1/(1-t)"), rf("t"), c) == rf("t^2/(1-t)^2"));
    CHECK(combine_derivatives(rf("1/(1-t)"), rf("t"), {}) == RationalFunction());
}

TEST_CASE("assemble F rejects a wrong vector") {
    RationalFunction f = rf("1/(1-t)");
    BoundReport r = verify_bounds(f, rf("t"), BigRational(0), 20, false);
    GapMatrix m = build_gap_matrix(r.gaps, 2);
    CHECK(kind_of([&] { assemble_F(f, rf("t"), BigRational(0), m, {1, 0, 0}); }) == ErrorKind::ValuationMismatch);
}

TEST_CASE("derivative valuation inequality") {
    const PlaceCluster one = PlaceCluster::at(BigRational(1));
    auto c = check_derivative_valuation(rf("1/(1-t)"), rf("t"), one, 3);
    REQUIRE(c.lhs);
    CHECK(*c.lhs == -4);
    CHECK(c.rhs == -4);
    CHECK(c.holds);

    auto base = check_derivative_valuation(rf("(t-1)^2/t"), rf("t"), PlaceCluster::at(BigRational(0)), 0);
    CHECK(base.lhs == -1L);
    CHECK(base.rhs == -1);

    auto ram = check_derivative_valuation(rf("1/(1-t)"), rf("t + t^3"), PlaceCluster::finite(poly("t^2 + 1/3")), 1);
    CHECK(ram.rhs == -2);
    REQUIRE(ram.lhs);
    CHECK(*ram.lhs == -1);
    CHECK(ram.holds);

    auto vanishing = check_derivative_valuation(rf("t^2"), rf("t"), one, 3);
    CHECK_FALSE(vanishing.lhs);
    CHECK(vanishing.holds);
}

TEST_CASE("derivative support covers infinity") {
    auto places = derivative_support(rf("1/(1-t)"), rf("t + t^3"), 2);
    CHECK(places.back().is_infinity());
    long points = 0;
    for (const auto& p : places) points += p.degree();
    CHECK(points >= 4);
}

TEST_CASE("genus-0 ramification identity") {
    auto a = check_rr_identity(rf("t"));
    CHECK(a.lhs_sum == 0);
    CHECK(a.rhs == 0);
    CHECK(a.holds);
    auto b = check_rr_identity(rf("t^2 - t"));
    CHECK(b.lhs_sum == 1);
    CHECK(b.rhs == 1);
    auto c = check_rr_identity(rf("t + t^3"));
    CHECK(c.lhs_sum == 2);
    CHECK(c.rhs == 2);
    CHECK(kind_of([] { check_rr_identity(rf("2")); }) == ErrorKind::ConstantFunction);
}

TEST_CASE("place classification") {
    RationalFunction f = rf("1 + t^3/(1-t^2)");
    RationalFunction x = rf("t");
    CHECK(classify_place(f, x, PlaceCluster::at(BigRational(1))) == PoleCase::S1);
    CHECK(classify_place(f, x, PlaceCluster::infinity()) == PoleCase::S4);
    CHECK(classify_place(f, x, PlaceCluster::at(BigRational(0))) == PoleCase::S3);
    CHECK(classify_place(f, x, PlaceCluster::at(BigRational(3))) == PoleCase::S3);
    CHECK(classify_place(rf("1/(1-t)"), rf("t + t^3"), PlaceCluster::finite(poly("t^2 + 1/3"))) == PoleCase::S2);
}

TEST_CASE("batched derivative checks agree with single checks") {
    for (const char* x : {"t", "t + t^3", "(t^2 - 1)/(t + 2)"}) {
        RationalFunction f = rf("(1 + t)/(1 - t)^2");
        auto places = derivative_support(f, rf(x), 3);
        auto batch = check_derivative_valuations(f, rf(x), places, 3);
        REQUIRE(batch.size() == places.size() * 4);
        for (const auto& r : batch) {
            auto single = check_derivative_valuation(f, rf(x), r.place, r.n);
            CHECK(single.lhs == r.check.lhs);
            CHECK(single.rhs == r.check.rhs);
            CHECK(single.holds == r.check.holds);
        }
    }
}
