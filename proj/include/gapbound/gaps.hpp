#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gapbound/places.hpp"
#include "gapbound/series.hpp"

namespace gapbound {

/// Exponents a_0 = 0 < a_1 < ... of the nonzero terms of an expansion
/// sum alpha_n x^(a_n), all below the window.
struct GapSequence {
    std::vector<long> exponents;
    std::vector<BigRational> coefficients;
    long window = 0;
    /// Set only when the expansion is proven to be a polynomial in x.
    bool terminated = false;

    std::size_t size() const noexcept { return exponents.size(); }
};

/// Requires a series with offset 0 (v_p(f) = 0); throws NotNormalized otherwise.
GapSequence extract_gaps(const TruncatedSeries& s);

/// Complex-point count of S1: poles of f where dx/dx_q has valuation 0.
long compute_S1(const RationalFunction& f, const RationalFunction& x);

struct S2Summary {
    long count = 0;         // complex points in S2
    long weighted_sum = 0;  // sum over S2 of v_q(dx/dx_q) + 1
};

/// S2: points where x is regular and nonzero but dx/dx_q vanishes.
S2Summary compute_S2_sum(const RationalFunction& x);

/// The data entering the bound; genus is pinned to 0 on P^1.
struct BoundInputs {
    long height_f = 0;
    long s1_count = 0;
    long s2_count = 0;
    long s2_sum = 0;
    long supp_x_count = 0;
    long genus = 0;
};

/// h + (n-1)(#S1 + sum_{S2}(v+1)); requires n >= 1.
long theorem_bound(const BoundInputs& b, long n);

/// h + (n-1)(#S1 + 2(#Supp{x} + 2g - 2)); throws NegativeWeight if the
/// support term is negative.
long corollary_bound(const BoundInputs& b, long n);

BoundInputs compute_bound_inputs(const RationalFunction& f, const RationalFunction& x);

struct BoundRow {
    long n;
    long a_n;
    BigRational alpha_n;
    long theorem_rhs;
    long corollary_rhs;
    long slack;  // theorem_rhs - a_n
};

struct BoundReport {
    RationalFunction f;         // as given
    RationalFunction analyzed;  // f / x^normalization_power
    RationalFunction x;
    BigRational point;
    long order = 0;
    long normalization_power = 0;
    BoundInputs inputs;
    GapSequence gaps;
    std::vector<BoundRow> rows;

    long max_n() const { return rows.empty() ? 0 : rows.back().n; }
    bool is_sharp() const;
    /// Smallest theorem slack over all rows; nullopt when no row was checked.
    std::optional<long> min_slack() const;
    /// a_N / N for the largest checked N.
    std::optional<BigRational> limsup_estimate() const;
    long limsup_bound() const { return inputs.s1_count + inputs.s2_sum; }
};

/// True iff f is exactly a polynomial in x, certified by an identity of
/// rational functions with degree bound h(f). x must be a local parameter at p.
bool polynomial_in_x_check(const RationalFunction& f, const RationalFunction& x, const BigRational& p);

/// Full pipeline: local-parameter and hypothesis checks, expansion, gap
/// extraction, bound evaluation. Any row with a_n above the bound raises
/// VerificationFailure with a dump of the inputs.
BoundReport verify_bounds(const RationalFunction& f, const RationalFunction& x, const BigRational& p, long order,
                          bool normalize);

/// f with its order of vanishing at p divided out in powers of x.
struct Normalized {
    RationalFunction function;
    long power;
};
Normalized normalize_at(const RationalFunction& f, const RationalFunction& x, const BigRational& p);

}  // namespace gapbound
