#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gapbound/rational_function.hpp"

namespace gapbound {

/// A bundle of points of P^1 sharing valuation data: the roots of a monic
/// squarefree polynomial, or the point at infinity. Its degree is the number
/// of complex points it stands for.
class PlaceCluster {
public:
    static PlaceCluster infinity() { return PlaceCluster(); }
    /// Throws InvalidCluster unless c is nonconstant and squarefree; c is made monic.
    static PlaceCluster finite(const Polynomial& c);
    /// The degree-one place t = p.
    static PlaceCluster at(const BigRational& p);

    bool is_infinity() const noexcept { return !poly_.has_value(); }
    /// Throws std::logic_error at infinity.
    const Polynomial& polynomial() const;
    long degree() const { return poly_ ? poly_->deg() : 1; }

    friend bool operator==(const PlaceCluster&, const PlaceCluster&) = default;
    /// Finite clusters in canonical polynomial order, infinity last.
    friend bool operator<(const PlaceCluster& a, const PlaceCluster& b);

    std::string to_string() const;

private:
    PlaceCluster() = default;
    explicit PlaceCluster(Polynomial c) : poly_(std::move(c)) {}
    std::optional<Polynomial> poly_;
};

struct PlaceValuation {
    PlaceCluster place;
    long valuation;
    friend bool operator==(const PlaceValuation&, const PlaceValuation&) = default;
};

/// v_q(f). Throws ZeroFunction for f = 0 and HeterogeneousCluster if the
/// roots of a finite cluster occur in f with differing multiplicities.
long valuation(const RationalFunction& f, const PlaceCluster& q);

/// Total pole order -sum_q min(v_q(f), 0), counting conjugate points by
/// cluster degree. Cross-checked against max(deg num, deg den).
long height(const RationalFunction& f);

/// v_q(dx/dx_q) for a local parameter x_q at q (x_q = t - root, or 1/t at infinity).
long dxdxq_valuation(const RationalFunction& x, const PlaceCluster& q);

/// Zeros and poles of a nonconstant x with their valuations; finite clusters
/// come from the squarefree decompositions of num and den, infinity last.
std::vector<PlaceValuation> support(const RationalFunction& x);

/// Number of complex points in the support of x.
long support_count(const RationalFunction& x);

/// Finite clusters on which every polynomial in `polys` has constant
/// multiplicity: the gcd-free refinement of their squarefree parts.
/// Zero and constant inputs are ignored. Infinity is not included.
std::vector<PlaceCluster> cluster_table(const std::vector<Polynomial>& polys);

}  // namespace gapbound
