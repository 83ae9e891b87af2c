#include "gapbound/places.hpp"

#include <algorithm>
#include <stdexcept>

#include "gapbound/error.hpp"

namespace gapbound {

PlaceCluster PlaceCluster::finite(const Polynomial& c) {
    if (c.is_constant()) throw Error(ErrorKind::InvalidCluster, "cluster polynomial must be nonconstant");
    Polynomial m = c.monic();
    if (!gcd(m, m.derivative()).is_constant())
        throw Error(ErrorKind::InvalidCluster, "cluster polynomial must be squarefree: " + m.to_string());
    return PlaceCluster(std::move(m));
}

PlaceCluster PlaceCluster::at(const BigRational& p) { return PlaceCluster(Polynomial({-p, 1})); }

const Polynomial& PlaceCluster::polynomial() const {
    if (!poly_) throw std::logic_error("the point at infinity has no defining polynomial");
    return *poly_;
}

bool operator<(const PlaceCluster& a, const PlaceCluster& b) {
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    return canonical_less(*a.poly_, *b.poly_);
}

std::string PlaceCluster::to_string() const { return poly_ ? poly_->to_string() : "inf"; }

namespace {

// Largest k with c^k | p, and the cofactor p / c^k.
std::pair<long, Polynomial> split_power(Polynomial p, const Polynomial& c) {
    long k = 0;
    while (true) {
        auto [q, r] = divrem(p, c);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++k;
    }
    return {k, std::move(p)};
}

long finite_multiplicity(const Polynomial& p, const Polynomial& c) {
    auto [k, cofactor] = split_power(p, c);
    if (!gcd(c, cofactor).is_constant())
        throw Error(ErrorKind::HeterogeneousCluster,
                    "roots of " + c.to_string() + " have differing multiplicities in " + p.to_string());
    return k;
}

}  // namespace

long valuation(const RationalFunction& f, const PlaceCluster& q) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "valuation of the zero function");
    if (q.is_infinity()) return f.den().deg() - f.num().deg();
    return finite_multiplicity(f.num(), q.polynomial()) - finite_multiplicity(f.den(), q.polynomial());
}

long height(const RationalFunction& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "height of the zero function");
    long total = 0;
    for (const auto& q : cluster_table({f.den()})) total -= q.degree() * std::min(valuation(f, q), 0L);
    total -= std::min(valuation(f, PlaceCluster::infinity()), 0L);
    long expected = std::max(f.num().deg(), f.den().deg());
    if (total != expected)
        throw Error(ErrorKind::VerificationFailure, "height of " + f.to_string() + " by valuations is " +
                                                        std::to_string(total) + ", degree bound gives " +
                                                        std::to_string(expected));
    return total;
}

long dxdxq_valuation(const RationalFunction& x, const PlaceCluster& q) {
    if (x.is_constant()) throw Error(ErrorKind::ConstantFunction, "dx/dx_q needs a nonconstant x");
    long v = valuation(x.derivative(), q);
    // x_inf = 1/t gives dt/dx_inf = -t^2, which has valuation -2 at infinity.
    return q.is_infinity() ? v - 2 : v;
}

std::vector<PlaceValuation> support(const RationalFunction& x) {
    if (x.is_constant()) throw Error(ErrorKind::ConstantFunction, "support of a constant function");
    std::vector<PlaceValuation> out;
    for (const auto& sf : squarefree_decomposition(x.num()))
        out.push_back({PlaceCluster::finite(sf.factor), static_cast<long>(sf.multiplicity)});
    for (const auto& sf : squarefree_decomposition(x.den()))
        out.push_back({PlaceCluster::finite(sf.factor), -static_cast<long>(sf.multiplicity)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.place < b.place; });
    long v_inf = valuation(x, PlaceCluster::infinity());
    if (v_inf != 0) out.push_back({PlaceCluster::infinity(), v_inf});
    return out;
}

long support_count(const RationalFunction& x) {
    long n = 0;
    for (const auto& pv : support(x)) n += pv.place.degree();
    return n;
}

std::vector<PlaceCluster> cluster_table(const std::vector<Polynomial>& polys) {
    std::vector<Polynomial> parts;
    for (const auto& p : polys) {
        if (p.is_constant()) continue;
        for (auto& sf : squarefree_decomposition(p)) parts.push_back(std::move(sf.factor));
    }
    std::vector<PlaceCluster> out;
    for (auto& c : coprime_refine(parts)) out.push_back(PlaceCluster::finite(c));
    return out;
}

}  // namespace gapbound
