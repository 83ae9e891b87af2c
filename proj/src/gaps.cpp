#include "gapbound/gaps.hpp"

#include <algorithm>
#include <sstream>

#include "gapbound/error.hpp"

namespace gapbound {

GapSequence extract_gaps(const TruncatedSeries& s) {
    if (s.is_zero() || s.offset() != 0)
        throw Error(ErrorKind::NotNormalized, "expansion must start with a nonzero constant term, got " + s.to_string());
    GapSequence g;
    g.window = s.order();
    const auto& c = s.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        g.exponents.push_back(static_cast<long>(k));
        g.coefficients.push_back(c[k]);
    }
    return g;
}

namespace {

// Clusters on which f, x and dx/dt all have constant valuation.
std::vector<PlaceCluster> joint_table(const RationalFunction& f, const RationalFunction& x) {
    const RationalFunction dx = x.derivative();
    return cluster_table({f.num(), f.den(), x.num(), x.den(), dx.num(), dx.den()});
}

}  // namespace

long compute_S1(const RationalFunction& f, const RationalFunction& x) {
    if (x.is_constant()) throw Error(ErrorKind::ConstantFunction, "S1 needs a nonconstant x");
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "S1 of the zero function");
    long count = 0;
    auto places = joint_table(f, x);
    places.push_back(PlaceCluster::infinity());
    for (const auto& q : places)
        if (valuation(f, q) < 0 && dxdxq_valuation(x, q) == 0) count += q.degree();
    return count;
}

S2Summary compute_S2_sum(const RationalFunction& x) {
    if (x.is_constant()) throw Error(ErrorKind::ConstantFunction, "S2 needs a nonconstant x");
    S2Summary out;
    const RationalFunction dx = x.derivative();
    auto places = cluster_table({x.num(), x.den(), dx.num(), dx.den()});
    places.push_back(PlaceCluster::infinity());
    for (const auto& q : places) {
        if (valuation(x, q) != 0) continue;
        long v = dxdxq_valuation(x, q);
        if (v <= 0) continue;
        out.count += q.degree();
        out.weighted_sum += q.degree() * (v + 1);
    }
    return out;
}

long theorem_bound(const BoundInputs& b, long n) {
    if (n < 1) throw std::invalid_argument("theorem_bound needs n >= 1");
    return b.height_f + (n - 1) * (b.s1_count + b.s2_sum);
}

long corollary_bound(const BoundInputs& b, long n) {
    if (n < 1) throw std::invalid_argument("corollary_bound needs n >= 1");
    long weight = b.supp_x_count + 2 * b.genus - 2;
    if (weight < 0)
        throw Error(ErrorKind::NegativeWeight, "#Supp{x} + 2g - 2 = " + std::to_string(weight) + " is negative");
    return b.height_f + (n - 1) * (b.s1_count + 2 * weight);
}

BoundInputs compute_bound_inputs(const RationalFunction& f, const RationalFunction& x) {
    BoundInputs b;
    b.height_f = height(f);
    b.s1_count = compute_S1(f, x);
    S2Summary s2 = compute_S2_sum(x);
    b.s2_count = s2.count;
    b.s2_sum = s2.weighted_sum;
    b.supp_x_count = support_count(x);
    b.genus = 0;
    return b;
}

bool BoundReport::is_sharp() const {
    return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.slack == 0; });
}

std::optional<long> BoundReport::min_slack() const {
    if (rows.empty()) return std::nullopt;
    return std::min_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.slack < b.slack; })
        ->slack;
}

std::optional<BigRational> BoundReport::limsup_estimate() const {
    if (rows.empty()) return std::nullopt;
    return BigRational(BigInt(rows.back().a_n), BigInt(rows.back().n));
}

bool polynomial_in_x_check(const RationalFunction& f, const RationalFunction& x, const BigRational& p) {
    if (x.is_zero() || valuation(x, PlaceCluster::at(p)) != 1)
        throw Error(ErrorKind::NotALocalParameter, x.to_string() + " is not a local parameter at t = " + p.to_string());
    if (f.is_zero()) return true;
    if (valuation(f, PlaceCluster::at(p)) < 0) return false;
    // f = P(x) with deg P = D forces h(f) = D * h(x) >= D.
    const long bound = height(f);
    TruncatedSeries s = expand_in_x(f, x, p, bound + 1);
    RationalFunction candidate;
    RationalFunction power(1);
    for (long j = 0; j <= bound; ++j) {
        BigRational beta = s.coefficient(j);
        if (!beta.is_zero()) candidate += RationalFunction(beta) * power;
        power *= x;
    }
    return candidate == f;
}

Normalized normalize_at(const RationalFunction& f, const RationalFunction& x, const BigRational& p) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "normalization of the zero function");
    long v = valuation(f, PlaceCluster::at(p));
    return {v == 0 ? f : f / x.pow(v), v};
}

BoundReport verify_bounds(const RationalFunction& f, const RationalFunction& x, const BigRational& p, long order,
                          bool normalize) {
    if (x.is_zero() || x.is_constant() || valuation(x, PlaceCluster::at(p)) != 1)
        throw Error(ErrorKind::NotALocalParameter, x.to_string() + " is not a local parameter at t = " + p.to_string());
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "f must be nonzero");
    if (polynomial_in_x_check(f, x, p))
        throw Error(ErrorKind::PolynomialInParameter, f.to_string() + " is a polynomial in " + x.to_string());

    BoundReport report;
    report.f = f;
    report.x = x;
    report.point = p;
    report.order = order;
    Normalized nf = normalize_at(f, x, p);
    if (nf.power != 0 && !normalize)
        throw Error(ErrorKind::NotNormalized, "v_p(f) = " + std::to_string(nf.power) +
                                                  " at t = " + p.to_string() + "; pass --normalize to analyze f/x^v");
    if (nf.power != 0 && polynomial_in_x_check(nf.function, x, p))
        throw Error(ErrorKind::PolynomialInParameter,
                    "normalized function " + nf.function.to_string() + " is a polynomial in " + x.to_string());
    report.analyzed = nf.function;
    report.normalization_power = nf.power;

    report.gaps = extract_gaps(expand_in_x(report.analyzed, x, p, order));
    report.inputs = compute_bound_inputs(report.analyzed, x);

    for (std::size_t n = 1; n < report.gaps.size(); ++n) {
        BoundRow row;
        row.n = static_cast<long>(n);
        row.a_n = report.gaps.exponents[n];
        row.alpha_n = report.gaps.coefficients[n];
        row.theorem_rhs = theorem_bound(report.inputs, row.n);
        row.corollary_rhs = corollary_bound(report.inputs, row.n);
        row.slack = row.theorem_rhs - row.a_n;
        if (row.slack < 0 || row.corollary_rhs < row.theorem_rhs) {
            std::ostringstream dump;
            dump << "bound violated at n = " << row.n << ": a_n = " << row.a_n << ", theorem rhs = " << row.theorem_rhs
                 << ", corollary rhs = " << row.corollary_rhs << "; f = " << report.analyzed.to_string()
                 << ", x = " << x.to_string() << ", p = " << p << ", order = " << order
                 << ", h = " << report.inputs.height_f << ", #S1 = " << report.inputs.s1_count
                 << ", S2 sum = " << report.inputs.s2_sum << ", #Supp = " << report.inputs.supp_x_count;
            throw Error(ErrorKind::VerificationFailure, dump.str());
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace gapbound
