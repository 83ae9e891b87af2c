#include "gapbound/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dense_kernels.hpp"
#include "gapbound/error.hpp"
#include "gapbound/places.hpp"

namespace gapbound {

using detail::div_trunc;
using detail::eval_trunc;
using detail::mul_trunc;

TruncatedSeries::TruncatedSeries(long offset, std::vector<BigRational> coeffs) : offset_(offset) {
    auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const BigRational& c) { return !c.is_zero(); });
    offset_ += static_cast<long>(first - coeffs.begin());
    coeffs_.assign(std::make_move_iterator(first), std::make_move_iterator(coeffs.end()));
}

TruncatedSeries TruncatedSeries::zero(long order) { return TruncatedSeries(order, {}); }

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, long order) {
    std::vector<BigRational> c(static_cast<std::size_t>(std::max(order, 0L)));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coefficient(k);
    return TruncatedSeries(0, std::move(c));
}

BigRational TruncatedSeries::coefficient(long exponent) const {
    if (exponent >= order()) throw std::out_of_range("coefficient beyond the known window");
    if (exponent < offset_) return BigRational();
    return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

TruncatedSeries TruncatedSeries::truncated(long new_order) const {
    if (new_order >= order()) return *this;
    if (new_order <= offset_) return zero(new_order);
    return TruncatedSeries(offset_, std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + (new_order - offset_)));
}

std::string TruncatedSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigRational& c = coeffs_[k];
        if (c.is_zero()) continue;
        long e = offset_ + static_cast<long>(k);
        BigRational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != BigRational(1)) os << mag << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order() << ")";
    return os.str();
}

namespace {

std::size_t as_size(long n) { return static_cast<std::size_t>(std::max(n, 0L)); }

std::vector<BigRational> window(const Polynomial& p, std::size_t len) {
    std::vector<BigRational> out(len);
    for (std::size_t k = 0; k < len; ++k) out[k] = p.coefficient(k);
    return out;
}

std::vector<BigRational> head(const std::vector<BigRational>& c, std::size_t len) {
    std::vector<BigRational> out(len);
    std::copy_n(c.begin(), std::min(len, c.size()), out.begin());
    return out;
}

// Expansion at 0 of a rational function given by its polynomials.
TruncatedSeries expand_at_origin(const RationalFunction& f, long order) {
    long a = static_cast<long>(f.num().low_order());
    long b = static_cast<long>(f.den().low_order());
    long v = a - b;
    if (order <= v)
        throw Error(ErrorKind::WindowTooSmall, "order " + std::to_string(order) + " does not exceed valuation " +
                                                   std::to_string(v));
    std::size_t len = as_size(order - v);
    const Polynomial n = f.num().without_low_order(), d = f.den().without_low_order();
    return TruncatedSeries(v, div_trunc(window(n, std::min(len, n.coefficients().size())),
                                        window(d, std::min(len, d.coefficients().size())), len));
}

// Power of a unit series (offset 0) truncated to len; negative powers invert.
std::vector<BigRational> unit_pow(const std::vector<BigRational>& u, long e, std::size_t len) {
    std::vector<BigRational> base = head(u, len);
    if (e < 0) {
        std::vector<BigRational> one(len);
        if (len) one[0] = 1;
        base = div_trunc(one, base, len);
        e = -e;
    }
    std::vector<BigRational> result(len);
    if (len) result[0] = 1;
    while (e) {
        if (e & 1) result = mul_trunc(result, base, len);
        e >>= 1;
        if (e) base = mul_trunc(base, base, len);
    }
    return result;
}

}  // namespace

TruncatedSeries expand_at(const RationalFunction& f, const ExpansionPoint& p, long order) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "expansion of the zero function");
    if (p.is_infinity()) return expand_at_origin(f.at_reciprocal(), order);
    return expand_at_origin(f.shifted(p.value()), order);
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    long order = std::min(a.order(), b.order());
    long offset = std::min({a.offset(), b.offset(), order});
    std::vector<BigRational> c(as_size(order - offset));
    for (long e = offset; e < order; ++e) c[static_cast<std::size_t>(e - offset)] = a.coefficient(e) + b.coefficient(e);
    return TruncatedSeries(offset, std::move(c));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::vector<BigRational> neg;
    neg.reserve(b.coefficients().size());
    for (const auto& c : b.coefficients()) neg.push_back(-c);
    return series_add(a, b.is_zero() ? b : TruncatedSeries(b.offset(), std::move(neg)));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.is_zero() && b.is_zero()) return TruncatedSeries::zero(a.order() + b.order());
    if (a.is_zero()) return TruncatedSeries::zero(a.order() + b.offset());
    if (b.is_zero()) return TruncatedSeries::zero(b.order() + a.offset());
    std::size_t len = std::min(a.coefficients().size(), b.coefficients().size());
    return TruncatedSeries(a.offset() + b.offset(), mul_trunc(a.coefficients(), b.coefficients(), len));
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisorNotUnit, "division by a series with no known nonzero term");
    if (a.is_zero()) return TruncatedSeries::zero(a.order() - b.offset());
    std::size_t len = std::min(a.coefficients().size(), b.coefficients().size());
    return TruncatedSeries(a.offset() - b.offset(), div_trunc(a.coefficients(), b.coefficients(), len));
}

TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.offset() < 1) throw Error(ErrorKind::InnerSeriesNotVanishing, "inner series must vanish at the origin");
    if (a.is_zero()) {
        // a = O(u^Na); with b = O(t^ob) the composite is O(t^(ob*Na)) for Na >= 0.
        if (a.order() < 0) throw Error(ErrorKind::DivisorNotUnit, "composition of an unknown pole");
        return TruncatedSeries::zero(a.order() * b.offset());
    }
    const long oa = a.offset();
    if (b.is_zero()) {
        if (oa < 0) throw Error(ErrorKind::DivisorNotUnit, "pole composed with a series with no known nonzero term");
        if (oa > 0) return TruncatedSeries::zero(oa * b.order());
        std::vector<BigRational> c(as_size(b.order()));
        c[0] = a.coefficients()[0];
        return TruncatedSeries(0, std::move(c));
    }
    // a = u^oa A(u), b = t^ob B(t) with A(0), B(0) nonzero.
    const long ob = b.offset();
    const auto& A = a.coefficients();
    const auto& B = b.coefficients();
    long rel = std::min(ob * static_cast<long>(A.size()), b.order());
    if (oa != 0) rel = std::min(rel, static_cast<long>(B.size()));
    const std::size_t len = as_size(rel);
    // A(b) on the window [0, len): b as a dense window starting at t^0.
    std::vector<BigRational> bw(len);
    for (std::size_t k = 0; k < len; ++k) {
        long e = static_cast<long>(k);
        if (e >= ob) bw[k] = B[static_cast<std::size_t>(e - ob)];
    }
    std::size_t terms = std::min(A.size(), static_cast<std::size_t>((rel + ob - 1) / ob));
    std::vector<BigRational> value = eval_trunc(head(A, terms), bw, len);
    if (oa != 0) value = mul_trunc(value, unit_pow(B, oa, len), len);
    return TruncatedSeries(oa * ob, std::move(value));
}

TruncatedSeries series_reverse(const TruncatedSeries& s) {
    if (s.is_zero() || s.offset() != 1)
        throw Error(ErrorKind::NotALocalParameter, "reversion needs a series of valuation exactly 1");
    const long order = s.order();
    const std::size_t n = as_size(order);
    // P(t) = sum s_k t^k on the known window; solve P(r) = u by Newton iteration.
    std::vector<BigRational> poly(n);
    for (long e = 1; e < order; ++e) poly[static_cast<std::size_t>(e)] = s.coefficient(e);
    std::vector<BigRational> dpoly(n > 0 ? n - 1 : 0);
    for (std::size_t k = 1; k < n; ++k) dpoly[k - 1] = poly[k] * BigRational(static_cast<long>(k));

    std::vector<BigRational> r(std::min<std::size_t>(n, 2));
    if (r.size() == 2) r[1] = BigRational(1) / poly[1];
    std::size_t prec = r.size();
    while (prec < n) {
        prec = std::min(2 * prec, n);
        r.resize(prec);
        auto value = eval_trunc(head(poly, prec), r, prec);
        value[1] -= 1;
        auto slope = eval_trunc(head(dpoly, prec), r, prec);
        auto step = div_trunc(value, slope, prec);
        for (std::size_t k = 0; k < prec; ++k) r[k] -= step[k];
    }
    return TruncatedSeries(0, std::move(r));
}

TruncatedSeries series_derivative(const TruncatedSeries& s) {
    if (s.is_zero()) return TruncatedSeries::zero(s.order() - 1);
    std::vector<BigRational> c;
    c.reserve(s.coefficients().size());
    for (std::size_t k = 0; k < s.coefficients().size(); ++k)
        c.push_back(s.coefficients()[k] * BigRational(s.offset() + static_cast<long>(k)));
    return TruncatedSeries(s.offset() - 1, std::move(c));
}

namespace {

void require_local_parameter(const RationalFunction& x, const BigRational& p) {
    if (x.is_zero() || valuation(x, PlaceCluster::at(p)) != 1)
        throw Error(ErrorKind::NotALocalParameter, x.to_string() + " is not a local parameter at t = " + p.to_string());
}

// Series r(u) with x(p + r(u)) = u, known below `len`, for x shifted to the origin.
std::vector<BigRational> local_inverse(const RationalFunction& shifted_x, std::size_t len) {
    const auto& xn = shifted_x.num().coefficients();
    const auto& xd = shifted_x.den().coefficients();
    const std::vector<BigRational> dxn = shifted_x.num().derivative().coefficients();
    const std::vector<BigRational> dxd = shifted_x.den().derivative().coefficients();
    // Newton on G(r) = xn(r) - u * xd(r).
    std::vector<BigRational> r(std::min<std::size_t>(len, 2));
    if (r.size() == 2) r[1] = xd[0] / xn[1];
    std::size_t prec = r.size();
    auto times_u = [](std::vector<BigRational> v) {
        v.insert(v.begin(), BigRational());
        v.pop_back();
        return v;
    };
    while (prec < len) {
        prec = std::min(2 * prec, len);
        r.resize(prec);
        auto g = eval_trunc(xn, r, prec);
        auto gd = times_u(eval_trunc(xd, r, prec));
        auto slope = eval_trunc(dxn, r, prec);
        auto slope_d = times_u(eval_trunc(dxd, r, prec));
        for (std::size_t k = 0; k < prec; ++k) {
            g[k] -= gd[k];
            slope[k] -= slope_d[k];
        }
        auto step = div_trunc(g, slope, prec);
        for (std::size_t k = 0; k < prec; ++k) r[k] -= step[k];
    }
    return r;
}

}  // namespace

TruncatedSeries expand_in_x(const RationalFunction& f, const RationalFunction& x, const BigRational& p, long order) {
    require_local_parameter(x, p);
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "expansion of the zero function");
    const RationalFunction fs = f.shifted(p), xs = x.shifted(p);
    const long a = static_cast<long>(fs.num().low_order());
    const long b = static_cast<long>(fs.den().low_order());
    if (order <= a - b)
        throw Error(ErrorKind::WindowTooSmall, "order " + std::to_string(order) + " does not exceed valuation " +
                                                   std::to_string(a - b));
    if (xs.num().deg() == 1 && xs.den().is_constant()) {
        // x = lambda^-1 * (t - p): r(u) = lambda u, coefficients scale by lambda^k.
        TruncatedSeries base = expand_at_origin(fs, order);
        BigRational lambda = xs.den().coefficient(0) / xs.num().coefficient(1);
        if (lambda == BigRational(1)) return base;
        std::vector<BigRational> c = base.coefficients();
        BigRational scale = lambda.pow(base.offset());
        for (auto& v : c) {
            v *= scale;
            scale *= lambda;
        }
        return TruncatedSeries(base.offset(), std::move(c));
    }
    // Pole of order b at p: the denominator window loses b terms twice over.
    const std::size_t len = as_size(order + 2 * b);
    const auto r = local_inverse(xs, len);
    TruncatedSeries num(0, eval_trunc(fs.num().coefficients(), r, len));
    TruncatedSeries den(0, eval_trunc(fs.den().coefficients(), r, len));
    return series_div(num, den).truncated(order);
}

TruncatedSeries expand_in_x_by_composition(const RationalFunction& f, const RationalFunction& x,
                                           const BigRational& p, long order) {
    require_local_parameter(x, p);
    // A pole of order b at p costs b terms of relative precision in the inner series.
    const long pad = f.is_zero() ? 0 : std::max(0L, -valuation(f, PlaceCluster::at(p)));
    TruncatedSeries fs = expand_at(f, ExpansionPoint::at(p), order);
    TruncatedSeries xs = expand_at(x, ExpansionPoint::at(p), order + 2 * pad);
    return series_compose(fs, series_reverse(xs)).truncated(order);
}

RationalFunction derivative_wrt_x(const RationalFunction& f, const RationalFunction& x, unsigned i) {
    if (x.is_constant()) throw Error(ErrorKind::ConstantParameter, "derivative with respect to a constant");
    const RationalFunction dx = x.derivative();
    RationalFunction out = f;
    for (unsigned k = 0; k < i && !out.is_zero(); ++k) out = out.derivative() / dx;
    return out;
}

}  // namespace gapbound
