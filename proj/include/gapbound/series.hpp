#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gapbound/rational_function.hpp"

namespace gapbound {

/// Truncated Laurent series sum_{k >= offset} c_k t^k + O(t^order).
///
/// Every exponent below `order` is exactly known. A nonzero series is
/// normalized so that its first stored coefficient is nonzero; the all-zero
/// window is stored with offset == order and no coefficients.
class TruncatedSeries {
public:
    /// Strips leading zeros; an all-zero window becomes zero(offset + size).
    TruncatedSeries(long offset, std::vector<BigRational> coeffs);
    static TruncatedSeries zero(long order);
    /// A polynomial read as a series known to `order`.
    static TruncatedSeries from_polynomial(const Polynomial& p, long order);

    long offset() const noexcept { return offset_; }
    long order() const noexcept { return offset_ + static_cast<long>(coeffs_.size()); }
    const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of t^exponent; throws std::out_of_range at or beyond order().
    BigRational coefficient(long exponent) const;

    /// Drops every exponent >= order (no-op if order >= this->order()).
    TruncatedSeries truncated(long order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Rendered in powers of `var`, which should be atomic or parenthesized.
    std::string to_string(const std::string& var = "t") const;

private:
    long offset_;
    std::vector<BigRational> coeffs_;
};

/// Expansion point for expand_at: a rational number or the point at infinity.
class ExpansionPoint {
public:
    static ExpansionPoint infinity() { return ExpansionPoint(std::nullopt); }
    static ExpansionPoint at(const BigRational& p) { return ExpansionPoint(p); }
    bool is_infinity() const noexcept { return !point_.has_value(); }
    const BigRational& value() const { return point_.value(); }
    std::string to_string() const { return point_ ? point_->to_string() : "inf"; }

private:
    explicit ExpansionPoint(std::optional<BigRational> p) : point_(std::move(p)) {}
    std::optional<BigRational> point_;
};

/// Laurent expansion of f in the local parameter t - p (or 1/t at infinity),
/// exact for every exponent below `order`. Throws ZeroFunction, WindowTooSmall.
TruncatedSeries expand_at(const RationalFunction& f, const ExpansionPoint& p, long order);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Throws DivisorNotUnit when b is the zero window.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);
/// a(b(t)); b must vanish at 0 (throws InnerSeriesNotVanishing).
TruncatedSeries series_compose(const TruncatedSeries& a, const TruncatedSeries& b);
/// Compositional inverse of s = s_1 t + ..., s_1 != 0, to s.order(). Throws NotALocalParameter.
TruncatedSeries series_reverse(const TruncatedSeries& s);
/// Formal d/dt.
TruncatedSeries series_derivative(const TruncatedSeries& s);

/// The expansion of f in powers of x at t = p, exact through x^(order-1).
/// x must be a local parameter at p (v_p(x) = 1).
TruncatedSeries expand_in_x(const RationalFunction& f, const RationalFunction& x, const BigRational& p, long order);

/// Generic route for expand_in_x: compose(expand_at(f), series_reverse(expand_at(x))).
/// Kept for cross-checking; cubic in the order.
TruncatedSeries expand_in_x_by_composition(const RationalFunction& f, const RationalFunction& x,
                                           const BigRational& p, long order);

/// i-fold derivative d^i f / dx^i as an exact rational function.
RationalFunction derivative_wrt_x(const RationalFunction& f, const RationalFunction& x, unsigned i);

}  // namespace gapbound
