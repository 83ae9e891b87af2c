#include "gapbound/lemma_lab.hpp"

#include <algorithm>
#include <sstream>

#include "gapbound/error.hpp"

namespace gapbound {

BigRational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Matrix a = m;
    BigRational prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k).is_zero()) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::vector<BigInt> kernel_vector(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        BigRational inv = BigRational(1) / a(r, col);
        for (std::size_t j = col; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, col).is_zero()) continue;
            BigRational factor = a(i, col);
            for (std::size_t j = col; j < cols; ++j) a(i, j) -= factor * a(r, j);
        }
        pivot_cols.push_back(col);
        ++r;
    }
    // Last free column.
    std::optional<std::size_t> free_col;
    for (std::size_t col = cols; col-- > 0;) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), col) == pivot_cols.end()) {
            free_col = col;
            break;
        }
    }
    if (!free_col) return {};
    std::vector<BigRational> v(cols);
    v[*free_col] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, *free_col);
    BigInt lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.raw().get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(cols);
    BigInt content = 0;
    for (const auto& x : v) {
        BigInt z = x.raw().get_num() * (lcm / x.raw().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        out.push_back(std::move(z));
    }
    for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
    return out;
}

GapMatrix build_gap_matrix(const GapSequence& g, long n) {
    if (n < 1) throw std::invalid_argument("gap matrix needs n >= 1");
    const auto size = static_cast<std::size_t>(n) + 1;
    if (g.size() < size)
        throw Error(ErrorKind::InsufficientGapTerms, "need " + std::to_string(size) + " gap terms, have " +
                                                         std::to_string(g.size()) + " below order " +
                                                         std::to_string(g.window));
    Matrix a(size, size);
    a(0, 0) = 1;
    a(0, 1) = g.coefficients[0];
    for (std::size_t i = 1; i < size; ++i)
        for (std::size_t j = 1; j < size; ++j)
            a(i, j) = g.coefficients[i] * BigRational(falling_factorial(g.exponents[i], static_cast<long>(j) - 1));
    return {std::move(a), n, g};
}

std::vector<BigInt> nullspace_vector(const GapMatrix& m) {
    const auto n = static_cast<std::size_t>(m.n);
    Matrix b(n, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= n; ++j) b(i, j) = m.entries(i, j);
    return kernel_vector(b);
}

bool wronskian_nonvanishing(const GapMatrix& m) {
    const auto n = static_cast<std::size_t>(m.n);
    Matrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = m.entries(i + 1, j + 1);
    return !determinant(w).is_zero();
}

RationalFunction combine_derivatives(const RationalFunction& f, const RationalFunction& x,
                                     const std::vector<BigInt>& c) {
    if (c.empty()) return {};
    RationalFunction F{BigRational(c[0])};
    RationalFunction derivative = f;
    RationalFunction x_power(1);
    const RationalFunction dx = x.derivative();
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (i > 1) {
            derivative = derivative.derivative() / dx;
            x_power *= x;
        }
        if (c[i] != 0) F += RationalFunction(BigRational(c[i])) * x_power * derivative;
    }
    return F;
}

AuxiliaryFunction assemble_F(const RationalFunction& f, const RationalFunction& x, const BigRational& p,
                             const GapMatrix& m, const std::vector<BigInt>& c) {
    const long a_n = m.source.exponents.at(static_cast<std::size_t>(m.n));
    AuxiliaryFunction out;
    out.c = c;
    out.F = combine_derivatives(f, x, c);
    auto mismatch = [&](const std::string& what) {
        std::ostringstream os;
        os << what << "; n = " << m.n << ", a_n = " << a_n << ", F = " << out.F.to_string() << ", f = " << f.to_string()
           << ", x = " << x.to_string() << ", p = " << p;
        return Error(ErrorKind::ValuationMismatch, os.str());
    };
    if (out.F.is_zero()) throw mismatch("F vanishes identically");

    // Route 1: valuation of the rational function at t = p.
    const long by_valuation = valuation(out.F, PlaceCluster::at(p));
    // Route 2: first nonzero term of F's own expansion in x.
    const TruncatedSeries series = expand_in_x(out.F, x, p, std::max(a_n + 1, by_valuation + 1));
    const long by_series = series.is_zero() ? series.order() : series.offset();
    if (by_valuation != a_n || by_series != a_n)
        throw mismatch("v_p(F) = " + std::to_string(by_valuation) + " by valuation, " + std::to_string(by_series) +
                       " by series");
    out.achieved_valuation = a_n;
    out.height_F = height(out.F);
    return out;
}

AuxiliaryFunction lemma2(const BoundReport& report, long n) {
    GapMatrix m = build_gap_matrix(report.gaps, n);
    return assemble_F(report.analyzed, report.x, report.point, m, nullspace_vector(m));
}

DerivativeValuationCheck check_derivative_valuation(const RationalFunction& f, const RationalFunction& x,
                                                    const PlaceCluster& q, unsigned n) {
    if (f.is_constant() || x.is_constant())
        throw Error(ErrorKind::ConstantFunction, "derivative valuation check needs nonconstant f and x");
    DerivativeValuationCheck out;
    out.rhs = valuation(f, q) - static_cast<long>(n) * (dxdxq_valuation(x, q) + 1);
    RationalFunction d = derivative_wrt_x(f, x, n);
    if (d.is_zero()) {
        out.holds = true;
        return out;
    }
    out.lhs = valuation(d, q);
    out.holds = *out.lhs >= out.rhs;
    return out;
}

std::vector<PlaceDerivativeCheck> check_derivative_valuations(const RationalFunction& f, const RationalFunction& x,
                                                              const std::vector<PlaceCluster>& places,
                                                              unsigned max_n) {
    if (f.is_constant() || x.is_constant())
        throw Error(ErrorKind::ConstantFunction, "derivative valuation check needs nonconstant f and x");
    const RationalFunction dx = x.derivative();
    std::vector<RationalFunction> derivatives{f};
    for (unsigned n = 1; n <= max_n; ++n)
        derivatives.push_back(derivatives.back().is_zero() ? RationalFunction() : derivatives.back().derivative() / dx);

    std::vector<PlaceDerivativeCheck> out;
    out.reserve(places.size() * (max_n + 1));
    for (const auto& q : places) {
        const long vf = valuation(f, q);
        const long vd = dxdxq_valuation(x, q);
        for (unsigned n = 0; n <= max_n; ++n) {
            DerivativeValuationCheck c;
            c.rhs = vf - static_cast<long>(n) * (vd + 1);
            if (derivatives[n].is_zero()) {
                c.holds = true;
            } else {
                c.lhs = valuation(derivatives[n], q);
                c.holds = *c.lhs >= c.rhs;
            }
            out.push_back({q, n, c});
        }
    }
    return out;
}

std::vector<PlaceCluster> derivative_support(const RationalFunction& f, const RationalFunction& x, unsigned max_n) {
    const RationalFunction dx = x.derivative();
    std::vector<Polynomial> polys{f.num(), f.den(), x.num(), x.den(), dx.num(), dx.den()};
    RationalFunction d = f;
    for (unsigned i = 1; i <= max_n && !d.is_zero(); ++i) {
        d = d.derivative() / dx;
        polys.push_back(d.num());
        polys.push_back(d.den());
    }
    auto places = cluster_table(polys);
    places.push_back(PlaceCluster::infinity());
    return places;
}

RiemannRochCheck check_rr_identity(const RationalFunction& x) {
    if (x.is_constant()) throw Error(ErrorKind::ConstantFunction, "Riemann-Roch identity needs a nonconstant x");
    const RationalFunction dx = x.derivative();
    auto places = cluster_table({x.num(), x.den(), dx.num(), dx.den()});
    places.push_back(PlaceCluster::infinity());
    RiemannRochCheck out{0, 0, false};
    for (const auto& q : places)
        if (valuation(x, q) == 0) out.lhs_sum += q.degree() * dxdxq_valuation(x, q);
    const long genus = 0;
    out.rhs = support_count(x) + 2 * genus - 2;
    out.holds = out.lhs_sum == out.rhs;
    return out;
}

PoleCase classify_place(const RationalFunction& f, const RationalFunction& x, const PlaceCluster& q) {
    const long vf = valuation(f, q);
    const long vx = valuation(x, q);
    const long vd = dxdxq_valuation(x, q);
    if (vd == 0) return vf < 0 ? PoleCase::S1 : PoleCase::S3;
    if (vx == 0 && vd > 0) return PoleCase::S2;
    if (vx != 0) return PoleCase::S4;
    throw Error(ErrorKind::PartitionGap, "place " + q.to_string() + " fits no case (v(f) = " + std::to_string(vf) +
                                             ", v(x) = " + std::to_string(vx) + ", v(dx/dx_q) = " +
                                             std::to_string(vd) + ")");
}

HeightDecomposition check_height_decomposition(const AuxiliaryFunction& F, const RationalFunction& f,
                                               const RationalFunction& x, long n) {
    const RationalFunction dx = x.derivative();
    auto places = cluster_table({f.num(), f.den(), x.num(), x.den(), dx.num(), dx.den(), F.F.num(), F.F.den()});
    places.push_back(PlaceCluster::infinity());

    HeightDecomposition out;
    long s2_weight = 0;
    for (const auto& q : places) {
        PoleCase which = classify_place(f, x, q);
        auto& bucket = out.cases[static_cast<std::size_t>(which) - 1];
        bucket.points += q.degree();
        bucket.height_F -= q.degree() * std::min(valuation(F.F, q), 0L);
        bucket.height_f -= q.degree() * std::min(valuation(f, q), 0L);
        if (which == PoleCase::S2) s2_weight += q.degree() * (dxdxq_valuation(x, q) + 1);
    }
    auto& c1 = out.cases[0];
    auto& c2 = out.cases[1];
    auto& c3 = out.cases[2];
    auto& c4 = out.cases[3];
    c1.allowance = c1.height_f + (n - 1) * c1.points;
    c2.allowance = c2.height_f + (n - 1) * s2_weight;
    c3.allowance = 0;
    c4.allowance = c4.height_f;
    for (auto& c : out.cases) {
        c.holds = c.height_F <= c.allowance;
        out.height_F += c.height_F;
    }
    out.theorem_rhs = theorem_bound(compute_bound_inputs(f, x), n);
    out.holds = std::all_of(out.cases.begin(), out.cases.end(), [](const auto& c) { return c.holds; }) &&
                out.height_F == F.height_F && out.height_F <= out.theorem_rhs;
    return out;
}

}  // namespace gapbound
