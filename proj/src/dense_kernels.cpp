#include "dense_kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapbound::detail {

ScaledIntegers to_scaled(const std::vector<BigRational>& c, std::size_t limit) {
    const std::size_t n = std::min(c.size(), limit);
    ScaledIntegers out;
    for (std::size_t k = 0; k < n; ++k)
        mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c[k].raw().get_den_mpz_t());
    out.scaled.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        mpz_divexact(out.scaled[k].get_mpz_t(), out.denominator.get_mpz_t(), c[k].raw().get_den_mpz_t());
        out.scaled[k] *= c[k].raw().get_num();
    }
    return out;
}

std::vector<BigRational> mul_trunc(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                   std::size_t len) {
    auto as = to_scaled(a, len);
    auto bs = to_scaled(b, len);
    std::vector<BigInt> prod(len);
    for (std::size_t i = 0; i < as.scaled.size(); ++i) {
        if (as.scaled[i] == 0) continue;
        const std::size_t jmax = std::min(bs.scaled.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (bs.scaled[j] == 0) continue;
            mpz_addmul(prod[i + j].get_mpz_t(), as.scaled[i].get_mpz_t(), bs.scaled[j].get_mpz_t());
        }
    }
    BigInt den = as.denominator * bs.denominator;
    std::vector<BigRational> out;
    out.reserve(len);
    for (auto& p : prod) out.emplace_back(p, den);
    return out;
}

std::vector<BigRational> div_trunc(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                   std::size_t len) {
    if (b.empty() || b[0].is_zero()) throw std::domain_error("div_trunc: divisor has zero constant term");
    // With A = Da*a and B = Db*b integral, Q[k] = (A/B)[k] * B0^(k+1) is integral and
    // satisfies Q[k] = A[k]*B0^k - sum_{j>=1} B[j]*B0^(j-1)*Q[k-j].
    auto as = to_scaled(a, len);
    auto bs = to_scaled(b, len);
    const BigInt& b0 = bs.scaled[0];
    std::vector<BigInt> b0pow(len + 1);
    b0pow[0] = 1;
    for (std::size_t k = 1; k <= len; ++k) b0pow[k] = b0pow[k - 1] * b0;
    std::vector<BigInt> weighted(bs.scaled.size());
    for (std::size_t j = 1; j < bs.scaled.size(); ++j) weighted[j] = bs.scaled[j] * b0pow[j - 1];
    std::vector<BigInt> q(len);
    for (std::size_t k = 0; k < len; ++k) {
        BigInt acc = 0;
        if (k < as.scaled.size()) acc = as.scaled[k] * b0pow[k];
        const std::size_t jmax = std::min(k, bs.scaled.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) {
            if (weighted[j] == 0) continue;
            mpz_submul(acc.get_mpz_t(), weighted[j].get_mpz_t(), q[k - j].get_mpz_t());
        }
        q[k] = std::move(acc);
    }
    std::vector<BigRational> out;
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k) out.emplace_back(q[k] * bs.denominator, as.denominator * b0pow[k + 1]);
    return out;
}

std::vector<BigRational> eval_trunc(const std::vector<BigRational>& poly, const std::vector<BigRational>& r,
                                    std::size_t len) {
    std::vector<BigRational> acc(len);
    for (std::size_t k = poly.size(); k-- > 0;) {
        acc = mul_trunc(acc, r, len);
        if (len > 0) acc[0] += poly[k];
    }
    return acc;
}

}  // namespace gapbound::detail
