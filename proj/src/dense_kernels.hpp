#pragma once

// Dense coefficient kernels shared by the polynomial and series code.
// Rational inputs are rescaled to integer vectors over one common
// denominator so the inner loops run on mpz_addmul instead of mpq arithmetic.

#include <cstddef>
#include <vector>

#include "gapbound/rational.hpp"

namespace gapbound::detail {

struct ScaledIntegers {
    std::vector<BigInt> scaled;  // value[k] = scaled[k] / denominator
    BigInt denominator = 1;
};

ScaledIntegers to_scaled(const std::vector<BigRational>& c, std::size_t limit = static_cast<std::size_t>(-1));

/// First `len` coefficients of a * b (inputs are windows starting at exponent 0).
std::vector<BigRational> mul_trunc(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                   std::size_t len);

/// First `len` coefficients of a / b; b[0] must be nonzero.
std::vector<BigRational> div_trunc(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                   std::size_t len);

/// First `len` coefficients of sum_k poly[k] * r^k, where r[0] may be anything
/// the caller accounts for (here always zero).
std::vector<BigRational> eval_trunc(const std::vector<BigRational>& poly, const std::vector<BigRational>& r,
                                    std::size_t len);

}  // namespace gapbound::detail
