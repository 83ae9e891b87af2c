#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gapbound/gaps.hpp"

namespace gapbound {

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    BigRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<BigRational> data_;
};

/// Exact determinant of a square matrix by fraction-free (Bareiss) elimination.
BigRational determinant(const Matrix& m);

/// Integer kernel vector of a matrix: reduced echelon solve with the last free
/// column set to 1 and all other free columns 0, scaled to a primitive integer
/// vector whose entry at that free column is positive. Empty when the kernel is trivial.
std::vector<BigInt> kernel_vector(const Matrix& m);

/// Coefficients of x^(a_i) in c_0 + c_1 f + c_2 x f' + ... + c_n x^(n-1) f^(n-1),
/// with the monomials x^(a_i) divided out of each row:
///   row 0 = (1, alpha_0, 0, ..., 0)
///   row i = (0, alpha_i ff(a_i, 0), ..., alpha_i ff(a_i, n-1)) for i >= 1.
struct GapMatrix {
    Matrix entries;
    long n;
    GapSequence source;
};

/// Throws InsufficientGapTerms if g has fewer than n + 1 terms.
GapMatrix build_gap_matrix(const GapSequence& g, long n);

/// Primitive integer c != 0 with B c = 0 for B the first n rows.
std::vector<BigInt> nullspace_vector(const GapMatrix& m);

/// det of the lower-right n x n block (alpha_i ff(a_i, j)); nonzero for any
/// valid gap sequence since the a_i are distinct.
bool wronskian_nonvanishing(const GapMatrix& m);

struct AuxiliaryFunction {
    std::vector<BigInt> c;
    RationalFunction F;
    long achieved_valuation;  // v_p(F), equal to a_n
    long height_F;
};

/// F = c_0 + sum_{i>=1} c_i x^(i-1) d^(i-1)f/dx^(i-1).
RationalFunction combine_derivatives(const RationalFunction& f, const RationalFunction& x,
                                     const std::vector<BigInt>& c);

/// Assembles F and checks v_p(F) = a_n along two independent routes: the
/// valuation of the rational function F, and the first nonzero term of the
/// termwise combination of f's x-expansion. Throws ValuationMismatch otherwise.
AuxiliaryFunction assemble_F(const RationalFunction& f, const RationalFunction& x, const BigRational& p,
                             const GapMatrix& m, const std::vector<BigInt>& c);

/// Builds the gap matrix, kernel vector and F for one n from a bound report.
AuxiliaryFunction lemma2(const BoundReport& report, long n);

struct DerivativeValuationCheck {
    std::optional<long> lhs;  // nullopt when d^n f/dx^n vanishes identically
    long rhs;
    bool holds;
};

/// v_q(d^n f/dx^n) >= v_q(f) - n (v_q(dx/dx_q) + 1).
DerivativeValuationCheck check_derivative_valuation(const RationalFunction& f, const RationalFunction& x,
                                                    const PlaceCluster& q, unsigned n);

struct PlaceDerivativeCheck {
    PlaceCluster place;
    unsigned n;
    DerivativeValuationCheck check;
};

/// The same inequality at every place for n = 0..max_n, differentiating once per n.
std::vector<PlaceDerivativeCheck> check_derivative_valuations(const RationalFunction& f, const RationalFunction& x,
                                                              const std::vector<PlaceCluster>& places,
                                                              unsigned max_n);

/// Every place needed to evaluate the derivative-valuation inequality for
/// n <= max_n homogeneously: refinement of f, x, dx/dt and the derivatives, plus infinity.
std::vector<PlaceCluster> derivative_support(const RationalFunction& f, const RationalFunction& x, unsigned max_n);

struct RiemannRochCheck {
    long lhs_sum;  // sum over q outside Supp{x} of v_q(dx/dx_q)
    long rhs;      // #Supp{x} + 2g - 2
    bool holds;
};

/// Genus-0 identity; a false result is a fatal self-check failure for callers.
RiemannRochCheck check_rr_identity(const RationalFunction& x);

enum class PoleCase { S1 = 1, S2 = 2, S3 = 3, S4 = 4 };

struct CaseContribution {
    long height_F = 0;        // -sum min(v_q(F), 0) over the case
    long height_f = 0;        // -sum min(v_q(f), 0) over the case
    long allowance = 0;       // right-hand side of the per-case bound
    long points = 0;          // complex points of the case among the scanned clusters
    bool holds = true;
};

struct HeightDecomposition {
    std::array<CaseContribution, 4> cases;  // indexed by PoleCase - 1
    long height_F = 0;
    long theorem_rhs = 0;
    bool holds = true;
};

/// Classifies every relevant place into S1..S4 and checks the per-case height
/// bounds for F. Throws PartitionGap if a place fits no case.
HeightDecomposition check_height_decomposition(const AuxiliaryFunction& F, const RationalFunction& f,
                                               const RationalFunction& x, long n);

PoleCase classify_place(const RationalFunction& f, const RationalFunction& x, const PlaceCluster& q);

}  // namespace gapbound
