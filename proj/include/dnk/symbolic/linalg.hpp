#ifndef DNK_SYMBOLIC_LINALG_HPP
#define DNK_SYMBOLIC_LINALG_HPP

#include "dnk/symbolic/scalar.hpp"

#include <optional>
#include <vector>

namespace dnk {

class FracMatrix {
public:
    FracMatrix() = default;
    FracMatrix(std::size_t rows, std::size_t cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), a_(rows * cols, Scalar(nvars)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int nvars() const { return nvars_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    int nvars_ = 0;
    std::vector<Scalar> a_;
};

using ScalarVec = std::vector<Scalar>;

// Right kernel over the rational-function field. Fraction-free elimination,
// pivot = first nonzero entry in a row-major scan of the remaining rows. Each
// basis vector is denominator-free, has coprime entries and a monic first
// nonzero entry. Free columns are taken in increasing order.
std::vector<ScalarVec> kernel_basis(const FracMatrix& m);

// One solution with free variables set to zero, or nothing if inconsistent.
std::optional<ScalarVec> solve_linear(const FracMatrix& m, const ScalarVec& rhs);

// Rank over the rational-function field.
std::size_t generic_rank(const FracMatrix& m);

// Rank of the matrix evaluated at a point; throws DenominatorVanishes.
std::size_t rank_at(const FracMatrix& m, const std::vector<Coeff>& point);

// Deterministic evaluation points: point j has coordinates j*n + 1, ..., j*n + n,
// shifted by 7 for every retry after a vanishing denominator.
inline constexpr int kMaxSampleRetries = 20;
std::vector<Coeff> sample_point(int nvars, unsigned index, unsigned retry);

// Outcome of sampling the rank of a matrix at `count` sample points.
struct SampledRank {
    std::vector<std::size_t> ranks;  // one per sample that could be evaluated
    bool all_evaluated = true;       // false when retries were exhausted
    std::size_t min_rank() const;
};
SampledRank sample_ranks(const FracMatrix& m, unsigned count);

}  // namespace dnk

#endif
