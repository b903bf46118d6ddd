#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kbonacci/bignat.hpp"
#include "kbonacci/sequence_core.hpp"

namespace kbonacci {

/// Dense square matrix of exact integers, row-major.
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t dim);
    static SquareMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    mpz_class& at(std::size_t row, std::size_t col) { return cells_[row * dim_ + col]; }
    const mpz_class& at(std::size_t row, std::size_t col) const { return cells_[row * dim_ + col]; }

    /// Product; adds dim^3 to stats->multiplications when stats is set.
    SquareMatrix multiply(const SquareMatrix& rhs, EvalStats* stats = nullptr) const;
    std::vector<mpz_class> apply(std::span<const mpz_class> vec, EvalStats* stats = nullptr) const;

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.dim_ == b.dim_ && a.cells_ == b.cells_;
    }

private:
    std::size_t dim_;
    std::vector<mpz_class> cells_;
};

/// k x k companion matrix: first row all ones, ones on the subdiagonal.
/// Maps (f_n, ..., f_{n-k+1}) to (f_{n+1}, ..., f_{n-k+2}).
SquareMatrix companion_matrix(std::int64_t k);

/// (k+1) x (k+1) matrix advancing (S_n, f_n, ..., f_{n-k+1}) where S_n is the
/// running partial sum.
SquareMatrix augmented_matrix(std::int64_t k);

/// base^exponent by repeated squaring. stats->squarings counts the squarings.
SquareMatrix matrix_power(const SquareMatrix& base, std::uint64_t exponent, EvalStats* stats = nullptr);

/// f_n^(k) in O(log n) matrix squarings. n < k is answered by the recurrence.
BigNat kbonacci_matrix(std::int64_t k, std::int64_t n, EvalStats* stats = nullptr);

/// f_0 + ... + f_n via the augmented matrix.
BigNat partial_sum_matrix(std::int64_t k, std::int64_t n, EvalStats* stats = nullptr);

} // namespace kbonacci
