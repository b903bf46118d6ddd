#pragma once

#include <cstdint>
#include <vector>

#include "kbonacci/bignat.hpp"

namespace kbonacci {

/// Counters reported by the engines for benchmarking. Only operations the
/// engine itself issues are counted; work inside GMP primitives is not.
struct EvalStats {
    std::uint64_t additions = 0;       ///< big-int additions and subtractions
    std::uint64_t multiplications = 0; ///< big-int by big-int products
    std::uint64_t squarings = 0;       ///< matrix squarings (matrix engine only)
};

/// Window length k and index n of f_n^(k). n may be negative.
struct SequenceParams {
    std::int64_t k = 2;
    std::int64_t n = 0;
};

/// f_n^(k) from the defining recurrence: 0 for n < 0, 1 for n = 0, and the
/// sum of the previous k values for n >= 1. Keeps a running window sum so the
/// cost is O(n) big-int additions regardless of k. Throws ParameterError on k < 1.
BigNat kbonacci_recurrence(const SequenceParams& params, EvalStats* stats = nullptr);

/// [f_0, ..., f_n] for n >= 0.
std::vector<BigNat> kbonacci_prefix(std::int64_t k, std::int64_t n);

/// f_0 + ... + f_n accumulated over the prefix, n >= 0.
BigNat partial_sum_direct(std::int64_t k, std::int64_t n, EvalStats* stats = nullptr);

namespace detail {
void require_k(std::int64_t k);
void require_nonnegative_n(std::int64_t n);
} // namespace detail

} // namespace kbonacci
