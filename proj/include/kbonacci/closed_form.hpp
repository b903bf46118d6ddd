#pragma once

#include <cstdint>
#include <vector>

#include "kbonacci/bignat.hpp"
#include "kbonacci/sequence_core.hpp"

namespace kbonacci {

/// One summand of an alternating sum: sign * magnitude at index j.
struct SignedTerm {
    std::int64_t j = 0;
    int sign = 1; ///< +1 or -1, always (-1)^j
    BigNat magnitude;

    mpz_class signed_value() const;
    friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// Upper summation limit m for the extended partial-sum formula.
struct SumLimit {
    std::int64_t m = 0;
};

enum class TermFormula {
    sum_formula,  ///< (-1)^j C(n-jk, j) 2^(n-j(k+1)), sums to the partial sum
    term_formula, ///< per-term split that sums to f_n itself
};

/// C(a, b) for a >= 0. Zero when b < 0 or b > a. Throws ParameterError on a < 0.
BigNat binomial(std::int64_t a, std::int64_t b);

/// Partial sum f_0 + ... + f_n as the alternating binomial sum
///   sum_{j=0}^{floor(n/(k+1))} (-1)^j C(n-jk, j) 2^(n-j(k+1)).
BigNat partial_sum_dunkel(std::int64_t k, std::int64_t n, EvalStats* stats = nullptr);

/// Same sum with upper limit m anywhere in [floor(n/(k+1)), floor(n/k)]; the
/// extra terms all carry a vanishing binomial. Throws RangeError outside that window.
BigNat partial_sum_dunkel_extended(std::int64_t k, std::int64_t n, SumLimit limit);

/// f_n^(k) from the binomial/power-of-two term formula, evaluated through the
/// integral split
///   (-1)^j [ 2^e C(n-jk, j) - 2^(e-1) C(n-jk-1, j) ],  e = n - j(k+1).
/// f_0 = 1 by the delta convention.
BigNat kbonacci_closed(std::int64_t k, std::int64_t n, EvalStats* stats = nullptr);

/// All summands of the selected formula in increasing j.
std::vector<SignedTerm> term_breakdown(std::int64_t k, std::int64_t n, TermFormula which);

/// Folds terms with signed addition; throws ConsistencyError on a negative total.
BigNat fold_terms(const std::vector<SignedTerm>& terms);

} // namespace kbonacci
