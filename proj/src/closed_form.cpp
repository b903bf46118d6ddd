#include "kbonacci/closed_form.hpp"

#include <string>

#include "kbonacci/errors.hpp"

namespace kbonacci {

namespace {

mpz_class binomial_mpz(std::int64_t a, std::int64_t b) {
    mpz_class out = 0;
    if (b >= 0 && b <= a) {
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    }
    return out;
}

mpz_class shifted(const mpz_class& v, std::int64_t exponent) {
    mpz_class out;
    mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return out;
}

// Magnitude of the j-th summand of the partial-sum formula; no floor check.
mpz_class sum_term(std::int64_t k, std::int64_t n, std::int64_t j) {
    const std::int64_t top = n - j * k;
    if (top < 0) {
        return 0;
    }
    mpz_class c = binomial_mpz(top, j);
    if (c == 0) {
        return 0;
    }
    // C(top, j) != 0 implies top >= j, i.e. n - j(k+1) >= 0.
    return shifted(c, n - j * (k + 1));
}

// Magnitude of the j-th summand of the per-term formula (n >= 1).
mpz_class value_term(std::int64_t k, std::int64_t n, std::int64_t j) {
    const std::int64_t top = n - j * k;
    const std::int64_t e = n - j * (k + 1);
    mpz_class lead = shifted(binomial_mpz(top, j), e);
    mpz_class tail = binomial_mpz(top - 1, j);
    if (tail != 0) {
        // Nonzero only if top - 1 >= j, so e - 1 >= 0.
        lead -= shifted(tail, e - 1);
    }
    return lead;
}

std::int64_t floor_limit(std::int64_t k, std::int64_t n) { return n / (k + 1); }

void require_closed_params(std::int64_t k, std::int64_t n) {
    detail::require_k(k);
    detail::require_nonnegative_n(n);
}

BigNat to_bignat_checked(mpz_class total, const char* what) {
    if (sgn(total) < 0) {
        throw ConsistencyError(std::string(what) + " accumulated a negative total");
    }
    return BigNat::from_signed(std::move(total));
}

mpz_class alternating_sum(std::int64_t k, std::int64_t n, std::int64_t upper, EvalStats* stats) {
    mpz_class total = 0;
    for (std::int64_t j = 0; j <= upper; ++j) {
        mpz_class t = sum_term(k, n, j);
        if (j % 2 == 0) {
            total += t;
        } else {
            total -= t;
        }
    }
    if (stats != nullptr) {
        stats->additions += static_cast<std::uint64_t>(upper + 1);
    }
    return total;
}

} // namespace

mpz_class SignedTerm::signed_value() const { return sign < 0 ? mpz_class(-magnitude.raw()) : magnitude.raw(); }

BigNat binomial(std::int64_t a, std::int64_t b) {
    if (a < 0) {
        throw ParameterError("binomial: top must be >= 0, got " + std::to_string(a));
    }
    return BigNat::from_signed(binomial_mpz(a, b));
}

BigNat partial_sum_dunkel(std::int64_t k, std::int64_t n, EvalStats* stats) {
    require_closed_params(k, n);
    return to_bignat_checked(alternating_sum(k, n, floor_limit(k, n), stats), "partial_sum_dunkel");
}

BigNat partial_sum_dunkel_extended(std::int64_t k, std::int64_t n, SumLimit limit) {
    require_closed_params(k, n);
    const std::int64_t lo = floor_limit(k, n);
    const std::int64_t hi = n / k;
    if (limit.m < lo || limit.m > hi) {
        throw RangeError("summation limit m=" + std::to_string(limit.m) + " outside [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
    }
    return to_bignat_checked(alternating_sum(k, n, limit.m, nullptr), "partial_sum_dunkel_extended");
}

BigNat kbonacci_closed(std::int64_t k, std::int64_t n, EvalStats* stats) {
    require_closed_params(k, n);
    if (n == 0) {
        return BigNat{1};
    }
    mpz_class total = 0;
    const std::int64_t upper = floor_limit(k, n);
    for (std::int64_t j = 0; j <= upper; ++j) {
        mpz_class t = value_term(k, n, j);
        if (j % 2 == 0) {
            total += t;
        } else {
            total -= t;
        }
    }
    if (stats != nullptr) {
        stats->additions += static_cast<std::uint64_t>(2 * (upper + 1));
    }
    return to_bignat_checked(std::move(total), "kbonacci_closed");
}

std::vector<SignedTerm> term_breakdown(std::int64_t k, std::int64_t n, TermFormula which) {
    require_closed_params(k, n);
    std::vector<SignedTerm> out;
    if (which == TermFormula::term_formula && n == 0) {
        out.push_back({0, 1, BigNat{1}});
        return out;
    }
    const std::int64_t upper = floor_limit(k, n);
    out.reserve(static_cast<std::size_t>(upper) + 1);
    for (std::int64_t j = 0; j <= upper; ++j) {
        mpz_class t = which == TermFormula::sum_formula ? sum_term(k, n, j) : value_term(k, n, j);
        out.push_back({j, j % 2 == 0 ? 1 : -1, BigNat::from_signed(std::move(t))});
    }
    return out;
}

BigNat fold_terms(const std::vector<SignedTerm>& terms) {
    mpz_class total = 0;
    for (const auto& t : terms) {
        total += t.signed_value();
    }
    return to_bignat_checked(std::move(total), "fold_terms");
}

} // namespace kbonacci
