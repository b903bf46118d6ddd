#include "kbonacci/sequence_core.hpp"

#include <algorithm>
#include <string>

#include "kbonacci/errors.hpp"

namespace kbonacci {

namespace detail {

void require_k(std::int64_t k) {
    if (k < 1) {
        throw ParameterError("k must be >= 1, got " + std::to_string(k));
    }
}

void require_nonnegative_n(std::int64_t n) {
    if (n < 0) {
        throw ParameterError("n must be >= 0, got " + std::to_string(n));
    }
}

} // namespace detail

namespace {

// Walks f_0, f_1, ..., f_n and hands each value to `visit`. The ring buffer
// holds the last min(k, n) values; `window` is always f_{m-1} + ... + f_{m-k}
// with negative indices contributing 0.
template <typename Visit>
void walk_recurrence(std::int64_t k, std::int64_t n, EvalStats* stats, Visit&& visit) {
    const auto width = static_cast<std::size_t>(std::min<std::int64_t>(k, std::max<std::int64_t>(n, 1)));
    std::vector<mpz_class> ring(width);
    mpz_class window = 0;
    mpz_class current = 1;
    std::uint64_t additions = 0;

    for (std::int64_t m = 0;; ++m) {
        visit(current);
        if (m == n) {
            break;
        }
        // Advance: window(m+1) = window(m) + f_m - f_{m-k}.
        auto& slot = ring[static_cast<std::size_t>(m % static_cast<std::int64_t>(width))];
        window += current;
        ++additions;
        if (m >= k) {
            window -= slot; // slot still holds f_{m-k} when width == k
            ++additions;
        }
        slot = current;
        current = window;
    }
    if (stats != nullptr) {
        stats->additions += additions;
    }
}

} // namespace

BigNat kbonacci_recurrence(const SequenceParams& params, EvalStats* stats) {
    detail::require_k(params.k);
    if (params.n < 0) {
        return BigNat{};
    }
    mpz_class last;
    walk_recurrence(params.k, params.n, stats, [&](const mpz_class& f) { last = f; });
    return BigNat::from_signed(std::move(last));
}

std::vector<BigNat> kbonacci_prefix(std::int64_t k, std::int64_t n) {
    detail::require_k(k);
    detail::require_nonnegative_n(n);
    std::vector<BigNat> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    walk_recurrence(k, n, nullptr, [&](const mpz_class& f) { out.push_back(BigNat::from_signed(f)); });
    return out;
}

BigNat partial_sum_direct(std::int64_t k, std::int64_t n, EvalStats* stats) {
    detail::require_k(k);
    detail::require_nonnegative_n(n);
    mpz_class total = 0;
    std::uint64_t additions = 0;
    walk_recurrence(k, n, stats, [&](const mpz_class& f) {
        total += f;
        ++additions;
    });
    if (stats != nullptr) {
        stats->additions += additions;
    }
    return BigNat::from_signed(std::move(total));
}

} // namespace kbonacci
