#include "kbonacci/fast_eval.hpp"

#include <algorithm>

#include "kbonacci/errors.hpp"

namespace kbonacci {

SquareMatrix::SquareMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
    SquareMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out.at(i, i) = 1;
    }
    return out;
}

SquareMatrix SquareMatrix::multiply(const SquareMatrix& rhs, EvalStats* stats) const {
    if (rhs.dim_ != dim_) {
        throw ConsistencyError("matrix dimension mismatch");
    }
    SquareMatrix out(dim_);
    mpz_class acc;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            acc = 0;
            for (std::size_t l = 0; l < dim_; ++l) {
                mpz_addmul(acc.get_mpz_t(), at(i, l).get_mpz_t(), rhs.at(l, j).get_mpz_t());
            }
            out.at(i, j) = acc;
        }
    }
    if (stats != nullptr) {
        const auto d = static_cast<std::uint64_t>(dim_);
        stats->multiplications += d * d * d;
        stats->additions += d * d * d;
    }
    return out;
}

std::vector<mpz_class> SquareMatrix::apply(std::span<const mpz_class> vec, EvalStats* stats) const {
    if (vec.size() != dim_) {
        throw ConsistencyError("vector length does not match matrix dimension");
    }
    std::vector<mpz_class> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t l = 0; l < dim_; ++l) {
            mpz_addmul(out[i].get_mpz_t(), at(i, l).get_mpz_t(), vec[l].get_mpz_t());
        }
    }
    if (stats != nullptr) {
        const auto d = static_cast<std::uint64_t>(dim_);
        stats->multiplications += d * d;
        stats->additions += d * d;
    }
    return out;
}

SquareMatrix companion_matrix(std::int64_t k) {
    detail::require_k(k);
    const auto dim = static_cast<std::size_t>(k);
    SquareMatrix m(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        m.at(0, c) = 1;
    }
    for (std::size_t r = 1; r < dim; ++r) {
        m.at(r, r - 1) = 1;
    }
    return m;
}

SquareMatrix augmented_matrix(std::int64_t k) {
    detail::require_k(k);
    const auto dim = static_cast<std::size_t>(k) + 1;
    SquareMatrix m(dim);
    // S_{n+1} = S_n + f_{n+1}, and f_{n+1} is the sum of the k state values.
    for (std::size_t c = 0; c < dim; ++c) {
        m.at(0, c) = 1;
    }
    for (std::size_t c = 1; c < dim; ++c) {
        m.at(1, c) = 1;
    }
    for (std::size_t r = 2; r < dim; ++r) {
        m.at(r, r - 1) = 1;
    }
    return m;
}

SquareMatrix matrix_power(const SquareMatrix& base, std::uint64_t exponent, EvalStats* stats) {
    SquareMatrix result = SquareMatrix::identity(base.dim());
    if (exponent == 0) {
        return result;
    }
    SquareMatrix square = base;
    bool result_is_identity = true;
    for (;;) {
        if ((exponent & 1U) != 0) {
            if (result_is_identity) {
                result = square;
                result_is_identity = false;
            } else {
                result = result.multiply(square, stats);
            }
        }
        exponent >>= 1U;
        if (exponent == 0) {
            break;
        }
        square = square.multiply(square, stats);
        if (stats != nullptr) {
            ++stats->squarings;
        }
    }
    return result;
}

namespace {

// (f_{k-1}, ..., f_0) from the recurrence's base values.
std::vector<mpz_class> initial_state(std::int64_t k) {
    auto prefix = kbonacci_prefix(k, k - 1);
    std::vector<mpz_class> state;
    state.reserve(prefix.size());
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        state.push_back(it->raw());
    }
    return state;
}

} // namespace

BigNat kbonacci_matrix(std::int64_t k, std::int64_t n, EvalStats* stats) {
    detail::require_k(k);
    detail::require_nonnegative_n(n);
    if (n < k) {
        return kbonacci_recurrence({k, n}, stats);
    }
    const auto power = matrix_power(companion_matrix(k), static_cast<std::uint64_t>(n - k + 1), stats);
    const auto state = initial_state(k);
    // Only the first component is needed.
    mpz_class out = 0;
    for (std::size_t l = 0; l < state.size(); ++l) {
        mpz_addmul(out.get_mpz_t(), power.at(0, l).get_mpz_t(), state[l].get_mpz_t());
    }
    if (stats != nullptr) {
        stats->multiplications += state.size();
        stats->additions += state.size();
    }
    return BigNat::from_signed(std::move(out));
}

BigNat partial_sum_matrix(std::int64_t k, std::int64_t n, EvalStats* stats) {
    detail::require_k(k);
    detail::require_nonnegative_n(n);
    if (n < k) {
        return partial_sum_direct(k, n, stats);
    }
    auto state = initial_state(k);
    mpz_class running = 0;
    for (const auto& f : state) {
        running += f;
    }
    state.insert(state.begin(), running);
    const auto power = matrix_power(augmented_matrix(k), static_cast<std::uint64_t>(n - k + 1), stats);
    mpz_class out = 0;
    for (std::size_t l = 0; l < state.size(); ++l) {
        mpz_addmul(out.get_mpz_t(), power.at(0, l).get_mpz_t(), state[l].get_mpz_t());
    }
    if (stats != nullptr) {
        stats->multiplications += state.size();
        stats->additions += state.size();
    }
    return BigNat::from_signed(std::move(out));
}

} // namespace kbonacci
