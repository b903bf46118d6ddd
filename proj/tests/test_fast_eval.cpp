#include <doctest.h>

#include <random>

#include "kbonacci/errors.hpp"
#include "kbonacci/fast_eval.hpp"
#include "oracles.hpp"

using namespace kbonacci;

namespace {
BigNat big(const mpz_class& v) { return BigNat::from_signed(v); }
} // namespace

TEST_CASE("kbonacci_matrix examples") {
    CHECK(kbonacci_matrix(2, 4) == BigNat{5});
    CHECK(kbonacci_matrix(3, 0) == BigNat{1});
    CHECK(kbonacci_matrix(2, 64) == kbonacci_recurrence({2, 64}));
    CHECK_THROWS_AS(kbonacci_matrix(0, 4), ParameterError);
    CHECK_THROWS_AS(kbonacci_matrix(2, -1), ParameterError);
}

TEST_CASE("partial_sum_matrix examples") {
    CHECK(partial_sum_matrix(2, 4) == BigNat{12});
    CHECK(partial_sum_matrix(5, 0) == BigNat{1});
    CHECK(partial_sum_matrix(3, 7) == BigNat{96});
    CHECK_THROWS_AS(partial_sum_matrix(0, 4), ParameterError);
}

TEST_CASE("companion matrix advances the state vector") {
    for (std::int64_t k = 1; k <= 5; ++k) {
        const auto table = oracle::kbonacci_table(k, 30);
        const auto m = companion_matrix(k);
        for (std::int64_t n = k - 1; n < 29; ++n) {
            std::vector<mpz_class> state;
            for (std::int64_t i = 0; i < k; ++i) {
                state.push_back(table[static_cast<std::size_t>(n - i)]);
            }
            const auto next = m.apply(state);
            for (std::int64_t i = 0; i < k; ++i) {
                CHECK(next[static_cast<std::size_t>(i)] == table[static_cast<std::size_t>(n + 1 - i)]);
            }
        }
    }
}

TEST_CASE("augmented matrix carries the running sum") {
    for (std::int64_t k = 1; k <= 5; ++k) {
        const auto table = oracle::kbonacci_table(k, 30);
        const auto m = augmented_matrix(k);
        mpz_class running = 0;
        for (std::int64_t i = 0; i < k - 1; ++i) {
            running += table[static_cast<std::size_t>(i)];
        }
        for (std::int64_t n = k - 1; n < 29; ++n) {
            running += table[static_cast<std::size_t>(n)];
            std::vector<mpz_class> state{running};
            for (std::int64_t i = 0; i < k; ++i) {
                state.push_back(table[static_cast<std::size_t>(n - i)]);
            }
            const auto next = m.apply(state);
            CHECK(next[0] == running + table[static_cast<std::size_t>(n + 1)]);
            CHECK(next[1] == table[static_cast<std::size_t>(n + 1)]);
        }
    }
}

TEST_CASE("matrix powering: identity at zero, additive exponents") {
    for (std::int64_t k = 1; k <= 4; ++k) {
        const auto m = companion_matrix(k);
        CHECK(matrix_power(m, 0) == SquareMatrix::identity(static_cast<std::size_t>(k)));
        CHECK(matrix_power(m, 1) == m);
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto k = static_cast<std::int64_t>(rng() % 5 + 1);
        const auto a = rng() % 60;
        const auto b = rng() % 60;
        const auto m = companion_matrix(k);
        CHECK(matrix_power(m, a + b) == matrix_power(m, a).multiply(matrix_power(m, b)));
    }
}

TEST_CASE("squaring count is logarithmic") {
    EvalStats stats;
    (void)matrix_power(companion_matrix(2), 1U << 20U, &stats);
    CHECK(stats.squarings == 20);
    EvalStats one;
    (void)matrix_power(companion_matrix(2), 1, &one);
    CHECK(one.squarings == 0);
    CHECK(one.multiplications == 0);
}

TEST_CASE("matrix engine agrees with the naive recurrence on the grid") {
    for (std::int64_t k = 1; k <= 6; ++k) {
        const auto table = oracle::kbonacci_table(k, 200);
        mpz_class running = 0;
        for (std::int64_t n = 0; n <= 200; ++n) {
            running += table[static_cast<std::size_t>(n)];
            CHECK(kbonacci_matrix(k, n) == big(table[static_cast<std::size_t>(n)]));
            CHECK(partial_sum_matrix(k, n) == big(running));
        }
    }
}

TEST_CASE("large-index agreement with the linear engine") {
    for (std::int64_t k : {2, 3}) {
        for (std::int64_t n : {1000, 10000, 100000}) {
            CHECK(kbonacci_matrix(k, n) == kbonacci_recurrence({k, n}));
        }
    }
    CHECK(partial_sum_matrix(3, 20000) == partial_sum_direct(3, 20000));
}
