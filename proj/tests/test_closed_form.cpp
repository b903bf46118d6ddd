#include <doctest.h>

#include "kbonacci/closed_form.hpp"
#include "kbonacci/errors.hpp"
#include "oracles.hpp"

using namespace kbonacci;

namespace {
BigNat big(const mpz_class& v) { return BigNat::from_signed(v); }
} // namespace

TEST_CASE("binomial examples and vanishing cases") {
    CHECK(binomial(4, 0) == BigNat{1});
    CHECK(binomial(0, 2) == BigNat{0});
    CHECK(binomial(5, 2) == BigNat{10});
    CHECK(binomial(5, -1) == BigNat{0});
    CHECK(binomial(0, 0) == BigNat{1});
    CHECK_THROWS_AS(binomial(-1, 0), ParameterError);
}

TEST_CASE("binomial matches Pascal's triangle") {
    const auto c = oracle::pascal(60);
    for (std::int64_t a = 0; a <= 60; ++a) {
        for (std::int64_t b = -2; b <= a + 2; ++b) {
            const mpz_class expected = (b < 0 || b > a) ? mpz_class(0) : c[a][b];
            CHECK(binomial(a, b) == big(expected));
        }
    }
}

TEST_CASE("partial_sum_dunkel examples") {
    CHECK(partial_sum_dunkel(2, 4) == BigNat{12});
    CHECK(partial_sum_dunkel(3, 7) == BigNat{96});
    CHECK(partial_sum_dunkel(9, 6) == BigNat{64});
    CHECK_THROWS_AS(partial_sum_dunkel(0, 6), ParameterError);
    CHECK_THROWS_AS(partial_sum_dunkel(2, -1), ParameterError);
}

TEST_CASE("partial_sum_dunkel equals the naive partial sum") {
    for (std::int64_t k = 1; k <= 6; ++k) {
        for (std::int64_t n = 0; n <= 60; ++n) {
            CHECK(partial_sum_dunkel(k, n) == big(oracle::partial_sum(k, n)));
        }
    }
}

TEST_CASE("base case k >= n gives 2^n") {
    for (std::int64_t k = 1; k <= 10; ++k) {
        for (std::int64_t n = 0; n <= k; ++n) {
            CHECK(partial_sum_dunkel(k, n) == BigNat::pow2(static_cast<std::uint64_t>(n)));
        }
    }
}

TEST_CASE("partial_sum_dunkel_extended examples") {
    CHECK(partial_sum_dunkel_extended(2, 4, {2}) == BigNat{12});
    CHECK(partial_sum_dunkel_extended(2, 4, {1}) == BigNat{12});
    // Oracle value: 1 + 1 + 1 + 1.
    REQUIRE(big(oracle::partial_sum(1, 3)) == BigNat{4});
    CHECK(partial_sum_dunkel_extended(1, 3, {3}) == BigNat{4});
}

TEST_CASE("extended limit outside the window is a range error") {
    CHECK_THROWS_AS(partial_sum_dunkel_extended(2, 4, {0}), RangeError);
    CHECK_THROWS_AS(partial_sum_dunkel_extended(2, 4, {3}), RangeError);
    CHECK_THROWS_AS(partial_sum_dunkel_extended(3, 7, {-1}), RangeError);
}

TEST_CASE("extended sum does not depend on m") {
    for (std::int64_t k = 1; k <= 5; ++k) {
        for (std::int64_t n = 0; n <= 40; ++n) {
            const auto base = partial_sum_dunkel(k, n);
            for (std::int64_t m = n / (k + 1); m <= n / k; ++m) {
                CHECK(partial_sum_dunkel_extended(k, n, {m}) == base);
            }
        }
    }
}

TEST_CASE("kbonacci_closed examples") {
    CHECK(kbonacci_closed(2, 4) == BigNat{5});
    CHECK(kbonacci_closed(3, 0) == BigNat{1});
    CHECK(kbonacci_closed(4, 4) == BigNat{8});
    CHECK_THROWS_AS(kbonacci_closed(0, 4), ParameterError);
    CHECK_THROWS_AS(kbonacci_closed(2, -4), ParameterError);
}

TEST_CASE("kbonacci_closed equals the naive recurrence and the difference identity") {
    for (std::int64_t k = 1; k <= 6; ++k) {
        const auto table = oracle::kbonacci_table(k, 60);
        for (std::int64_t n = 0; n <= 60; ++n) {
            CHECK(kbonacci_closed(k, n) == big(table[static_cast<std::size_t>(n)]));
            if (n >= 1) {
                CHECK(kbonacci_closed(k, n) == partial_sum_dunkel(k, n) - partial_sum_dunkel(k, n - 1));
            }
        }
    }
}

TEST_CASE("term_breakdown examples") {
    const std::vector<SignedTerm> a{{0, 1, BigNat{128}}, {1, -1, BigNat{32}}};
    CHECK(term_breakdown(3, 7, TermFormula::sum_formula) == a);
    const std::vector<SignedTerm> b{{0, 1, BigNat{1}}};
    CHECK(term_breakdown(2, 0, TermFormula::sum_formula) == b);
    const std::vector<SignedTerm> c{{0, 1, BigNat{8}}, {1, -1, BigNat{3}}};
    CHECK(term_breakdown(2, 4, TermFormula::term_formula) == c);
    CHECK(term_breakdown(2, 0, TermFormula::term_formula) == b);
}

TEST_CASE("term_breakdown folds back to the engines") {
    for (std::int64_t k = 1; k <= 6; ++k) {
        for (std::int64_t n = 0; n <= 60; ++n) {
            const auto sum_terms = term_breakdown(k, n, TermFormula::sum_formula);
            const auto value_terms = term_breakdown(k, n, TermFormula::term_formula);
            CHECK(fold_terms(sum_terms) == partial_sum_dunkel(k, n));
            CHECK(fold_terms(value_terms) == kbonacci_closed(k, n));
            for (std::size_t j = 0; j < value_terms.size(); ++j) {
                CHECK(value_terms[j].j == static_cast<std::int64_t>(j));
                CHECK(value_terms[j].sign == (j % 2 == 0 ? 1 : -1));
            }
        }
    }
}

TEST_CASE("term-formula summands equal the rational form") {
    // ((n-jk)+j) / (2(n-jk)) * C(n-jk, j) * 2^(n-j(k+1)), computed over Q.
    for (std::int64_t k = 1; k <= 6; ++k) {
        for (std::int64_t n = 1; n <= 40; ++n) {
            for (const auto& t : term_breakdown(k, n, TermFormula::term_formula)) {
                const std::int64_t top = n - t.j * k;
                mpq_class q(binomial(top, t.j).raw());
                q *= mpq_class(top + t.j, 2 * top);
                mpz_class p2 = 1;
                mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(), static_cast<mp_bitcnt_t>(n - t.j * (k + 1)));
                q *= p2;
                q.canonicalize();
                CHECK(q.get_den() == 1);
                CHECK(q.get_num() == t.magnitude.raw());
            }
        }
    }
}

TEST_CASE("fold_terms rejects a negative total") {
    const std::vector<SignedTerm> terms{{0, 1, BigNat{2}}, {1, -1, BigNat{5}}};
    CHECK_THROWS_AS(fold_terms(terms), ConsistencyError);
}
