#pragma once

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kbonacci {

/// Arbitrary-precision non-negative integer.
///
/// Thin value type over mpz_class that keeps the sign invariant: every
/// constructor and arithmetic operation either yields a value >= 0 or throws
/// ConsistencyError.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t value); // NOLINT(google-explicit-constructor)

    /// Adopts a signed GMP integer; throws ConsistencyError if it is negative.
    static BigNat from_signed(mpz_class value);
    /// Parses a decimal string of digits; throws ParameterError otherwise.
    static BigNat parse(std::string_view decimal);
    static BigNat pow2(std::uint64_t exponent);

    const mpz_class& raw() const noexcept { return value_; }

    std::string to_string() const;
    std::size_t bit_length() const noexcept;
    bool is_zero() const noexcept { return sgn(value_) == 0; }

    /// Value as uint64; throws RangeError when it does not fit.
    std::uint64_t to_u64() const;

    BigNat& operator+=(const BigNat& rhs);
    BigNat& operator*=(const BigNat& rhs);
    /// Subtraction that throws ConsistencyError if rhs > *this.
    BigNat& operator-=(const BigNat& rhs);

    friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
    friend BigNat operator*(BigNat lhs, const BigNat& rhs) { return lhs *= rhs; }
    friend BigNat operator-(BigNat lhs, const BigNat& rhs) { return lhs -= rhs; }

    friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit BigNat(mpz_class value) : value_(std::move(value)) {}

    mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigNat& value);

} // namespace kbonacci
