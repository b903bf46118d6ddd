#include "kbonacci/bignat.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "kbonacci/errors.hpp"

namespace kbonacci {

BigNat::BigNat(std::uint64_t value) {
    // mpz_class has no portable uint64 constructor on every platform.
    mpz_import(value_.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
}

BigNat BigNat::from_signed(mpz_class value) {
    if (sgn(value) < 0) {
        throw ConsistencyError("negative value cannot become a BigNat: " + value.get_str());
    }
    return BigNat(std::move(value));
}

BigNat BigNat::parse(std::string_view decimal) {
    if (decimal.empty() ||
        !std::all_of(decimal.begin(), decimal.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParameterError("not a non-negative decimal integer: '" + std::string(decimal) + "'");
    }
    return BigNat(mpz_class(std::string(decimal), 10));
}

BigNat BigNat::pow2(std::uint64_t exponent) {
    mpz_class v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), exponent);
    return BigNat(std::move(v));
}

std::string BigNat::to_string() const { return value_.get_str(10); }

std::size_t BigNat::bit_length() const noexcept {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::uint64_t BigNat::to_u64() const {
    if (bit_length() > 64) {
        throw RangeError("value does not fit in 64 bits");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value_.get_mpz_t());
    return out;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigNat& BigNat::operator*=(const BigNat& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
    if (cmp(value_, rhs.value_) < 0) {
        throw ConsistencyError("BigNat subtraction would go negative");
    }
    value_ -= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigNat& value) { return os << value.to_string(); }

} // namespace kbonacci
