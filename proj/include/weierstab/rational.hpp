#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "weierstab/error.hpp"

namespace weierstab {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and arithmetic
/// result is canonicalized, so structural equality is numeric equality.
/// Division by zero throws DivisionByZero rather than trapping.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class value);

    /// Parses "p/q", "p", with an optional leading '-' or '+'. Rejects
    /// zero denominators, whitespace, decimals and anything GMP would
    /// accept beyond plain base-10 digits.
    static Rational parse(std::string_view text);
    static std::optional<Rational> try_parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational reciprocal() const;
    Rational pow(unsigned exponent) const;

    /// "p/q", or "p" when q = 1.
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;
};

enum class ArithOp { add, sub, mul, div };

/// Checked binary operation; returns nullopt for division by zero instead
/// of throwing.
std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op);

/// Smallest power of two 2^-k not exceeding the argument is often handy as a
/// tolerance; this returns exactly 2^-k.
Rational pow2_inverse(unsigned k);

} // namespace weierstab

template <>
struct std::hash<weierstab::Rational> {
    std::size_t operator()(const weierstab::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
