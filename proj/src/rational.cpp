#include "weierstab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace weierstab {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

} // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw DivisionByZero();
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw DivisionByZero();
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw DivisionByZero();
    value_.canonicalize();
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    if (negative) n = -n;
    return Rational(n, d);
}

Rational Rational::parse(std::string_view text) {
    auto r = try_parse(text);
    if (!r) throw ParseError("not a rational of the form p/q: \"" + std::string(text) + "\"");
    return *r;
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    r.value_ = 1 / value_;
    r.value_.canonicalize();
    return r;
}

Rational Rational::pow(unsigned exponent) const {
    Rational result(1);
    Rational base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str(10);
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div:
        if (b.is_zero()) return std::nullopt;
        return a / b;
    }
    return std::nullopt;
}

Rational pow2_inverse(unsigned k) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
    return Rational(mpz_class(1), den);
}

} // namespace weierstab
