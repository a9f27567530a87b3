#include "weierstab/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "weierstab/polynomial.hpp"

namespace weierstab {

std::string to_string(Sign s) {
    switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
    }
    return "?";
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Rational>> terms) {
    for (const auto& [k, c] : terms) add_term(k, c);
}

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

Rational LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational{} : it->second;
}

void LaurentPoly::add_term(int exponent, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

int LaurentPoly::lowest_exponent() const {
    if (is_zero()) throw std::logic_error("lowest_exponent of zero Laurent polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::highest_exponent() const {
    if (is_zero()) throw std::logic_error("highest_exponent of zero Laurent polynomial");
    return terms_.rbegin()->first;
}

LaurentTerm LaurentPoly::lowest_term() const {
    if (is_zero()) throw std::logic_error("lowest_term of zero Laurent polynomial");
    return {terms_.begin()->first, terms_.begin()->second};
}

Sign LaurentPoly::sign_at_zero_plus() const {
    if (is_zero()) return Sign::Zero;
    return sign_of(terms_.begin()->second);
}

Rational LaurentPoly::dominance_bound() const {
    if (is_zero()) throw std::logic_error("dominance_bound of zero Laurent polynomial");
    auto it = terms_.begin();
    const Rational lead = it->second.abs();
    Rational tail(1);
    for (++it; it != terms_.end(); ++it) tail += it->second.abs();
    const Rational bound = lead / tail;
    return bound < Rational(1) ? bound : Rational(1);
}

Rational LaurentPoly::evaluate(const Rational& u) const {
    Rational acc;
    for (const auto& [k, c] : terms_) {
        if (k >= 0) {
            acc += c * u.pow(static_cast<unsigned>(k));
        } else {
            acc += c * u.reciprocal().pow(static_cast<unsigned>(-k));
        }
    }
    return acc;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    LaurentPoly out(variable_);
    for (const auto& [i, a] : terms_)
        for (const auto& [j, b] : rhs.terms_) out.add_term(i + j, a * b);
    terms_ = std::move(out.terms_);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= scalar;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out(variable_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = LaurentPoly::constant(Rational(1));
    for (unsigned i = 0; i < k; ++i) result *= *this;
    return result;
}

std::pair<Polynomial, int> LaurentPoly::cleared() const {
    if (is_zero()) return {Polynomial{}, 0};
    const int shift = -lowest_exponent();
    std::vector<Rational> coeffs(static_cast<std::size_t>(highest_exponent() + shift) + 1);
    for (const auto& [k, c] : terms_) coeffs[static_cast<std::size_t>(k + shift)] = c;
    return {Polynomial(std::move(coeffs)), shift};
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) os << mag << "*";
        os << variable_;
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

} // namespace weierstab
