#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "weierstab/rational.hpp"

namespace weierstab {

class Polynomial;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(int s) { return s < 0 ? Sign::Negative : s > 0 ? Sign::Positive : Sign::Zero; }
inline Sign sign_of(const Rational& r) { return sign_of(r.sign()); }
std::string to_string(Sign s);

struct LaurentTerm {
    int exponent = 0;
    Rational coefficient;

    friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;
};

/// Finite Laurent polynomial in one variable with exact rational
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::string variable) : variable_(std::move(variable)) {}
    LaurentPoly(std::initializer_list<std::pair<const int, Rational>> terms);

    static LaurentPoly constant(const Rational& c);
    static LaurentPoly monomial(const Rational& c, int exponent);

    const Terms& terms() const noexcept { return terms_; }
    const std::string& variable() const noexcept { return variable_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(int exponent) const;
    void add_term(int exponent, const Rational& coefficient);

    // Precondition for the three below: nonzero polynomial.
    int lowest_exponent() const;
    int highest_exponent() const;
    LaurentTerm lowest_term() const;

    /// Sign of p(u) for all sufficiently small u > 0.
    Sign sign_at_zero_plus() const;

    /// A rational u* in (0, 1] such that the lowest term decides the sign of
    /// p(u) for every 0 < u <= u*. With lowest term c u^k and higher
    /// coefficients c_j this is min(1, |c| / (1 + sum |c_j|)).
    Rational dominance_bound() const;

    Rational evaluate(const Rational& u) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& scalar);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

    /// Multiplies by variable^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly pow(unsigned k) const;

    /// The ordinary polynomial u^(-lowest_exponent) * p, together with that
    /// shift. Multiplying by a power of u does not move roots in u > 0.
    std::pair<Polynomial, int> cleared() const;

    /// Human-readable form, e.g. "3*u^-1 - 5 + 2*u". Zero renders as "0".
    std::string str() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
    std::string variable_ = "u";
};

} // namespace weierstab
