#pragma once

#include <map>
#include <string>
#include <utility>

#include "weierstab/laurent.hpp"
#include "weierstab/rational.hpp"

namespace weierstab {

/// Polynomial in (u, v) with non-negative exponents and exact coefficients.
/// Keys are (u-exponent, v-exponent); zero coefficients are never stored.
class BiPoly {
public:
    using Exponents = std::pair<int, int>;
    using Terms = std::map<Exponents, Rational>;

    BiPoly() = default;

    static BiPoly monomial(const Rational& c, int u_exp, int v_exp);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(int u_exp, int v_exp) const;
    void add_term(int u_exp, int v_exp, const Rational& c);

    int u_degree() const;
    int v_degree() const;

    Rational evaluate(const Rational& u, const Rational& v) const;

    /// Replaces v by a Laurent polynomial in u.
    LaurentPoly substitute_v(const LaurentPoly& v_of_u) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator*=(const Rational& s);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }

    std::string str() const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    Terms terms_;
};

} // namespace weierstab
