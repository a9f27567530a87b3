#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weierstab/rational.hpp"

namespace weierstab {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// increasing degree. Trailing zeros are stripped; the zero polynomial has
/// no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial monomial(const Rational& c, int degree);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coefficient(int k) const;
    const Rational& leading() const { return coeffs_.back(); }

    Rational evaluate(const Rational& x) const;
    int sign_at(const Rational& x) const { return evaluate(x).sign(); }

    Polynomial derivative() const;

    /// Positive rational multiple with coprime integer coefficients. Sign of
    /// the leading coefficient is preserved, so sign sequences are unchanged.
    Polynomial primitive() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string str(const std::string& variable = "u") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DivisionByZero on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);

struct SquareFreeFactor {
    Polynomial factor;
    int multiplicity = 1;
};

/// Yun's square-free decomposition: p = lc * prod f_i^i with each f_i
/// square-free and pairwise coprime. Constant factors are omitted.
std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p);

} // namespace weierstab
