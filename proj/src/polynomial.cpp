#include "weierstab/polynomial.hpp"

#include <sstream>

namespace weierstab {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { normalize(); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return Rational{};
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return {};
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(coeffs_.size());
    mpz_class content = 0;
    for (const auto& c : coeffs_) {
        mpz_class v = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(mpz_class(v / content));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * leading().reciprocal();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

std::string Polynomial::str(const std::string& variable) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
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
        os << variable;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> quotient(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    std::vector<Rational> rem = a.coefficients();
    const Rational inv_lead = b.leading().reciprocal();
    const auto& bc = b.coefficients();
    for (int k = a.degree(); k >= b.degree(); --k) {
        const Rational q = rem[static_cast<std::size_t>(k)] * inv_lead;
        if (q.is_zero()) continue;
        const int shift = k - b.degree();
        quotient[static_cast<std::size_t>(shift)] = q;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(shift) + j] -= q * bc[j];
    }
    return {Polynomial(std::move(quotient)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second.primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p) {
    std::vector<SquareFreeFactor> out;
    if (p.degree() < 1) return out;
    const Polynomial dp = p.derivative();
    Polynomial g = gcd(p, dp);
    Polynomial b = divmod(p, g).first;
    Polynomial c = divmod(dp, g).first;
    Polynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial a = gcd(b, d);
        if (a.degree() > 0) out.push_back({a.primitive(), i});
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

} // namespace weierstab
