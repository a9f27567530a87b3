#include "weierstab/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weierstab {

BiPoly BiPoly::monomial(const Rational& c, int u_exp, int v_exp) {
    BiPoly p;
    p.add_term(u_exp, v_exp, c);
    return p;
}

Rational BiPoly::coefficient(int u_exp, int v_exp) const {
    auto it = terms_.find({u_exp, v_exp});
    return it == terms_.end() ? Rational{} : it->second;
}

void BiPoly::add_term(int u_exp, int v_exp, const Rational& c) {
    if (u_exp < 0 || v_exp < 0) throw std::invalid_argument("BiPoly exponents must be non-negative");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({u_exp, v_exp}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int BiPoly::u_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e.first);
    return deg;
}

int BiPoly::v_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e.second);
    return deg;
}

Rational BiPoly::evaluate(const Rational& u, const Rational& v) const {
    Rational acc;
    for (const auto& [e, c] : terms_)
        acc += c * u.pow(static_cast<unsigned>(e.first)) * v.pow(static_cast<unsigned>(e.second));
    return acc;
}

LaurentPoly BiPoly::substitute_v(const LaurentPoly& v_of_u) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        LaurentPoly term = v_of_u.pow(static_cast<unsigned>(e.second)).shifted(e.first);
        out += term * c;
    }
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const auto [ue, ve] = e;
        std::string mono;
        if (ue > 0) mono += ue == 1 ? "u" : "u^" + std::to_string(ue);
        if (ve > 0) mono += (mono.empty() ? "" : "*") + (ve == 1 ? std::string("v") : "v^" + std::to_string(ve));
        if (mono.empty()) {
            os << mag;
        } else {
            if (mag != Rational(1)) os << mag << "*";
            os << mono;
        }
    }
    return os.str();
}

} // namespace weierstab
