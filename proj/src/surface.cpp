#include "weierstab/surface.hpp"

#include <sstream>

namespace weierstab {

std::optional<std::string> SurfaceParams::validate(const Rational& e, const Rational& m, const Rational& alpha,
                                                   const Rational& lambda) {
    if (m.sign() <= 0) return "m must be positive (got " + m.str() + ")";
    if (alpha.sign() <= 0) return "alpha must be positive (got " + alpha.str() + ")";
    if (lambda.sign() <= 0) return "lambda must be positive (got " + lambda.str() + ")";
    const Rational k = m + alpha - e;
    if (k.sign() <= 0)
        return "m + alpha - e must be positive (got " + k.str() +
               "); otherwise v -> infinity is not reached with u > 0 on the curve";
    return std::nullopt;
}

SurfaceParams SurfaceParams::create(Rational e, Rational m, Rational alpha, Rational lambda) {
    if (auto err = validate(e, m, alpha, lambda)) throw ParameterError(*err);
    return SurfaceParams(std::move(e), std::move(m), std::move(alpha), std::move(lambda));
}

ChernClass& ChernClass::operator+=(const ChernClass& o) {
    n += o.n;
    d += o.d;
    c += o.c;
    s += o.s;
    return *this;
}

ChernClass& ChernClass::operator-=(const ChernClass& o) {
    n -= o.n;
    d -= o.d;
    c -= o.c;
    s -= o.s;
    return *this;
}

std::strong_ordering operator<=>(const ChernClass& a, const ChernClass& b) {
    if (auto r = a.n <=> b.n; r != 0) return r;
    if (auto r = a.d <=> b.d; r != 0) return r;
    if (auto r = a.c <=> b.c; r != 0) return r;
    return a.s <=> b.s;
}

std::string ChernClass::str() const {
    std::ostringstream os;
    os << "(" << n << ", " << d << ", " << c << ", " << s << ")";
    return os.str();
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.value() <=> b.value();
}

Rational twisted_ch1_pair(const ChernClass& x, const SurfaceParams& p) {
    const Rational half_e = p.e() / Rational(2);
    return p.twist_a() * ((x.c - half_e * x.n) + (p.m() + p.alpha()) * x.d);
}

Slope mu_f(const ChernClass& x) {
    if (x.n.is_zero()) return Slope::infinite();
    return Slope::finite(x.d / x.n);
}

Slope mu_theta_mf(const ChernClass& x, const SurfaceParams& p) {
    if (x.n.is_zero()) return Slope::infinite();
    return Slope::finite((x.c + p.m() * x.d) / x.n);
}

Slope twisted_slope(const ChernClass& x, const SurfaceParams& p) {
    if (x.n.is_zero()) return Slope::infinite();
    const Rational a = p.twist_a();
    const Rational b = p.twist_b();
    const Rational half_e = p.e() / Rational(2);
    return Slope::finite((a * (x.c - half_e * x.n) + (a * p.m() + b) * x.d) / x.n);
}

HNProfile::HNProfile(std::vector<ChernClass> factors, const ChernClass& total)
    : factors_(std::move(factors)), total_(total) {
    if (factors_.empty()) throw PreconditionError("HN profile needs at least one factor");
    ChernClass sum;
    for (const auto& f : factors_) sum += f;
    if (sum != total_)
        throw PreconditionError("HN factors sum to " + sum.str() + " but the total class is " + total_.str());
}

bool satisfies_Fl(const ChernClass& a, const SurfaceParams& p) {
    const Slope zero = Slope::finite(Rational(0));
    const Slope f = mu_f(a);
    if (f < zero) return true;
    return f == zero && mu_theta_mf(a, p) <= zero;
}

bool satisfies_Tl(const ChernClass& a, const SurfaceParams& p) {
    const Slope zero = Slope::finite(Rational(0));
    const Slope f = mu_f(a);
    if (f > zero) return true;
    return f == zero && mu_theta_mf(a, p) > zero;
}

namespace {

template <typename Pred>
MembershipCheck first_violation(const HNProfile& profile, Pred pred) {
    const auto& fs = profile.factors();
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (!pred(fs[i])) return {i};
    return {};
}

} // namespace

MembershipCheck check_Fl_conditions(const HNProfile& profile, const SurfaceParams& p) {
    return first_violation(profile, [&](const ChernClass& a) { return satisfies_Fl(a, p); });
}

MembershipCheck check_Tl_conditions(const HNProfile& profile, const SurfaceParams& p) {
    return first_violation(profile, [&](const ChernClass& a) { return satisfies_Tl(a, p); });
}

} // namespace weierstab
