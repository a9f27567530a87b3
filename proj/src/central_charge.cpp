#include "weierstab/central_charge.hpp"

#include "weierstab/fourier_mukai.hpp"

namespace weierstab {

ChargeExpr build_charge(const ChernClass& x, const SurfaceParams& p) {
    ChargeExpr z;
    const Rational half_e = p.e() / Rational(2);
    z.real.add_term(0, 0, -x.s);
    z.real.add_term(2, 0, (p.m() - half_e) * x.n);
    z.real.add_term(1, 1, x.n);
    z.imag.add_term(1, 0, x.c + p.m() * x.d);
    z.imag.add_term(0, 1, x.d);
    return z;
}

LaurentPoly curve_v_of_u(const SurfaceParams& p) {
    LaurentPoly v;
    v.add_term(-1, p.curve_constant());
    v.add_term(1, -(p.m() - p.e() / Rational(2)));
    return v;
}

CurveCharge substitute_curve(const ChargeExpr& z, const SurfaceParams& p) {
    if (p.curve_constant().sign() <= 0)
        throw ParameterError("m + alpha - e must be positive for the curve to reach v -> infinity");
    const LaurentPoly v = curve_v_of_u(p);
    return {z.real.substitute_v(v), z.imag.substitute_v(v)};
}

CurveCharge curve_charge(const ChernClass& x, const SurfaceParams& p) { return substitute_curve(build_charge(x, p), p); }

ExactComplex evaluate(const ChargeExpr& z, const Rational& u, const Rational& v) {
    return {z.real.evaluate(u, v), z.imag.evaluate(u, v)};
}

ExactComplex evaluate(const CurveCharge& z, const Rational& u) { return {z.real.evaluate(u), z.imag.evaluate(u)}; }

LaurentPoly twist_identity_residual(const ChernClass& x, const SurfaceParams& p) {
    const CurveCharge shifted = curve_charge(phi_of_shifted_sheaf_charge_data(x, p), p);
    LaurentPoly residual = LaurentPoly::constant(twisted_ch1_pair(x, p));
    residual += shifted.real * p.twist_a();
    return residual;
}

const char* to_string(Admissibility a) {
    switch (a) {
    case Admissibility::InUpperHalfPlane: return "InUpperHalfPlane";
    case Admissibility::Zero: return "Zero";
    case Admissibility::Inadmissible: return "Inadmissible";
    }
    return "?";
}

Admissibility admissibility(const CurveCharge& cc) {
    const Sign im = cc.imag.sign_at_zero_plus();
    if (im == Sign::Positive) return Admissibility::InUpperHalfPlane;
    if (im == Sign::Negative) return Admissibility::Inadmissible;
    const Sign re = cc.real.sign_at_zero_plus();
    if (re == Sign::Zero) return Admissibility::Zero;
    return re == Sign::Negative ? Admissibility::InUpperHalfPlane : Admissibility::Inadmissible;
}

} // namespace weierstab
