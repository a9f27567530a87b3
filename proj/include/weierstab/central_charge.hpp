#pragma once

#include <utility>

#include "weierstab/bipoly.hpp"
#include "weierstab/laurent.hpp"
#include "weierstab/surface.hpp"

namespace weierstab {

/// Z_omega(x) for omega = u(Theta + m f) + v f, as exact polynomials in (u, v):
///   Re Z = -s + ((m - e/2)u^2 + uv) n
///   Im Z = u(c + m d) + v d
struct ChargeExpr {
    BiPoly real;
    BiPoly imag;

    friend bool operator==(const ChargeExpr&, const ChargeExpr&) = default;
};

/// A charge restricted to the polarisation curve
/// m + alpha = (m - e/2)u^2 + uv + e, parametrised by u > 0.
/// As v -> infinity along the curve, u -> 0+.
struct CurveCharge {
    LaurentPoly real;
    LaurentPoly imag;

    bool is_zero() const { return real.is_zero() && imag.is_zero(); }
    friend bool operator==(const CurveCharge&, const CurveCharge&) = default;
};

/// Exact complex number.
struct ExactComplex {
    Rational real;
    Rational imag;
    friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
};

ChargeExpr build_charge(const ChernClass& x, const SurfaceParams& p);

/// v(u) = (m + alpha - e)/u - (m - e/2)u, the exact solution of the curve
/// equation for v.
LaurentPoly curve_v_of_u(const SurfaceParams& p);

/// Substitutes v = v(u). Throws ParameterError if m + alpha - e <= 0.
CurveCharge substitute_curve(const ChargeExpr& z, const SurfaceParams& p);

/// Convenience: substitute_curve(build_charge(x, p), p).
CurveCharge curve_charge(const ChernClass& x, const SurfaceParams& p);

ExactComplex evaluate(const ChargeExpr& z, const Rational& u, const Rational& v);
ExactComplex evaluate(const CurveCharge& z, const Rational& u);

/// twisted_ch1_pair(x) + (lambda/alpha) Re Z(Phi x[1]) on the curve.
/// Identically zero for every class and admissible parameters.
LaurentPoly twist_identity_residual(const ChernClass& x, const SurfaceParams& p);

enum class Admissibility { InUpperHalfPlane, Zero, Inadmissible };

const char* to_string(Admissibility a);

/// Whether Z(u) lies in H = {r e^{i pi phi} : r > 0, phi in (0, 1]} for all
/// sufficiently small u > 0.
Admissibility admissibility(const CurveCharge& cc);

} // namespace weierstab
