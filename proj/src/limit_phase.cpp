#include "weierstab/limit_phase.hpp"

#include <stdexcept>

#include "weierstab/fourier_mukai.hpp"

namespace weierstab {

const char* to_string(PhaseOrder o) {
    switch (o) {
    case PhaseOrder::Precedes: return "Precedes";
    case PhaseOrder::EventuallyEqual: return "EventuallyEqual";
    case PhaseOrder::Succeeds: return "Succeeds";
    }
    return "?";
}

InadmissibleClass::InadmissibleClass(std::string argument, Admissibility status)
    : Error("inadmissible_class", argument + " class " +
                                      (status == Admissibility::Zero ? std::string("has zero central charge")
                                                                     : std::string("is not in the upper half plane "
                                                                                   "as v -> infinity"))),
      argument_(std::move(argument)), status_(status) {}

LaurentPoly cross_term(const CurveCharge& left, const CurveCharge& right) {
    return left.real * right.imag - left.imag * right.real;
}

PhaseVerdict compare_charges(const CurveCharge& left, const CurveCharge& right) {
    PhaseVerdict v;
    v.cross = cross_term(left, right);
    switch (v.cross.sign_at_zero_plus()) {
    case Sign::Positive: v.ordering = PhaseOrder::Precedes; break;
    case Sign::Negative: v.ordering = PhaseOrder::Succeeds; break;
    case Sign::Zero: v.ordering = PhaseOrder::EventuallyEqual; break;
    }
    if (!v.cross.is_zero()) v.witness = v.cross.lowest_term();
    return v;
}

namespace {

CurveCharge admissible_charge(const ChernClass& x, const SurfaceParams& p, const char* which) {
    CurveCharge z = curve_charge(x, p);
    const Admissibility a = admissibility(z);
    if (a != Admissibility::InUpperHalfPlane) throw InadmissibleClass(which, a);
    return z;
}

} // namespace

PhaseVerdict compare_phases(const ChernClass& x, const ChernClass& y, const SurfaceParams& p) {
    const CurveCharge left = admissible_charge(x, p, "left");
    const CurveCharge right = admissible_charge(y, p, "right");
    return compare_charges(left, right);
}

Rational LimitPhase::as_rational() const {
    switch (value) {
    case Value::LimitZero: return Rational(0);
    case Value::Half: return Rational(1, 2);
    case Value::LimitOne: return Rational(1);
    }
    return Rational(0);
}

LimitPhase classify_limit_phase(const ChernClass& x, const SurfaceParams& p) {
    const CurveCharge z = admissible_charge(x, p, "class");
    using V = LimitPhase::Value;

    // Im identically zero: admissible only on the negative real axis.
    if (z.imag.is_zero()) return {V::LimitOne, true};
    // Re identically zero: on the positive imaginary axis.
    if (z.real.is_zero()) return {V::Half, true};

    // Both nonzero, Im eventually positive. The smaller exponent dominates.
    const int re_order = z.real.lowest_exponent();
    const int im_order = z.imag.lowest_exponent();
    if (im_order < re_order) return {V::Half, false};
    if (re_order < im_order) {
        return z.real.sign_at_zero_plus() == Sign::Negative ? LimitPhase{V::LimitOne, false}
                                                            : LimitPhase{V::LimitZero, false};
    }
    // Re is constant and Im has exponents -1 and 1 only, so equal orders
    // would need Im to have a constant term.
    throw std::logic_error("charge with equal leading orders; limit phase is not one of 0, 1/2, 1");
}

TheoremAReport theorem_A_scan(const ChernClass& x, const std::vector<ChernClass>& candidates, const SurfaceParams& p) {
    if (x.n.is_zero()) throw PreconditionError("theorem A scan needs a class of nonzero rank");

    TheoremAReport report;
    report.source = x;
    report.target = phi_of_shifted_sheaf_charge_data(x, p);
    report.twisted_degree = twisted_ch1_pair(x, p);
    const CurveCharge target = curve_charge(report.target, p);
    report.target_admissibility = admissibility(target);
    report.target_real_part_negative = target.real.sign_at_zero_plus() == Sign::Negative;

    report.entries.reserve(candidates.size());
    for (const auto& g : candidates) {
        ScanEntry entry{g, std::nullopt, std::nullopt};
        if (report.target_admissibility != Admissibility::InUpperHalfPlane) {
            entry.error = std::string("target Phi E[1] is ") + to_string(report.target_admissibility);
        } else {
            const CurveCharge cz = curve_charge(g, p);
            const Admissibility a = admissibility(cz);
            if (a == Admissibility::InUpperHalfPlane) {
                entry.verdict = compare_charges(cz, target);
            } else {
                entry.error = std::string("candidate is ") + to_string(a);
            }
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace weierstab
