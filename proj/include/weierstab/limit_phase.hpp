#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weierstab/central_charge.hpp"
#include "weierstab/laurent.hpp"
#include "weierstab/surface.hpp"

namespace weierstab {

enum class PhaseOrder { Precedes, EventuallyEqual, Succeeds };

const char* to_string(PhaseOrder o);

/// Outcome of comparing phi(x) with phi(y) as v -> infinity on the curve.
///
/// cross = Re Z(x) Im Z(y) - Im Z(x) Re Z(y) = |Z(x)||Z(y)| sin(pi(phi(y) - phi(x))),
/// so phi(x) < phi(y) for all small u > 0 exactly when cross is eventually
/// positive. EventuallyEqual means cross is identically zero: both charges
/// sit on one ray for every u, not merely in the limit.
struct PhaseVerdict {
    PhaseOrder ordering = PhaseOrder::EventuallyEqual;
    LaurentPoly cross;
    std::optional<LaurentTerm> witness;

    friend bool operator==(const PhaseVerdict&, const PhaseVerdict&) = default;
};

/// Raised when a class handed to a phase computation has no phase.
class InadmissibleClass : public Error {
public:
    InadmissibleClass(std::string argument, Admissibility status);

    const std::string& argument() const noexcept { return argument_; }
    Admissibility status() const noexcept { return status_; }

private:
    std::string argument_;
    Admissibility status_;
};

LaurentPoly cross_term(const CurveCharge& left, const CurveCharge& right);

PhaseVerdict compare_charges(const CurveCharge& left, const CurveCharge& right);

/// Throws InadmissibleClass (argument "left" or "right") when either charge
/// is zero or leaves H for small u.
PhaseVerdict compare_phases(const ChernClass& x, const ChernClass& y, const SurfaceParams& p);

struct LimitPhase {
    enum class Value { LimitZero, Half, LimitOne };

    Value value = Value::Half;
    /// True when the phase equals the limit for every small u, false when it
    /// only tends to it.
    bool attained = false;

    Rational as_rational() const;
    friend bool operator==(const LimitPhase&, const LimitPhase&) = default;
};

/// Limit of phi(x) as u -> 0+, decided from the lowest terms of Re and Im
/// on the curve. Throws InadmissibleClass for zero or inadmissible classes.
LimitPhase classify_limit_phase(const ChernClass& x, const SurfaceParams& p);

struct ScanEntry {
    ChernClass candidate;
    std::optional<PhaseVerdict> verdict;
    std::optional<std::string> error;

    /// Candidate phase is not eventually below the target's phase.
    bool destabilizes() const { return verdict && verdict->ordering != PhaseOrder::Precedes; }
};

struct TheoremAReport {
    ChernClass source;
    ChernClass target; // ch(Phi source [1])
    Rational twisted_degree;
    Admissibility target_admissibility = Admissibility::Zero;
    bool target_real_part_negative = false;
    std::vector<ScanEntry> entries;
};

/// For a torsion-free sheaf class x (n != 0), compares each candidate
/// subobject class against F = Phi x[1]. The caller decides which candidates
/// are realised by actual subobjects; per-candidate failures are recorded,
/// not thrown. Entries follow the candidate order.
TheoremAReport theorem_A_scan(const ChernClass& x, const std::vector<ChernClass>& candidates, const SurfaceParams& p);

} // namespace weierstab
