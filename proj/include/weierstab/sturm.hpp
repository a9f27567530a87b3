#pragma once

#include <vector>

#include "weierstab/laurent.hpp"
#include "weierstab/polynomial.hpp"
#include "weierstab/rational.hpp"

namespace weierstab {

/// Sturm chain of a square-free polynomial, with each remainder replaced by
/// its primitive part to keep coefficients small.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& square_free);

    const std::vector<Polynomial>& chain() const noexcept { return chain_; }
    const Polynomial& base() const { return chain_.front(); }

    /// Sign variations of the chain at x, zeros skipped.
    int variations(const Rational& x) const;

    /// Number of distinct real roots in the open interval (a, b), a < b.
    int count_roots(const Rational& a, const Rational& b) const;

private:
    std::vector<Polynomial> chain_;
};

/// A closed interval [lo, hi] holding exactly one distinct real root.
/// lo == hi when the root is rational and was hit exactly.
struct RootInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }

    friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

inline Rational default_isolation_tolerance() { return pow2_inverse(20); }

/// Isolates every distinct real root of p in the open interval (lo, hi).
/// Works on the square-free decomposition, so each interval carries the
/// multiplicity of its root. Output is sorted, pairwise disjoint, each
/// interval no wider than tolerance, and no endpoint of a non-degenerate
/// interval is itself a root of p.
/// Throws PreconditionError if p is zero or lo >= hi.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                             const Rational& tolerance = default_isolation_tolerance());

/// Laurent front end: requires 0 < lo < hi so that clearing negative powers
/// of u leaves the root set in (lo, hi) unchanged.
std::vector<RootInterval> sturm_isolate_roots(const LaurentPoly& p, const Rational& lo, const Rational& hi,
                                              const Rational& tolerance = default_isolation_tolerance());

} // namespace weierstab
