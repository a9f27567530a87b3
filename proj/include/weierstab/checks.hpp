#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weierstab/rational.hpp"
#include "weierstab/surface.hpp"

namespace weierstab::checks {

// Randomized verification suites shared by `weier-stab verify` and the
// acceptance test binary. The floating-point and sampling oracles here are
// deliberately independent of the exact code paths they check.

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::size_t excluded = 0;
    /// Extra pass condition beyond zero failures (e.g. exclusion rate).
    bool side_condition = true;
    std::vector<std::string> notes{};

    bool passed() const { return cases > 0 && failures == 0 && side_condition; }
    void fail(std::string note);
};

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi);
    /// numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational rational(std::int64_t max_num, std::int64_t max_den);
    Rational positive_rational(std::int64_t max_num, std::int64_t max_den);
    ChernClass chern_class(std::int64_t max_num = 12, std::int64_t max_den = 4);
    /// Random class whose charge is in the upper half plane as u -> 0+.
    ChernClass admissible_class(const SurfaceParams& p);
    SurfaceParams params();

private:
    std::mt19937_64 engine_;
};

struct SuiteSizes {
    std::size_t classes = 1000;
    std::size_t param_sets = 10;
    std::size_t oracle_pairs = 1000;
    std::size_t wall_pairs = 100;
    std::size_t theorem_classes = 100;
};

/// phi_hat(phi(x)) = -x and phi(phi_hat(x)) = -x, exactly.
SuiteResult roundtrip_negation(std::uint64_t seed, const SuiteSizes& sizes);

/// ch0(phi x) = d and f.ch1(phi x) = -n, plus the Theta + k f pairing
/// cross-check at two values of k.
SuiteResult fiber_degree_laws(std::uint64_t seed, const SuiteSizes& sizes);

/// twist_identity_residual is the zero Laurent polynomial.
SuiteResult twist_identity(std::uint64_t seed, const SuiteSizes& sizes);

/// The six numerical shapes of the limit-phase case analysis, under the
/// default parameters and every random parameter set.
SuiteResult phase_table(std::uint64_t seed, const SuiteSizes& sizes);

/// compare_phases against atan2 phases in 256-bit MPFR at v = 1e6 and 1e9.
/// Pairs whose decisive coefficient is below 1e-6 in magnitude are excluded
/// and must be under 1% of the total.
SuiteResult eventual_oracle(std::uint64_t seed, const SuiteSizes& sizes);

/// find_walls on (0, 1) against sign changes on a 10^4-point grid, with
/// per-interval sign-change or multiplicity certificates.
SuiteResult wall_oracle(std::uint64_t seed, const SuiteSizes& sizes);

/// Twisted degree > 0 gives Precedes against (0,0,1,0); = 0 gives EventuallyEqual.
SuiteResult theorem_a(std::uint64_t seed, const SuiteSizes& sizes);

/// Antisymmetry, positive scale invariance, transitivity and agreement of
/// classify_limit_phase with compare_phases.
SuiteResult order_laws(std::uint64_t seed, const SuiteSizes& sizes);

std::vector<SuiteResult> run_all(std::uint64_t seed, const SuiteSizes& sizes);

/// One line per suite: "<name> PASS|FAIL cases=<n> failures=<n> excluded=<n>".
std::string render(const std::vector<SuiteResult>& results);

} // namespace weierstab::checks
