#include <mpfr.h>

#include <sstream>

#include "weierstab/central_charge.hpp"
#include "weierstab/checks.hpp"
#include "weierstab/limit_phase.hpp"
#include "weierstab/wall_scan.hpp"

namespace weierstab::checks {

namespace {

constexpr mpfr_prec_t oracle_precision = 256;

// RAII holder for an mpfr_t at the oracle precision.
class Real {
public:
    Real() { mpfr_init2(v_, oracle_precision); }
    explicit Real(const Rational& q) : Real() { mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN); }
    explicit Real(double d) : Real() { mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(const Real& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }

private:
    mpfr_t v_;
};

// Phase in (-1, 1] of Z_omega(x) at omega = u(Theta + m f) + v f, with u
// the positive solution of (m - e/2)u^2 + v u - (m + alpha - e) = 0.
// Evaluated from the Chern data directly, without the Laurent machinery.
Real float_phase(const ChernClass& x, const SurfaceParams& p, const Real& v) {
    const Real q(p.m() - p.e() / Rational(2));
    const Real k(p.curve_constant());
    Real disc = v * v + Real(4.0) * q * k;
    mpfr_sqrt(disc.get(), disc.get(), MPFR_RNDN);
    const Real u = Real(2.0) * k / (v + disc);

    const Real re = Real(-x.s) + (q * u * u + u * v) * Real(x.n);
    const Real im = u * (Real(x.c) + Real(p.m()) * Real(x.d)) + v * Real(x.d);
    Real phase;
    mpfr_atan2(phase.get(), im.get(), re.get(), MPFR_RNDN);
    Real pi;
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    return phase / pi;
}

// Sign of phi(y) - phi(x) at the given v, or 0 when the difference is below
// the oracle's resolution.
int float_order(const ChernClass& x, const ChernClass& y, const SurfaceParams& p, const Real& v) {
    const Real diff = float_phase(y, p, v) - float_phase(x, p, v);
    Real tiny;
    mpfr_set_ui_2exp(tiny.get(), 1, -200, MPFR_RNDN);
    if (mpfr_cmpabs(diff.get(), tiny.get()) <= 0) return 0;
    return mpfr_sgn(diff.get());
}

int expected_sign(PhaseOrder o) { return o == PhaseOrder::Precedes ? 1 : o == PhaseOrder::Succeeds ? -1 : 0; }

} // namespace

SuiteResult eventual_oracle(std::uint64_t seed, const SuiteSizes& sizes) {
    SuiteResult r{.name = "eventual_oracle"};
    RandomSource rng(seed ^ 0xd6e8feb86659fd93ULL);
    const Real v_small(1e6);
    const Real v_large(1e9);
    const Rational decisive_floor(1, 1'000'000);

    for (std::size_t i = 0; i < sizes.oracle_pairs; ++i) {
        const SurfaceParams p = rng.params();
        const ChernClass x = rng.admissible_class(p);
        // One pair in ten lies on a common ray.
        const ChernClass y = (i % 10 == 9) ? rng.positive_rational(9, 4) * x : rng.admissible_class(p);
        ++r.cases;

        const PhaseVerdict verdict = compare_phases(x, y, p);
        if (verdict.witness && verdict.witness->coefficient.abs() < decisive_floor) {
            ++r.excluded;
            if (r.notes.size() < 8)
                r.notes.push_back("excluded " + x.str() + " vs " + y.str() + ": decisive coefficient " +
                                  verdict.witness->coefficient.str());
            continue;
        }
        const int want = expected_sign(verdict.ordering);
        for (const Real* v : {&v_small, &v_large}) {
            const int got = float_order(x, y, p, *v);
            if (got != want) {
                std::ostringstream os;
                os << x.str() << " vs " << y.str() << ": exact " << to_string(verdict.ordering) << ", float sign " << got
                   << " at v=" << mpfr_get_d(v->get(), MPFR_RNDN);
                r.fail(os.str());
            }
        }
    }
    // Exclusions must stay under 1% of pairs.
    r.side_condition = r.excluded * 100 < r.cases;
    return r;
}

namespace {

// cross(u) computed from the Chern data at (u, v(u)), exact.
Rational sampled_cross(const ChernClass& x, const ChernClass& y, const SurfaceParams& p, const Rational& u) {
    const Rational q = p.m() - p.e() / Rational(2);
    const Rational v = p.curve_constant() / u - q * u;
    const auto re = [&](const ChernClass& a) { return -a.s + (q * u * u + u * v) * a.n; };
    const auto im = [&](const ChernClass& a) { return u * (a.c + p.m() * a.d) + v * a.d; };
    return re(x) * im(y) - im(x) * re(y);
}

} // namespace

SuiteResult wall_oracle(std::uint64_t seed, const SuiteSizes& sizes) {
    SuiteResult r{.name = "wall_oracle"};
    RandomSource rng(seed ^ 0xbf58476d1ce4e5b9ULL);
    constexpr long grid = 10'000;
    std::size_t pairs_with_walls = 0;

    while (r.cases < sizes.wall_pairs) {
        const SurfaceParams p = rng.params();
        const ChernClass x = rng.chern_class(6, 3);
        const ChernClass y = rng.chern_class(6, 3);
        if (x.is_zero() || y.is_zero()) continue;
        const WallReport report = find_walls(x, y, p, Rational(1));
        if (report.cross.is_zero()) continue;
        ++r.cases;

        const int degree = report.cross.highest_exponent() - report.cross.lowest_exponent();
        if (degree > 6) r.fail("cross polynomial of degree " + std::to_string(degree) + " for " + x.str() + ", " + y.str());

        // Dense grid on (0, 1): i / grid for i = 1 .. grid - 1, plus points
        // 1e-9 inside each end.
        std::vector<Rational> points;
        points.reserve(grid + 1);
        points.emplace_back(1, 1'000'000'000);
        for (long i = 1; i < grid; ++i) points.emplace_back(i, grid);
        points.push_back(Rational(1) - Rational(1, 1'000'000'000));

        int sign_changes = 0;
        int previous = 0;
        for (const auto& u : points) {
            const int s = sampled_cross(x, y, p, u).sign();
            if (s == 0) {
                ++sign_changes; // a sampled exact root
                previous = 0;
                continue;
            }
            if (previous != 0 && s != previous) ++sign_changes;
            previous = s;
        }

        int odd_roots = 0;
        for (const auto& w : report.walls) {
            const bool odd = w.u.multiplicity % 2 == 1;
            if (odd) ++odd_roots;
            const int lo = sampled_cross(x, y, p, w.u.lo).sign();
            const int hi = sampled_cross(x, y, p, w.u.hi).sign();
            if (w.u.exact()) {
                if (lo != 0) r.fail("exact wall " + w.u.lo.str() + " is not a root");
            } else if (odd ? lo * hi >= 0 : (lo * hi <= 0)) {
                r.fail("wall (" + w.u.lo.str() + ", " + w.u.hi.str() + ") lacks a sign-change or even-multiplicity certificate");
            }
        }
        if (!report.walls.empty()) ++pairs_with_walls;
        if (odd_roots != sign_changes)
            r.fail(x.str() + " vs " + y.str() + ": Sturm found " + std::to_string(odd_roots) +
                   " odd roots, sampling found " + std::to_string(sign_changes) + " sign changes");
    }
    if (r.notes.size() < 8) r.notes.push_back(std::to_string(pairs_with_walls) + " pairs had at least one wall");
    return r;
}

} // namespace weierstab::checks
