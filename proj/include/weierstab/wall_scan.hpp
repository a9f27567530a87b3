#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weierstab/central_charge.hpp"
#include "weierstab/limit_phase.hpp"
#include "weierstab/sturm.hpp"
#include "weierstab/surface.hpp"

namespace weierstab {

/// A finite-parameter wall: a u-value on the curve where the two charges
/// are aligned, with the corresponding range of v.
struct Wall {
    RootInterval u;
    Rational v_lo;
    Rational v_hi;
    /// v(u) is monotone on the u-interval, so [v_lo, v_hi] is its exact image.
    /// Otherwise v_lo is a rational lower bound for the minimum of v.
    bool v_monotone = true;

    friend bool operator==(const Wall&, const Wall&) = default;
};

struct WallReport {
    ChernClass left;
    ChernClass right;
    Admissibility left_admissibility = Admissibility::Zero;
    Admissibility right_admissibility = Admissibility::Zero;
    LaurentPoly cross;
    std::vector<Wall> walls;            // sorted by increasing u, disjoint
    std::optional<PhaseVerdict> eventual; // absent when either side is inadmissible
    std::vector<std::string> flags;     // zero_candidate, equals_class, aligned, inadmissible_left, inadmissible_right

    friend bool operator==(const WallReport&, const WallReport&) = default;
};

/// Isolates the zeros of cross(u) in (0, u_max). An identically zero cross
/// term yields no walls, the "aligned" flag and an EventuallyEqual verdict.
/// Throws ParameterError for u_max <= 0 and PreconditionError for a zero class.
WallReport find_walls(const ChernClass& x, const ChernClass& y, const SurfaceParams& p, const Rational& u_max,
                      const Rational& tolerance = default_isolation_tolerance());

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    std::uint64_t size() const { return hi < lo ? 0 : static_cast<std::uint64_t>(hi - lo) + 1; }
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Integer box of candidate classes (n, d, c, 2s); ch2 is quantised in halves.
struct CandidateBox {
    IntRange n;
    IntRange d;
    IntRange c;
    IntRange s2;

    /// Parses "n=0..0,d=0..0,c=0..2,s2=-2..2". All four keys are required.
    static CandidateBox parse(std::string_view text);

    /// Candidate count, saturating at UINT64_MAX.
    std::uint64_t count() const;
    friend bool operator==(const CandidateBox&, const CandidateBox&) = default;
};

class CapExceeded : public Error {
public:
    CapExceeded(std::uint64_t cap, std::uint64_t requested);
    std::uint64_t cap() const noexcept { return cap_; }
    std::uint64_t requested() const noexcept { return requested_; }

private:
    std::uint64_t cap_;
    std::uint64_t requested_;
};

inline constexpr std::uint64_t default_candidate_cap = 1'000'000;

struct GridScanOptions {
    Rational u_max = Rational(1);
    std::uint64_t cap = default_candidate_cap;
    unsigned threads = 0; // 0: hardware concurrency
    Rational tolerance = default_isolation_tolerance();
};

/// Runs find_walls for every candidate in the box against x. Reports are in
/// lexicographic candidate order whatever the thread count.
std::vector<WallReport> wall_grid_scan(const ChernClass& x, const CandidateBox& box, const SurfaceParams& p,
                                       const GridScanOptions& options = {});

} // namespace weierstab
