#include "weierstab/wall_scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <limits>
#include <map>
#include <thread>

namespace weierstab {

namespace {

Rational v_at(const SurfaceParams& p, const Rational& u) {
    return p.curve_constant() / u - (p.m() - p.e() / Rational(2)) * u;
}

// v'(u) = -K/u^2 - (m - e/2), increasing in u.
int dv_sign(const SurfaceParams& p, const Rational& u) {
    return (-(p.curve_constant() / (u * u)) - (p.m() - p.e() / Rational(2))).sign();
}

Wall make_wall(const Polynomial& cleared, RootInterval root, const SurfaceParams& p) {
    if (!root.exact()) {
        // Shrink until v is monotone on the interval, within a bounded budget.
        for (int i = 0; i < 64 && dv_sign(p, root.lo) * dv_sign(p, root.hi) < 0; ++i) {
            auto refined = isolate_real_roots(cleared, root.lo, root.hi, root.width() / Rational(2));
            if (refined.size() != 1) break;
            refined.front().multiplicity = root.multiplicity;
            root = std::move(refined.front());
        }
    }
    Wall w;
    const Rational va = v_at(p, root.lo);
    const Rational vb = v_at(p, root.hi);
    w.v_monotone = dv_sign(p, root.lo) * dv_sign(p, root.hi) >= 0;
    if (w.v_monotone) {
        w.v_lo = std::min(va, vb);
        w.v_hi = std::max(va, vb);
    } else {
        // Only possible when m - e/2 < 0: v >= K/hi + (e/2 - m) lo on the interval.
        w.v_lo = p.curve_constant() / root.hi + (p.e() / Rational(2) - p.m()) * root.lo;
        w.v_hi = std::max(va, vb);
    }
    w.u = std::move(root);
    return w;
}

} // namespace

WallReport find_walls(const ChernClass& x, const ChernClass& y, const SurfaceParams& p, const Rational& u_max,
                      const Rational& tolerance) {
    if (u_max.sign() <= 0) throw ParameterError("u_max must be positive (got " + u_max.str() + ")");
    if (x.is_zero() || y.is_zero()) throw PreconditionError("wall search needs two nonzero classes");

    WallReport r;
    r.left = x;
    r.right = y;
    const CurveCharge zx = curve_charge(x, p);
    const CurveCharge zy = curve_charge(y, p);
    r.left_admissibility = admissibility(zx);
    r.right_admissibility = admissibility(zy);
    r.cross = cross_term(zx, zy);

    if (r.left_admissibility != Admissibility::InUpperHalfPlane) r.flags.emplace_back("inadmissible_left");
    if (r.right_admissibility != Admissibility::InUpperHalfPlane) r.flags.emplace_back("inadmissible_right");

    if (r.cross.is_zero()) {
        r.flags.emplace_back("aligned");
        r.eventual = PhaseVerdict{PhaseOrder::EventuallyEqual, {}, std::nullopt};
        return r;
    }

    if (r.left_admissibility == Admissibility::InUpperHalfPlane &&
        r.right_admissibility == Admissibility::InUpperHalfPlane)
        r.eventual = compare_charges(zx, zy);

    // Clearing the lowest power of u leaves the roots in u > 0 unchanged and
    // makes u = 0 a non-root, so (0, u_max) can be searched directly.
    const Polynomial cleared = r.cross.cleared().first;
    for (auto& root : isolate_real_roots(cleared, Rational(0), u_max, tolerance))
        r.walls.push_back(make_wall(cleared, std::move(root), p));
    return r;
}

CapExceeded::CapExceeded(std::uint64_t cap, std::uint64_t requested)
    : Error("cap_exceeded", "candidate box holds " + std::to_string(requested) + " classes, above the cap of " +
                                std::to_string(cap)),
      cap_(cap), requested_(requested) {}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view key) {
    std::int64_t v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty())
        throw ParseError("box bound for " + std::string(key) + " is not an integer: \"" + std::string(s) + "\"",
                         std::string(key));
    return v;
}

} // namespace

CandidateBox CandidateBox::parse(std::string_view text) {
    std::map<std::string, IntRange, std::less<>> ranges;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("box entry without '=': \"" + std::string(item) + "\"");
        const std::string_view key = item.substr(0, eq);
        const std::string_view range = item.substr(eq + 1);
        if (key != "n" && key != "d" && key != "c" && key != "s2")
            throw ParseError("unknown box key \"" + std::string(key) + "\" (expected n, d, c, s2)", std::string(key));
        const auto dots = range.find("..");
        if (dots == std::string_view::npos)
            throw ParseError("box range must look like lo..hi: \"" + std::string(range) + "\"", std::string(key));
        ranges[std::string(key)] = {parse_int(range.substr(0, dots), key), parse_int(range.substr(dots + 2), key)};
    }
    CandidateBox box;
    for (const char* key : {"n", "d", "c", "s2"}) {
        auto it = ranges.find(key);
        if (it == ranges.end()) throw ParseError(std::string("box is missing key ") + key, key);
    }
    box.n = ranges["n"];
    box.d = ranges["d"];
    box.c = ranges["c"];
    box.s2 = ranges["s2"];
    return box;
}

std::uint64_t CandidateBox::count() const {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (const IntRange* r : {&n, &d, &c, &s2}) {
        const std::uint64_t k = r->size();
        if (k == 0) return 0;
        if (total > max / k) return max;
        total *= k;
    }
    return total;
}

std::vector<WallReport> wall_grid_scan(const ChernClass& x, const CandidateBox& box, const SurfaceParams& p,
                                       const GridScanOptions& options) {
    if (x.is_zero()) throw PreconditionError("wall grid scan needs a nonzero class");
    if (options.u_max.sign() <= 0) throw ParameterError("u_max must be positive (got " + options.u_max.str() + ")");
    const std::uint64_t count = box.count();
    if (count > options.cap) throw CapExceeded(options.cap, count);

    // Lexicographic enumeration of (n, d, c, s2) is lexicographic on classes.
    std::vector<ChernClass> candidates;
    candidates.reserve(count);
    for (auto n = box.n.lo; n <= box.n.hi; ++n)
        for (auto d = box.d.lo; d <= box.d.hi; ++d)
            for (auto c = box.c.lo; c <= box.c.hi; ++c)
                for (auto s2 = box.s2.lo; s2 <= box.s2.hi; ++s2)
                    candidates.push_back({Rational(n), Rational(d), Rational(c), Rational(s2, 2)});

    std::vector<WallReport> out(candidates.size());
    auto work = [&](std::size_t i) {
        const ChernClass& g = candidates[i];
        if (g.is_zero()) {
            WallReport r;
            r.left = x;
            r.right = g;
            r.flags.emplace_back("zero_candidate");
            out[i] = std::move(r);
            return;
        }
        WallReport r = find_walls(x, g, p, options.u_max, options.tolerance);
        if (g == x) r.flags.insert(r.flags.begin(), "equals_class");
        out[i] = std::move(r);
    };

    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, candidates.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i) work(i);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < candidates.size(); i = next++) work(i);
            } catch (...) {
                failures[t] = std::current_exception();
                next = candidates.size();
            }
        });
    }
    pool.clear(); // joins
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return out;
}

} // namespace weierstab
