#include "support.hpp"
#include "weierstab/central_charge.hpp"
#include "weierstab/wall_scan.hpp"

using namespace weierstab;
using test_support::default_params;
using test_support::params;
using test_support::q;

namespace {

// cross(u) straight from the Chern data at (u, v(u)).
Rational sampled_cross(const ChernClass& x, const ChernClass& y, const SurfaceParams& p, const Rational& u) {
    const Rational qq = p.m() - p.e() / Rational(2);
    const Rational v = p.curve_constant() / u - qq * u;
    const auto re = [&](const ChernClass& a) { return -a.s + (qq * u * u + u * v) * a.n; };
    const auto im = [&](const ChernClass& a) { return u * (a.c + p.m() * a.d) + v * a.d; };
    return re(x) * im(y) - im(x) * re(y);
}

int sampled_changes(const ChernClass& x, const ChernClass& y, const SurfaceParams& p, const Rational& u_max) {
    int changes = 0, prev = 0;
    for (int i = 1; i < 10'000; ++i) {
        const int s = sampled_cross(x, y, p, u_max * Rational(i, 10'000)).sign();
        if (s == 0) {
            ++changes;
            prev = 0;
            continue;
        }
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

TEST_CASE("find_walls: proportional classes") {
    const auto r = find_walls({0, 0, 0, 1}, {0, 0, 0, 2}, default_params(), Rational(1));
    CHECK(r.walls.empty());
    REQUIRE(r.eventual.has_value());
    CHECK(r.eventual->ordering == PhaseOrder::EventuallyEqual);
    CHECK(std::find(r.flags.begin(), r.flags.end(), "aligned") != r.flags.end());
}

TEST_CASE("find_walls: two charges on the imaginary axis") {
    const auto r = find_walls({0, 1, 0, 0}, {0, 0, 1, 0}, params("0", "2", "1", "1"), Rational(1));
    CHECK(r.cross.is_zero());
    CHECK(r.walls.empty());
    REQUIRE(r.eventual.has_value());
    CHECK(r.eventual->ordering == PhaseOrder::EventuallyEqual);
}

TEST_CASE("find_walls: (1,0,0,-1) against a point is aligned") {
    // Both imaginary parts vanish, so the cross term is identically zero.
    const auto p = default_params();
    for (int i = 1; i < 100; ++i) CHECK(sampled_cross({1, 0, 0, -1}, {0, 0, 0, 1}, p, Rational(i, 100)).is_zero());
    const auto r = find_walls({1, 0, 0, -1}, {0, 0, 0, 1}, p, Rational(1));
    CHECK(r.cross.is_zero());
    CHECK(r.walls.empty());
}

TEST_CASE("find_walls: single wall at sqrt 3") {
    // Z1 = i(3/u - u), Z2 = -1, so cross = 3/u - u.
    const auto p = default_params();
    const ChernClass x{0, 1, -1, 0}, y{0, 0, 0, 1};
    REQUIRE(sampled_changes(x, y, p, Rational(2)) == 1);
    const auto r = find_walls(x, y, p, Rational(2));
    CHECK(r.cross == LaurentPoly{{-1, Rational(3)}, {1, Rational(-1)}});
    REQUIRE(r.walls.size() == 1);
    const Wall& w = r.walls[0];
    CHECK(w.u.multiplicity == 1);
    CHECK(w.u.lo * w.u.lo < Rational(3));
    CHECK(w.u.hi * w.u.hi > Rational(3));
    CHECK(w.u.width() <= default_isolation_tolerance());
    CHECK(w.v_monotone);
    // v = 3/u - 2u is decreasing, so v(hi) <= v(lo).
    CHECK(w.v_lo <= w.v_hi);
    CHECK(sampled_cross(x, y, p, w.u.lo).sign() * sampled_cross(x, y, p, w.u.hi).sign() < 0);
    // No wall on (0, 1).
    CHECK(find_walls(x, y, p, Rational(1)).walls.empty());
}

TEST_CASE("find_walls: exact rational wall") {
    // x = (0,1,-3,0): Im = 3/u - 3u vanishes at u = 1.
    const auto p = default_params();
    const auto r = find_walls({0, 1, -3, 0}, {0, 0, 0, 1}, p, Rational(2));
    REQUIRE(r.walls.size() == 1);
    CHECK(r.walls[0].u.exact());
    CHECK(r.walls[0].u.lo == Rational(1));
}

TEST_CASE("find_walls: argument errors") {
    CHECK_THROWS_AS(find_walls({0, 0, 0, 1}, {0, 0, 0, 2}, default_params(), Rational(0)), ParameterError);
    CHECK_THROWS_AS(find_walls({}, {0, 0, 0, 2}, default_params(), Rational(1)), PreconditionError);
}

TEST_CASE("candidate box parsing") {
    const auto box = CandidateBox::parse("n=0..0,d=0..0,c=0..2,s2=-2..2");
    CHECK(box.count() == 15);
    CHECK(box.s2 == IntRange{-2, 2});
    CHECK(CandidateBox::parse("n=0..0,d=0..0,c=1..0,s2=0..0").count() == 0);
    CHECK_THROWS(CandidateBox::parse("n=0..0,d=0..0,c=0..2"));
    CHECK_THROWS(CandidateBox::parse("n=0..0,d=0..0,c=0..2,s2=a..2"));
}

TEST_CASE("wall_grid_scan: box of size zero") {
    CHECK(wall_grid_scan({1, 0, 0, 0}, CandidateBox::parse("n=0..0,d=0..0,c=1..0,s2=0..0"), default_params()).empty());
}

TEST_CASE("wall_grid_scan: fifteen candidates, lexicographic, verified by sampling") {
    const auto p = default_params();
    const ChernClass x{1, 0, 0, 0};
    const auto reports = wall_grid_scan(x, CandidateBox::parse("n=0..0,d=0..0,c=0..2,s2=-2..2"), p);
    REQUIRE(reports.size() == 15);
    for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].right < reports[i].right);
    CHECK(reports.front().right == ChernClass{0, 0, 0, -1});
    CHECK(reports.back().right == ChernClass{0, 0, 2, 1});
    for (const auto& r : reports) {
        CAPTURE(r.right);
        if (r.right.is_zero()) {
            CHECK(std::find(r.flags.begin(), r.flags.end(), "zero_candidate") != r.flags.end());
            continue;
        }
        if (r.cross.is_zero()) continue;
        int odd = 0;
        for (const auto& w : r.walls) odd += w.u.multiplicity % 2;
        CHECK(odd == sampled_changes(x, r.right, p, Rational(1)));
    }
}

TEST_CASE("wall_grid_scan: flags for inadmissible boxes and the class itself") {
    const auto p = default_params();
    const auto reports = wall_grid_scan({0, 0, 0, 1}, CandidateBox::parse("n=0..0,d=0..0,c=-2..-1,s2=-3..-1"), p);
    REQUIRE(reports.size() == 6);
    for (const auto& r : reports) CHECK(std::find(r.flags.begin(), r.flags.end(), "inadmissible_right") != r.flags.end());

    const auto self = wall_grid_scan({0, 0, 0, 1}, CandidateBox::parse("n=0..0,d=0..0,c=0..0,s2=2..2"), p);
    REQUIRE(self.size() == 1);
    CHECK(std::find(self[0].flags.begin(), self[0].flags.end(), "equals_class") != self[0].flags.end());
}

TEST_CASE("wall_grid_scan: cap") {
    GridScanOptions opts;
    opts.cap = 10;
    try {
        wall_grid_scan({1, 0, 0, 0}, CandidateBox::parse("n=0..0,d=0..0,c=0..2,s2=-2..2"), default_params(), opts);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        const std::string what = e.what();
        CHECK(what.find("10") != std::string::npos);
        CHECK(what.find("15") != std::string::npos);
    }
}

TEST_CASE("wall_grid_scan: thread count does not change results") {
    const auto p = params("1/2", "3", "2", "1");
    const auto box = CandidateBox::parse("n=-1..1,d=-1..1,c=-1..1,s2=-2..2");
    GridScanOptions one, four;
    one.threads = 1;
    four.threads = 4;
    one.u_max = four.u_max = Rational(3);
    CHECK(wall_grid_scan({1, 1, 0, 1}, box, p, one) == wall_grid_scan({1, 1, 0, 1}, box, p, four));
}
