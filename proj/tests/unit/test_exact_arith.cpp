#include <random>

#include "support.hpp"
#include "weierstab/laurent.hpp"
#include "weierstab/polynomial.hpp"
#include "weierstab/sturm.hpp"

using namespace weierstab;
using test_support::q;

TEST_CASE("rational arithmetic examples") {
    CHECK(rational_arith(q("1/2"), q("1/3"), ArithOp::add) == q("5/6"));
    CHECK(Rational(2, 4) == q("1/2"));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK_FALSE(rational_arith(q("3/7"), Rational(0), ArithOp::div).has_value());
    CHECK_THROWS_AS(q("3/7") / Rational(0), DivisionByZero);
    CHECK(q("-6/4").str() == "-3/2");
    CHECK(q("+5").str() == "5");
}

TEST_CASE("rational parsing is strict") {
    for (const char* bad : {"", "1/", "/2", "1.5", "1/0", "a", "1 /2", "--1", "1/-2"}) {
        CAPTURE(bad);
        CHECK_FALSE(Rational::try_parse(bad).has_value());
    }
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("rational ring axioms on random values") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    for (int i = 0; i < 500; ++i) {
        const Rational a(num(gen), den(gen)), b(num(gen), den(gen)), c(num(gen), den(gen));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
    }
}

TEST_CASE("laurent sign at zero+") {
    const LaurentPoly p{{-1, Rational(3)}, {0, Rational(-5)}, {1, Rational(2)}};
    CHECK(p.sign_at_zero_plus() == Sign::Positive);
    CHECK(p.str() == "3*u^-1 - 5 + 2*u");
    CHECK(LaurentPoly().sign_at_zero_plus() == Sign::Zero);
    const LaurentPoly r{{3, Rational(-2)}, {5, Rational(7)}};
    CHECK(r.sign_at_zero_plus() == Sign::Negative);
}

TEST_CASE("laurent dominance bound really is a bound") {
    const LaurentPoly p{{-1, Rational(3)}, {0, Rational(-5)}, {1, Rational(2)}, {4, Rational(-11)}};
    const Rational b = p.dominance_bound();
    CHECK(b > Rational(0));
    // Sign is the lowest-term sign on a fine grid of (0, b].
    for (int i = 1; i <= 1000; ++i) CHECK(p.evaluate(b * Rational(i, 1000)).sign() > 0);
}

TEST_CASE("laurent arithmetic and clearing") {
    const LaurentPoly a{{-2, Rational(1)}, {1, Rational(1)}};
    const LaurentPoly b{{2, Rational(1)}};
    CHECK(a * b == LaurentPoly{{0, Rational(1)}, {3, Rational(1)}});
    CHECK((a - a).is_zero());
    const auto [poly, shift] = a.cleared();
    CHECK(shift == 2);
    CHECK(poly == Polynomial{Rational(1), Rational(0), Rational(0), Rational(1)});
    CHECK(a.evaluate(Rational(2)) == q("9/4"));
}

TEST_CASE("polynomial gcd and square-free decomposition") {
    // (u - 1)^2 (u - 2)
    const Polynomial a{Rational(-1), Rational(1)};
    const Polynomial b{Rational(-2), Rational(1)};
    const Polynomial p = a * a * b;
    const auto factors = square_free_decomposition(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].multiplicity == 1);
    CHECK(factors[0].factor.monic() == b);
    CHECK(factors[1].multiplicity == 2);
    CHECK(factors[1].factor.monic() == a);
    CHECK(gcd(p, p.derivative()) == a);
    const auto [quot, rem] = divmod(p, a);
    CHECK(rem.is_zero());
    CHECK(quot == a * b);
}

namespace {

// Sign changes of p on a dense grid of the open interval, counting exact
// zeros at grid points once.
int sampled_sign_changes(const Polynomial& p, const Rational& lo, const Rational& hi, int points) {
    int changes = 0, prev = 0;
    for (int i = 1; i < points; ++i) {
        const int s = p.sign_at(lo + (hi - lo) * Rational(i, points));
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

TEST_CASE("sturm isolation of u^2 - 2") {
    const LaurentPoly p{{0, Rational(-2)}, {2, Rational(1)}};
    const auto roots = sturm_isolate_roots(p, q("1/2"), Rational(2));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].width() <= pow2_inverse(20));
    CHECK(roots[0].lo * roots[0].lo < Rational(2));
    CHECK(roots[0].hi * roots[0].hi > Rational(2));
}

TEST_CASE("sturm isolation of u - 3 on (1/2, 2) is empty") {
    const LaurentPoly p{{0, Rational(-3)}, {1, Rational(1)}};
    CHECK(sturm_isolate_roots(p, q("1/2"), Rational(2)).empty());
}

TEST_CASE("sturm isolation of (u - 1)(u - 3/2) agrees with dense sampling") {
    const Polynomial p = Polynomial{Rational(-1), Rational(1)} * Polynomial{q("-3/2"), Rational(1)};
    CHECK(p == Polynomial{q("3/2"), q("-5/2"), Rational(1)});
    // Oracle first: dense sampling sees two sign changes on (1/2, 2).
    const int sampled = sampled_sign_changes(p, q("1/2"), Rational(2), 10'000);
    REQUIRE(sampled == 2);

    const auto roots = isolate_real_roots(p, q("1/2"), Rational(2));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].hi < roots[1].lo);
    CHECK((roots[0].lo <= Rational(1) && Rational(1) <= roots[0].hi));
    CHECK((roots[1].lo <= q("3/2") && q("3/2") <= roots[1].hi));
    SturmSequence seq(p);
    CHECK(seq.count_roots(q("1/2"), Rational(2)) == 2);
}

TEST_CASE("sturm isolation reports multiplicity") {
    const Polynomial a{q("-1/3"), Rational(1)};
    const Polynomial b{q("-3/4"), Rational(1)};
    const Polynomial c{Rational(-2), Rational(0), Rational(1)}; // u^2 - 2
    const auto roots = isolate_real_roots(a * a * b * c, Rational(0), Rational(2));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].exact());
    CHECK(roots[0].lo == q("1/3"));
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].lo == q("3/4"));
    CHECK(roots[1].multiplicity == 1);
    CHECK(roots[2].multiplicity == 1);
    CHECK(roots[2].lo * roots[2].lo < Rational(2));
    CHECK(roots[2].hi * roots[2].hi > Rational(2));
}

TEST_CASE("sturm isolation errors") {
    CHECK_THROWS_AS(sturm_isolate_roots(LaurentPoly(), q("1/2"), Rational(2)), PreconditionError);
    const LaurentPoly p{{0, Rational(-2)}, {2, Rational(1)}};
    CHECK_THROWS_AS(sturm_isolate_roots(p, Rational(0), Rational(2)), PreconditionError);
    CHECK_THROWS_AS(sturm_isolate_roots(p, Rational(2), Rational(1)), PreconditionError);
}

TEST_CASE("sturm isolation of random products with known roots") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<long> num(1, 199);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p{Rational(1)};
        std::vector<Rational> roots;
        for (int k = 0; k < 4; ++k) {
            const Rational r(num(gen), 100);
            roots.push_back(r);
            p = p * Polynomial{-r, Rational(1)};
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        const auto found = isolate_real_roots(p, q("1/1000"), Rational(2));
        REQUIRE(found.size() == roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(found[i].lo <= roots[i]);
            CHECK(roots[i] <= found[i].hi);
            if (i > 0) CHECK(found[i - 1].hi < found[i].lo);
        }
    }
}
