#include "weierstab/central_charge.hpp"
#include "weierstab/checks.hpp"

#include <sstream>

namespace weierstab::checks {

void SuiteResult::fail(std::string note) {
    ++failures;
    if (notes.size() < 8) notes.push_back(std::move(note));
}

std::int64_t RandomSource::integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rational RandomSource::rational(std::int64_t max_num, std::int64_t max_den) {
    const auto num = integer(-max_num, max_num);
    const auto den = integer(1, max_den);
    return Rational(num, den);
}

Rational RandomSource::positive_rational(std::int64_t max_num, std::int64_t max_den) {
    return Rational(integer(1, max_num), integer(1, max_den));
}

ChernClass RandomSource::chern_class(std::int64_t max_num, std::int64_t max_den) {
    return {rational(max_num, max_den), rational(max_num, max_den), rational(max_num, max_den),
            rational(max_num, max_den)};
}

ChernClass RandomSource::admissible_class(const SurfaceParams& p) {
    for (;;) {
        ChernClass x{rational(6, 3), Rational(0), rational(6, 3), rational(6, 3)};
        // Mix fibre degree zero (charges of order u) with positive fibre
        // degree (charges of order 1/u).
        if (integer(0, 2) != 0) x.d = positive_rational(6, 3);
        if (admissibility(curve_charge(x, p)) == Admissibility::InUpperHalfPlane) return x;
    }
}

SurfaceParams RandomSource::params() {
    for (;;) {
        Rational e(integer(-4, 6), 2);
        Rational m = positive_rational(8, 2);
        Rational alpha = positive_rational(6, 3);
        Rational lambda = positive_rational(6, 3);
        if (!SurfaceParams::validate(e, m, alpha, lambda))
            return SurfaceParams::create(std::move(e), std::move(m), std::move(alpha), std::move(lambda));
    }
}

std::string render(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed();
        os << r.name << " " << (r.passed() ? "PASS" : "FAIL") << " cases=" << r.cases << " failures=" << r.failures
           << " excluded=" << r.excluded << "\n";
        for (const auto& n : r.notes) os << "  " << n << "\n";
    }
    os << "overall " << (all ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace weierstab::checks
