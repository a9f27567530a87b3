#include "weierstab/sturm.hpp"

#include <algorithm>
#include <utility>

namespace weierstab {

SturmSequence::SturmSequence(const Polynomial& square_free) {
    if (square_free.is_zero()) throw PreconditionError("Sturm sequence of the zero polynomial");
    chain_.push_back(square_free.primitive());
    Polynomial next = square_free.derivative().primitive();
    while (!next.is_zero()) {
        chain_.push_back(next);
        const auto& a = chain_[chain_.size() - 2];
        const auto& b = chain_.back();
        next = (-divmod(a, b).second).primitive();
    }
}

int SturmSequence::variations(const Rational& x) const {
    int count = 0;
    int previous = 0;
    for (const auto& p : chain_) {
        const int s = p.sign_at(x);
        if (s == 0) continue;
        if (previous != 0 && s != previous) ++count;
        previous = s;
    }
    return count;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    // V(a) - V(b) counts roots in (a, b] for a square-free base.
    const int half_open = variations(a) - variations(b);
    return half_open - (base().sign_at(b) == 0 ? 1 : 0);
}

namespace {

struct Candidate {
    RootInterval interval;
    std::size_t factor = 0;
};

// One bisection step keeping the root; collapses to a point on an exact hit.
void bisect_once(RootInterval& r, const SturmSequence& seq) {
    if (r.exact()) return;
    const Rational mid = (r.lo + r.hi) / Rational(2);
    if (seq.base().sign_at(mid) == 0) {
        r.lo = mid;
        r.hi = mid;
    } else if (seq.count_roots(r.lo, mid) == 1) {
        r.hi = mid;
    } else {
        r.lo = mid;
    }
}

void isolate_factor(const SturmSequence& seq, const Rational& lo, const Rational& hi, int multiplicity,
                    const Rational& tolerance, std::size_t factor, std::vector<Candidate>& out) {
    std::vector<std::pair<Rational, Rational>> pending{{lo, hi}};
    while (!pending.empty()) {
        auto [a, b] = std::move(pending.back());
        pending.pop_back();
        const int n = seq.count_roots(a, b);
        if (n == 0) continue;
        if (n == 1 && seq.base().degree() == 1) {
            const Rational root = -seq.base().coefficient(0) / seq.base().coefficient(1);
            out.push_back({RootInterval{root, root, multiplicity}, factor});
            continue;
        }
        if (n == 1) {
            RootInterval r{a, b, multiplicity};
            while (r.width() > tolerance) bisect_once(r, seq);
            out.push_back({std::move(r), factor});
            continue;
        }
        const Rational mid = (a + b) / Rational(2);
        if (seq.base().sign_at(mid) == 0) out.push_back({RootInterval{mid, mid, multiplicity}, factor});
        pending.emplace_back(mid, b);
        pending.emplace_back(a, mid);
    }
}

} // namespace

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                             const Rational& tolerance) {
    if (p.is_zero()) throw PreconditionError("cannot isolate roots of the zero polynomial");
    if (!(lo < hi)) throw PreconditionError("isolation interval requires lo < hi");
    if (tolerance.sign() <= 0) throw PreconditionError("isolation tolerance must be positive");

    std::vector<SturmSequence> seqs;
    std::vector<Candidate> found;
    for (const auto& [factor, mult] : square_free_decomposition(p)) {
        seqs.emplace_back(factor);
        isolate_factor(seqs.back(), lo, hi, mult, tolerance, seqs.size() - 1, found);
    }

    // Roots of distinct square-free factors are distinct, so refining
    // overlapping intervals terminates. Endpoints that are roots of p (of
    // another factor) are refined away too.
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(found.begin(), found.end(),
                  [](const Candidate& x, const Candidate& y) { return x.interval.lo < y.interval.lo; });
        for (std::size_t i = 0; i < found.size(); ++i) {
            auto& r = found[i].interval;
            if (!r.exact() && (p.sign_at(r.lo) == 0 || p.sign_at(r.hi) == 0)) {
                bisect_once(r, seqs[found[i].factor]);
                changed = true;
            }
            if (i + 1 < found.size()) {
                auto& s = found[i + 1].interval;
                if (!(r.hi < s.lo)) {
                    bisect_once(r, seqs[found[i].factor]);
                    bisect_once(s, seqs[found[i + 1].factor]);
                    changed = true;
                }
            }
        }
    }

    std::vector<RootInterval> out;
    out.reserve(found.size());
    for (auto& c : found) out.push_back(std::move(c.interval));
    return out;
}

std::vector<RootInterval> sturm_isolate_roots(const LaurentPoly& p, const Rational& lo, const Rational& hi,
                                              const Rational& tolerance) {
    if (p.is_zero()) throw PreconditionError("every point is a root of the zero polynomial");
    if (lo.sign() <= 0) throw PreconditionError("Laurent root isolation requires 0 < lo");
    return isolate_real_roots(p.cleared().first, lo, hi, tolerance);
}

} // namespace weierstab
