#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "weierstab/rational.hpp"

namespace weierstab {

/// Geometry and stability parameters of the Weierstrass surface.
///
///   e       minus the self-intersection of the section, e = -Theta^2
///   m       fibre coefficient of the ample class Theta + m f
///   alpha   position on the polarisation curve m + alpha = (m - e/2)u^2 + uv + e
///   lambda  overall scale of the twisted polarisation
///
/// Invariants (checked by create): m, alpha, lambda > 0 and m + alpha - e > 0.
/// Ampleness of Theta + k f for k >= m depends on the other sections of the
/// surface and is taken on trust.
class SurfaceParams {
public:
    static SurfaceParams create(Rational e, Rational m, Rational alpha, Rational lambda);

    /// Empty when valid, otherwise a message naming the violated invariant.
    static std::optional<std::string> validate(const Rational& e, const Rational& m, const Rational& alpha,
                                               const Rational& lambda);

    const Rational& e() const noexcept { return e_; }
    const Rational& m() const noexcept { return m_; }
    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& lambda() const noexcept { return lambda_; }

    /// m + alpha - e: the coefficient that makes v -> infinity correspond to u -> 0+.
    Rational curve_constant() const { return m_ + alpha_ - e_; }
    /// (Theta + m f)^2 = 2m - e.
    Rational ample_square() const { return Rational(2) * m_ - e_; }
    /// Coefficients of the twisted polarisation (lambda/alpha)(Theta + m f) + lambda f.
    Rational twist_a() const { return lambda_ / alpha_; }
    Rational twist_b() const { return lambda_; }

    friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;

private:
    SurfaceParams(Rational e, Rational m, Rational alpha, Rational lambda)
        : e_(std::move(e)), m_(std::move(m)), alpha_(std::move(alpha)), lambda_(std::move(lambda)) {}

    Rational e_;
    Rational m_;
    Rational alpha_;
    Rational lambda_;
};

/// Reduced Chern character (ch0, f.ch1, Theta.ch1, ch2).
struct ChernClass {
    Rational n; // rank
    Rational d; // fibre degree
    Rational c; // section degree
    Rational s; // ch2

    bool is_zero() const { return n.is_zero() && d.is_zero() && c.is_zero() && s.is_zero(); }

    ChernClass operator-() const { return {-n, -d, -c, -s}; }
    ChernClass& operator+=(const ChernClass& o);
    ChernClass& operator-=(const ChernClass& o);
    friend ChernClass operator+(ChernClass a, const ChernClass& b) { return a += b; }
    friend ChernClass operator-(ChernClass a, const ChernClass& b) { return a -= b; }
    friend ChernClass operator*(const Rational& k, const ChernClass& x) { return {k * x.n, k * x.d, k * x.c, k * x.s}; }

    friend bool operator==(const ChernClass&, const ChernClass&) = default;

    /// Lexicographic on (n, d, c, s).
    friend std::strong_ordering operator<=>(const ChernClass& a, const ChernClass& b);

    std::string str() const;
};

/// Rational number or +infinity, the codomain of a slope-like function.
class Slope {
public:
    static Slope infinite() { return Slope(); }
    static Slope finite(Rational v) { return Slope(std::move(v)); }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    const Rational& value() const { return value_.value(); }

    /// "+inf" or the rational string.
    std::string str() const { return value_ ? value_->str() : "+inf"; }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

private:
    Slope() = default;
    explicit Slope(Rational v) : value_(std::move(v)) {}
    std::optional<Rational> value_;
};

/// omega-bar . ch1^B with B = (e/2) f:
/// (lambda/alpha) * ((c - (e/2) n) + (m + alpha) d).
Rational twisted_ch1_pair(const ChernClass& x, const SurfaceParams& p);

/// d / n, or +inf for rank zero.
Slope mu_f(const ChernClass& x);

/// (c + m d) / n, or +inf for rank zero.
Slope mu_theta_mf(const ChernClass& x, const SurfaceParams& p);

/// (1/n)(a(c - (e/2) n) + (a m + b) d) with a = lambda/alpha, b = lambda,
/// or +inf for rank zero.
Slope twisted_slope(const ChernClass& x, const SurfaceParams& p);

/// Numerical classes of the claimed mu_f-HN factors of a sheaf, listed by
/// decreasing slope. Construction checks that the list is nonempty and sums
/// to the supplied total.
class HNProfile {
public:
    HNProfile(std::vector<ChernClass> factors, const ChernClass& total);

    const std::vector<ChernClass>& factors() const noexcept { return factors_; }
    const ChernClass& total() const noexcept { return total_; }

private:
    std::vector<ChernClass> factors_;
    ChernClass total_;
};

struct MembershipCheck {
    std::optional<std::size_t> violated_index;

    bool satisfied() const { return !violated_index.has_value(); }
    friend bool operator==(const MembershipCheck&, const MembershipCheck&) = default;
};

// Per-factor numerical conditions for the limit torsion-free and torsion
// classes. Both are necessary conditions evaluated on caller-attested data;
// neither decides membership of an actual sheaf.

/// Every factor A has mu_f(A) < 0, or mu_f(A) = 0 and mu_{Theta+mf}(A) <= 0.
MembershipCheck check_Fl_conditions(const HNProfile& profile, const SurfaceParams& p);

/// Every factor A has mu_f(A) > 0, or mu_f(A) = 0 and mu_{Theta+mf}(A) > 0.
MembershipCheck check_Tl_conditions(const HNProfile& profile, const SurfaceParams& p);

bool satisfies_Fl(const ChernClass& a, const SurfaceParams& p);
bool satisfies_Tl(const ChernClass& a, const SurfaceParams& p);

} // namespace weierstab
