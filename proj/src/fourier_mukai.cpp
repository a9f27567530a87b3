#include "weierstab/fourier_mukai.hpp"

namespace weierstab {

ChernClass phi(const ChernClass& x, const SurfaceParams& p) {
    const Rational& e = p.e();
    const Rational half_e = e / Rational(2);
    return {
        x.d,
        -x.n,
        x.s - half_e * x.d + e * x.n,
        -x.c - x.d * e + half_e * x.n,
    };
}

ChernClass phi_hat(const ChernClass& x, const SurfaceParams& p) {
    const Rational& e = p.e();
    const Rational half_e = e / Rational(2);
    return {
        x.d,
        -x.n,
        x.s + half_e * x.d + e * x.n,
        -(x.c + x.d * e + half_e * x.n),
    };
}

ChernClass shift(const ChernClass& x, int k) { return (k % 2 == 0) ? x : -x; }

ChernClass phi_of_shifted_sheaf_charge_data(const ChernClass& x, const SurfaceParams& p) { return shift(phi(x, p), 1); }

Rational phi_ch1_against_ample(const ChernClass& x, const SurfaceParams& p, const Rational& k) {
    return x.s - p.e() / Rational(2) * x.d + (p.e() - k) * x.n;
}

Rational phi_hat_ch1_against_ample(const ChernClass& x, const SurfaceParams& p, const Rational& k) {
    return x.s + p.e() / Rational(2) * x.d + (p.e() - k) * x.n;
}

} // namespace weierstab
