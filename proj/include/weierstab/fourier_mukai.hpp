#pragma once

#include "weierstab/surface.hpp"

namespace weierstab {

// Cohomological Fourier-Mukai transforms on the reduced lattice
// (n, d, c, s) = (ch0, f.ch1, Theta.ch1, ch2). Only the f- and Theta-pairings
// of ch1 are tracked; p^*K-bar enters through p^*K-bar == e f.

/// Phi: (n, d, c, s) -> (d, -n, s - (e/2)d + e n, -c - d e + (e/2)n).
ChernClass phi(const ChernClass& x, const SurfaceParams& p);

/// Phi-hat: (n, d, c, s) -> (d, -n, s + (e/2)d + e n, -(c + d e + (e/2)n)).
ChernClass phi_hat(const ChernClass& x, const SurfaceParams& p);

/// Shift [k] acts on Chern characters by (-1)^k.
ChernClass shift(const ChernClass& x, int k);

/// ch(Phi E[1]), the class whose charge is compared with twisted slopes.
ChernClass phi_of_shifted_sheaf_charge_data(const ChernClass& x, const SurfaceParams& p);

/// ch1(Phi E).(Theta + k f) = s - (e/2)d + (e - k)n, for any rational k.
Rational phi_ch1_against_ample(const ChernClass& x, const SurfaceParams& p, const Rational& k);

/// ch1(Phi-hat E).(Theta + k f) = s + (e/2)d + (e - k)n.
Rational phi_hat_ch1_against_ample(const ChernClass& x, const SurfaceParams& p, const Rational& k);

} // namespace weierstab
