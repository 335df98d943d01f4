#pragma once

#include "hz/dagger_series.hpp"

namespace hz {

// The expansion 1/y^sigma = y^(-p) * sum_i A_i(x) t^i held as the inv_sqrt
// factor; the y^(-p) prefactor is implied. A_0 = 1 mod p and
// inv_sqrt^2 * s = 1 mod (p^N, t^(J+1)) for s = 1 + (Q^sigma(x^p) - Q^p) t^p.
struct FrobeniusSeries {
  DaggerSeries inv_sqrt;
  unsigned J = 0;
};

// s = 1 + (Q^sigma(x^p) - Q(x)^p) * t^p, normalized so all coefficients have
// degree <= 2g. Here Q^sigma applies sigma to each coefficient and maps
// x to x^p. SanityCheckFailed unless s = 1 mod p.
DaggerSeries build_s(const RingCtx& R, const PolyR& Q, unsigned g);

// Inverse square root by Newton iteration z <- (3z - s z^3)/2, doubling the
// t-precision each step and capping at J. ConvergenceFailure if the
// postcondition z^2 s = 1 mod (p^N, t^(J+1)) fails.
DaggerSeries inv_sqrt_newton(const RingCtx& R, const DaggerSeries& s,
                             const PolyR& Q, unsigned g, int J);

// Composition of the two steps plus the valuation audit
// v_p(A_i) >= max(0, floor((2i-p)/(2p))).
FrobeniusSeries compute_inv_y_sigma(const RingCtx& R, const PolyR& Q,
                                    unsigned g, int J);

// Q with sigma applied to coefficients and x replaced by x^p.
PolyR frobenius_twist_substitute(const RingCtx& R, const PolyR& Q);

PolyR poly_pow(const RingCtx& R, const PolyR& base, uint64_t e);

}  // namespace hz
