#include "hz/frobenius_lift.hpp"

namespace hz {

PolyR frobenius_twist_substitute(const RingCtx& R, const PolyR& Q) {
  PolyR sig = poly_frobenius(R, Q, 1);
  PolyR r;
  if (sig.c.empty()) return r;
  r.c.assign((sig.c.size() - 1) * R.p() + 1, R.zero());
  for (size_t i = 0; i < sig.c.size(); ++i) r.c[i * R.p()] = std::move(sig.c[i]);
  return r;
}

PolyR poly_pow(const RingCtx& R, const PolyR& base, uint64_t e) {
  PolyR result = poly_one(R);
  PolyR sq = base;
  while (e > 0) {
    if (e & 1u) result = poly_mul(R, result, sq);
    e >>= 1u;
    if (e) sq = poly_mul(R, sq, sq);
  }
  return result;
}

DaggerSeries build_s(const RingCtx& R, const PolyR& Q, unsigned g) {
  PolyR D = poly_sub(R, frobenius_twist_substitute(R, Q),
                     poly_pow(R, Q, R.p()));
  if (!poly_is_zero(R, D) && poly_valuation(R, D) < 1)
    fail(Errc::SanityCheckFailed, "Q^sigma - Q^p is not divisible by p");
  DaggerSeries s;
  s.set(static_cast<int>(R.p()), std::move(D));
  series_normalize(R, s, Q, g);
  s.add_to(R, 0, poly_one(R));
  // normalized carries cannot push below t^0 here: deg D < p(2g+1)
  if (s.k_min() < 0)
    fail(Errc::SanityCheckFailed, "unexpected polynomial part in s");
  for (int k = 1; k <= s.k_max(); ++k) {
    PolyR c = s.coeff(k);
    if (!poly_is_zero(R, c) && poly_valuation(R, c) < 1)
      fail(Errc::SanityCheckFailed, "s has a non-constant term that is a unit");
  }
  PolyR c0 = s.coeff(0);
  PolyR c0_minus_1 = poly_sub(R, c0, poly_one(R));
  if (!poly_is_zero(R, c0_minus_1) && poly_valuation(R, c0_minus_1) < 1)
    fail(Errc::SanityCheckFailed, "s != 1 mod p");
  return s;
}

DaggerSeries inv_sqrt_newton(const RingCtx& R, const DaggerSeries& s,
                             const PolyR& Q, unsigned g, int J) {
  DaggerSeries z;
  z.set(0, poly_one(R));
  if (J < 0) return z;
  // The residual 1 - s z^2 starts in the ideal (p, t) because s = 1 only
  // modulo (p, t), and each step squares it. Correctness mod (p^N, t^(J+1))
  // therefore needs the (p,t)-adic depth to reach N + J + 1, not just the
  // t-adic order J+1; the t-cap stays at J+1 throughout.
  long target = static_cast<long>(J) + 1 + static_cast<long>(R.N());
  long depth = 1;
  while (depth < target) {
    depth = std::min(2 * depth, target);
    int cap = static_cast<int>(std::min<long>(depth, J + 1)) - 1;
    DaggerSeries z2 = series_mul(R, z, z, Q, g, cap);
    DaggerSeries z3 = series_mul(R, z2, z, Q, g, cap);
    DaggerSeries sz3 = series_mul(R, s, z3, Q, g, cap);
    DaggerSeries next;
    for (int k = 0; k <= cap; ++k) {
      PolyR term = poly_sub(R, poly_mul_small(R, z.coeff(k), 3), sz3.coeff(k));
      if (poly_is_zero(R, term)) continue;
      next.set(k, poly_scale(R, term, R.inv2()));
    }
    next.trim(R);
    z = std::move(next);
  }
  DaggerSeries check = series_mul(R, series_mul(R, z, z, Q, g, J), s, Q, g, J);
  DaggerSeries one;
  one.set(0, poly_one(R));
  if (!series_eq(R, check, one))
    fail(Errc::ConvergenceFailure, "z^2 * s != 1 in the truncated ring");
  return z;
}

FrobeniusSeries compute_inv_y_sigma(const RingCtx& R, const PolyR& Q,
                                    unsigned g, int J) {
  DaggerSeries s = build_s(R, Q, g);
  DaggerSeries z = inv_sqrt_newton(R, s, Q, g, J);

  PolyR a0_minus_1 = poly_sub(R, z.coeff(0), poly_one(R));
  if (!poly_is_zero(R, a0_minus_1) && poly_valuation(R, a0_minus_1) < 1)
    fail(Errc::SanityCheckFailed, "A_0 != 1 mod p");
  for (int k = 1; k <= z.k_max(); ++k) {
    PolyR c = z.coeff(k);
    if (poly_is_zero(R, c)) continue;
    unsigned bound = static_cast<unsigned>(
        std::min<long>(tail_valuation_bound(R.p(), k), R.N()));
    if (poly_valuation(R, c) < bound)
      fail(Errc::SanityCheckFailed,
           "A_" + std::to_string(k) + " violates the valuation bound");
  }
  FrobeniusSeries fs;
  fs.inv_sqrt = std::move(z);
  fs.J = static_cast<unsigned>(J);
  return fs;
}

}  // namespace hz
