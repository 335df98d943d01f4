#pragma once

#include <utility>
#include <vector>

#include "hz/padic_ring.hpp"

namespace hz {

// Dense polynomial over R_N, constant term first. Leading zeros may be
// present; degree queries ignore them.
struct PolyR {
  std::vector<RingElem> c;
};

int poly_degree(const RingCtx& R, const PolyR& a);
PolyR poly_zero();
PolyR poly_one(const RingCtx& R);
PolyR poly_monomial(const RingCtx& R, RingElem coeff, unsigned degree);
RingElem poly_coeff(const RingCtx& R, const PolyR& a, size_t i);
bool poly_is_zero(const RingCtx& R, const PolyR& a);
bool poly_eq(const RingCtx& R, const PolyR& a, const PolyR& b);
void poly_trim(const RingCtx& R, PolyR& a);

PolyR poly_add(const RingCtx& R, const PolyR& a, const PolyR& b);
PolyR poly_sub(const RingCtx& R, const PolyR& a, const PolyR& b);
PolyR poly_neg(const RingCtx& R, const PolyR& a);
PolyR poly_mul(const RingCtx& R, const PolyR& a, const PolyR& b);
PolyR poly_scale(const RingCtx& R, const PolyR& a, const RingElem& s);
PolyR poly_mul_small(const RingCtx& R, const PolyR& a, long s);
PolyR poly_shift(const PolyR& a, unsigned k);  // a * x^k
PolyR poly_derivative(const RingCtx& R, const PolyR& a);
RingElem poly_eval(const RingCtx& R, const PolyR& a, const RingElem& x);
// coefficient-wise sigma^k
PolyR poly_frobenius(const RingCtx& R, const PolyR& a, unsigned k);
// coefficient-wise divide_by_odd
PolyR poly_divide_by_odd(const RingCtx& R, const PolyR& a, uint64_t d);
// min coefficient valuation (R.N() for the zero polynomial)
unsigned poly_valuation(const RingCtx& R, const PolyR& a);

// a = q*b + r with deg r < deg b; the leading coefficient of b must be a
// unit (NonUnitLeadingCoefficient otherwise).
std::pair<PolyR, PolyR> poly_divrem(const RingCtx& R, const PolyR& a,
                                    const PolyR& b);
// quotient of an exact division; InexactDivision if the remainder is nonzero.
PolyR poly_div_exact(const RingCtx& R, const PolyR& a, const PolyR& b);

// R*Q + S*Q' = 1 with deg R <= 2g-1, deg S <= 2g.
struct BezoutPair {
  PolyR R, S;
};

// Extended Euclid over the residue field, then a quadratically convergent
// Hensel lift to R_N. NotCoprime when Q mod p is not squarefree.
BezoutPair bezout_precompute(const RingCtx& R, const PolyR& Q);

// Split T = A*Q + B*Q' through the precomputed pair. Divisions happen only
// by the monic Q: B = (T*S) mod Q, A = (T - B*Q')/Q exactly. For
// deg T <= 2g this gives deg A <= 2g-1, deg B <= 2g.
std::pair<PolyR, PolyR> split_by_bezout(const RingCtx& R, const PolyR& T,
                                        const PolyR& Q, const PolyR& Qp,
                                        const BezoutPair& pair);

}  // namespace hz
