#pragma once

#include "hz/frobenius_lift.hpp"

namespace hz {

// A differential of odd y-parity, (sum_k F_k(x) t^k) dx/y. Exponents k >= 1
// are pole terms F_k dx/y^(2k+1); k <= 0 terms make up the polynomial part.
struct DifferentialForm {
  DaggerSeries series;
};

// (x^i dx/y)^sigma = p x^(pi+p-1) y^(-p) (1/sqrt(s)) dx
//                  = p x^(pi+p-1) t^((p-1)/2) * inv_sqrt * dx/y,
// normalized so every coefficient has degree <= 2g.
DifferentialForm frobenius_of_basis_form(const RingCtx& R, unsigned i,
                                         const FrobeniusSeries& fs,
                                         const PolyR& Q, unsigned g);

struct ReducedParts {
  PolyR pole_residue;  // level-0 residue, degree <= 2g
  PolyR poly_part;     // sum_{k<0} c_k Q^(-k), may have large degree
};

// A polynomial with an explicit power-of-p denominator: true value is
// val / p^scale. The reductions can leave genuinely fractional classes
// (bounded by the accumulated denominator budget), so intermediate results
// carry their scale instead of asserting integrality.
struct ScaledPoly {
  PolyR val;
  unsigned scale = 0;
};

// Eliminate pole levels top-down: with S at level k (pole order 2k+1),
// split S = A Q + B Q' and carry A + 2B'/(2k-1) into level k-1, the target
// pole order. Intermediates may pick up denominators whose total is bounded
// by p^L, L = floor(log_p(2K-1)); the pole part is scaled by p^L up front
// so that every division by 2k-1 is exact (zero-filling digits above N-v),
// and the returned residue keeps the leftover denominator in `scale`.
// NonIntegralReduction when a dividend misses the guaranteed divisibility.
ScaledPoly reduce_poles_scaled(const RingCtx& R, const DifferentialForm& form,
                               const PolyR& Q, const PolyR& Qp,
                               const BezoutPair& pair, unsigned g,
                               PolyR* poly_part_out = nullptr);

// Spec-shaped wrapper: insists the level-0 residue is integral
// (NonIntegralReduction otherwise) and returns it together with the
// untouched polynomial part.
ReducedParts reduce_poles(const RingCtx& R, const DifferentialForm& form,
                          const PolyR& Q, const PolyR& Qp,
                          const BezoutPair& pair, unsigned g);

// Bring deg G down to <= 2g-1 by subtracting multiples of the exact
// relations x^(k-1) Q' + 2(k-1) x^(k-2) Q (degree k+2g-1, leading
// coefficient 2k+2g-1); same scaled-denominator scheme as the pole
// direction, with budget floor(log_p(2 kstart + 2g - 1)).
ScaledPoly reduce_degree_scaled(const RingCtx& R, ScaledPoly G, const PolyR& Q,
                                const PolyR& Qp, unsigned g);

// Integral wrapper around reduce_degree_scaled.
PolyR reduce_degree(const RingCtx& R, PolyR G, const PolyR& Q,
                    const PolyR& Qp, unsigned g);

// 2g x 2g matrix of sigma on the basis x^i dx/y of the negative eigenspace;
// column i holds the reduced coordinates of (x^i dx/y)^sigma.
struct FrobMatrix {
  unsigned dim = 0;
  std::vector<RingElem> a;  // row-major

  RingElem& at(unsigned r, unsigned c) { return a[r * dim + c]; }
  const RingElem& at(unsigned r, unsigned c) const { return a[r * dim + c]; }
};

// The matrix of sigma with a common denominator: true matrix is
// int_part / p^denom_exp. denom_exp is 0 for most curves.
struct ScaledFrobMatrix {
  FrobMatrix int_part;
  unsigned denom_exp = 0;
};

// The 2g column reductions are independent and run on `threads` threads;
// the result is schedule-independent.
ScaledFrobMatrix frobenius_matrix(const RingCtx& R, const PolyR& Q,
                                  const FrobeniusSeries& fs,
                                  const BezoutPair& pair, unsigned g,
                                  unsigned threads = 1);

// Full reduction of a single form to its canonical representative of
// degree <= 2g-1 (pole elimination, polynomial part, degree reduction),
// with the uncancelled denominator in `scale`.
ScaledPoly reduce_form_full(const RingCtx& R, const DifferentialForm& form,
                            const PolyR& Q, const PolyR& Qp,
                            const BezoutPair& pair, unsigned g);

}  // namespace hz
