#pragma once

#include "hz/cohomology.hpp"

namespace hz {

// Working precisions for one run. The invariants pin the smallest profile:
//   N1 >= ceil((g/2) n + (2g+1) log_p 2) + 1
//   J  >= p (N1 + ceil(log_p(2 p N1 + 1)) + 1)
//   N  =  N1 + floor(log_p(2J + 1)) + 1
// computed with exact integer comparisons, never floating point.
struct PrecisionProfile {
  unsigned N1 = 0;  // target digits
  unsigned N = 0;   // working digits
  unsigned J = 0;   // series truncation order
  unsigned delta = 0;  // N - N1
};

PrecisionProfile make_precision_profile(uint64_t p, unsigned n, unsigned g);
// Same, but with N1 raised to at least n1_floor (J and N recomputed).
PrecisionProfile make_precision_profile_with_n1(uint64_t p, unsigned n,
                                                unsigned g, unsigned n1_floor);

// M' = M M^sigma ... M^(sigma^(n-1)) by the binary ladder
// T(2e) = T(e) T(e)^(sigma^e), T(e+1) = T(e) M^(sigma^e).
FrobMatrix norm_matrix(const RingCtx& R, const FrobMatrix& M);

FrobMatrix mat_mul(const RingCtx& R, const FrobMatrix& A, const FrobMatrix& B);
FrobMatrix mat_frobenius(const RingCtx& R, const FrobMatrix& A, unsigned k);

// Coefficients of det(T I - M), leading first (c[0] = 1), by the
// division-free Berkowitz recursion.
std::vector<RingElem> charpoly(const RingCtx& R, const FrobMatrix& M);

// Carry a matrix computed at precision N into the N1 context.
FrobMatrix reduce_matrix(const RingCtx& from, const RingCtx& to,
                         const FrobMatrix& M);

struct ZetaResult {
  unsigned genus = 0;
  mpz_class q;
  std::vector<mpz_class> a;       // a_1..a_{2g} of T^2g + a_1 T^(2g-1) + ...
  std::vector<mpz_class> L;       // L-polynomial 1 + a_1 T + ... + a_2g T^2g
  std::vector<mpz_class> counts;  // #C(F_{q^i}) for i = 1..k
  PrecisionProfile profile;
  double weil_root_max_dev = 0.0;
  bool weil_root_pass = false;
};

// Signed-residue lift of the first g coefficients inside the Weil box,
// then the q-weighted functional equation a_{2g-i} = q^(g-i) a_i for the
// rest, cross-checked against the computed coefficients mod p^N1.
// WeilBoundViolated / FunctionalEquationMismatch on failure. The context
// precision must be at least N1.
std::vector<mpz_class> recover_integer_coeffs(const RingCtx& R,
                                              const std::vector<RingElem>& b,
                                              const mpz_class& q, unsigned g,
                                              unsigned N1);

// Step 3 end to end: twisted norm of the (possibly denominator-carrying)
// matrix, characteristic polynomial, division by the accumulated p-power,
// integer recovery. The b_i of the true matrix satisfy
// charpoly(int_part) coefficient i = p^(i n denom_exp) b_i.
std::vector<mpz_class> zeta_coefficients(const RingCtx& R,
                                         const ScaledFrobMatrix& M,
                                         unsigned N1, const mpz_class& q,
                                         unsigned g);

// Power sums via Newton's identities; #C(F_{q^i}) = q^i + 1 - s_i.
// NegativeCount if a count comes out negative.
std::vector<mpz_class> point_counts(const std::vector<mpz_class>& a,
                                    const mpz_class& q, unsigned g,
                                    unsigned upto);

struct WeilRootCheck {
  bool pass = false;
  double max_rel_dev = 0.0;
};

// Numerically root T^2g + a_1 T^(2g-1) + ... + a_2g and test that every
// root has |alpha| within relative 1e-6 of sqrt(q).
WeilRootCheck weil_root_check(const std::vector<mpz_class>& a,
                              const mpz_class& q, unsigned g);

bool weil_coeff_in_box(const mpz_class& a, unsigned g, unsigned i,
                       const mpz_class& q);

}  // namespace hz
