#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include <gmpxx.h>

#include "hz/errors.hpp"
#include "hz/finite_field.hpp"

namespace hz {

// Element of R_N = (Z/p^N)[alpha]/(P(alpha)): n residues in [0, p^N),
// coordinates in the power basis 1, alpha, ..., alpha^(n-1).
struct RingElem {
  std::vector<mpz_class> c;
  bool operator==(const RingElem& o) const { return c == o.c; }
};

// The truncated unramified extension W(F_q)/(p^N), with the Frobenius
// automorphism sigma. Immutable after construction; the sigma-image cache
// is built lazily under a mutex, so contexts are safe to share across
// threads. All operations are pure.
class RingCtx {
public:
  RingCtx(uint64_t p, unsigned n, unsigned N, FpPoly pbar);

  uint64_t p() const { return p_; }
  unsigned n() const { return n_; }
  unsigned N() const { return N_; }
  const mpz_class& pN() const { return pN_; }
  const mpz_class& p_pow(unsigned k) const { return p_pows_[k]; }
  const FieldCtx& residue_field() const { return field_; }
  const FpPoly& pbar() const { return field_.modulus(); }
  const mpz_class& q() const { return q_; }  // p^n
  const RingElem& inv2() const { return inv2_; }

  RingElem zero() const;
  RingElem one() const;
  RingElem alpha() const;
  RingElem from_int(long v) const;
  RingElem from_mpz(const mpz_class& v) const;
  RingElem from_residues(std::vector<mpz_class> r) const;

  bool is_zero(const RingElem& a) const;
  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem mul_small(const RingElem& a, long s) const;
  void add_inplace(RingElem& a, const RingElem& b) const;

  // Newton lift of the residue-field inverse; NotAUnit if a = 0 mod p.
  RingElem inv(const RingElem& a) const;

  // a^(sigma^k); k is reduced mod n, and sigma fixes Z/p^N coefficients.
  RingElem frobenius(const RingElem& a, unsigned k) const;

  FFElem reduce_modp(const RingElem& a) const;
  RingElem lift(const FFElem& b) const;

  // min_i v_p(c_i); N for the zero element.
  unsigned valuation(const RingElem& a) const;
  unsigned valuation_mpz(const mpz_class& v) const;

  // Division by an odd positive integer d = p^v * u: every residue must be
  // divisible by p^v (else NonIntegralReduction), the quotient digits above
  // N - v are filled with zeros, and the result is multiplied by the unit
  // inverse of u. This is the sanctioned fill rule for the reduction steps.
  RingElem divide_by_odd(const RingElem& a, uint64_t d) const;
  mpz_class divide_residue_by_odd(const mpz_class& c, uint64_t d) const;

  // a * p^e and the exact inverse; div_pow_p raises NonIntegralReduction
  // when a residue is not divisible by p^e (digits above N - e zero-fill).
  RingElem mul_pow_p(const RingElem& a, unsigned e) const;
  RingElem div_pow_p(const RingElem& a, unsigned e) const;

  // Unreduced accumulation support for convolution-heavy callers: acc has
  // 2n-1 integer slots; finalize folds degrees >= n through P and reduces
  // every coordinate mod p^N.
  void mul_acc_raw(const RingElem& a, const RingElem& b,
                   std::vector<mpz_class>& acc) const;
  RingElem finalize_raw(std::vector<mpz_class>& acc) const;

  // alpha^(sigma^k) for 1 <= k < n, cached.
  RingElem sigma_alpha_power(unsigned k) const;
  // Treat a's coordinates as a polynomial and evaluate it at beta (Horner).
  RingElem eval_coords_at(const RingElem& a, const RingElem& beta) const;

private:
  RingElem sigma_alpha_base() const;  // the root of P congruent to alpha^p mod p
  const RingElem& sigma_pow2_image(unsigned j) const;

  uint64_t p_;
  unsigned n_;
  unsigned N_;
  mpz_class pN_;
  mpz_class q_;
  std::vector<mpz_class> p_pows_;          // p^0 .. p^N
  FieldCtx field_;                         // residue field F_q
  std::vector<mpz_class> P_;               // monic lift of pbar, n+1 coeffs
  std::vector<std::vector<mpz_class>> red_rows_;  // x^(n+j) mod P, j = 0..n-2
  RingElem inv2_;

  mutable std::mutex cache_mu_;
  mutable std::vector<RingElem> sigma_pow2_;       // [j] = alpha^(sigma^(2^j))
  mutable std::map<unsigned, RingElem> sigma_alpha_cache_;
};

// Exact integer logs: smallest c with p^c >= v, largest f with p^f <= v.
unsigned ceil_log_p(uint64_t p, const mpz_class& v);
unsigned floor_log_p(uint64_t p, const mpz_class& v);

}  // namespace hz
