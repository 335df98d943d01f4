#include "hz/padic_ring.hpp"

#include <cassert>

namespace hz {

RingCtx::RingCtx(uint64_t p, unsigned n, unsigned N, FpPoly pbar)
    : p_(p), n_(n), N_(N), field_(static_cast<uint32_t>(p), std::move(pbar)) {
  if (p % 2 == 0) fail(Errc::EvenCharacteristic, "p must be odd");
  if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
  if (n < 1 || N < 1) fail(Errc::InvalidInput, "need n >= 1 and N >= 1");
  if (field_.degree() != n)
    fail(Errc::WrongDegree, "defining polynomial degree != n");

  p_pows_.resize(N_ + 1);
  p_pows_[0] = 1;
  for (unsigned k = 1; k <= N_; ++k) p_pows_[k] = p_pows_[k - 1] * static_cast<unsigned long>(p_);
  pN_ = p_pows_[N_];
  mpz_ui_pow_ui(q_.get_mpz_t(), static_cast<unsigned long>(p_), n_);

  // integer lift of the defining polynomial, coefficients in [0, p)
  P_.resize(n_ + 1);
  for (unsigned i = 0; i <= n_; ++i) P_[i] = field_.modulus()[i];

  // reduction rows: x^(n+j) mod (P, p^N) for j = 0..n-2
  if (n_ >= 2) {
    red_rows_.resize(n_ - 1);
    std::vector<mpz_class> cur(n_);  // x^n mod P = -(low part of P)
    for (unsigned i = 0; i < n_; ++i) cur[i] = (pN_ - P_[i]) % pN_;
    red_rows_[0] = cur;
    for (unsigned j = 1; j + 1 < n_; ++j) {
      // multiply by x, reduce the spilled top coefficient through row 0
      std::vector<mpz_class> nxt(n_);
      for (unsigned i = 0; i + 1 < n_; ++i) nxt[i + 1] = cur[i];
      mpz_class top = cur[n_ - 1];
      for (unsigned i = 0; i < n_; ++i)
        nxt[i] = (nxt[i] + top * red_rows_[0][i]) % pN_;
      red_rows_[j] = nxt;
      cur = std::move(nxt);
    }
  }

  mpz_class two_inv;
  mpz_class two = 2;
  mpz_invert(two_inv.get_mpz_t(), two.get_mpz_t(), pN_.get_mpz_t());
  inv2_ = from_mpz(two_inv);
}

RingElem RingCtx::zero() const {
  RingElem e;
  e.c.assign(n_, mpz_class(0));
  return e;
}

RingElem RingCtx::one() const { return from_int(1); }

RingElem RingCtx::alpha() const {
  RingElem e = zero();
  if (n_ >= 2) e.c[1] = 1;
  // n = 1: alpha is the class of x modulo a monic linear polynomial
  else e.c[0] = (pN_ - P_[0]) % pN_;
  return e;
}

RingElem RingCtx::from_int(long v) const {
  RingElem e = zero();
  mpz_class z = v;
  mpz_mod(e.c[0].get_mpz_t(), z.get_mpz_t(), pN_.get_mpz_t());
  return e;
}

RingElem RingCtx::from_mpz(const mpz_class& v) const {
  RingElem e = zero();
  mpz_mod(e.c[0].get_mpz_t(), v.get_mpz_t(), pN_.get_mpz_t());
  return e;
}

RingElem RingCtx::from_residues(std::vector<mpz_class> r) const {
  if (r.size() != n_) fail(Errc::InvalidInput, "coordinate count != n");
  for (auto& v : r) {
    mpz_class t;
    mpz_mod(t.get_mpz_t(), v.get_mpz_t(), pN_.get_mpz_t());
    v = t;
  }
  RingElem e;
  e.c = std::move(r);
  return e;
}

bool RingCtx::is_zero(const RingElem& a) const {
  for (const auto& v : a.c)
    if (v != 0) return false;
  return true;
}

RingElem RingCtx::add(const RingElem& a, const RingElem& b) const {
  RingElem r = a;
  add_inplace(r, b);
  return r;
}

void RingCtx::add_inplace(RingElem& a, const RingElem& b) const {
  for (unsigned i = 0; i < n_; ++i) {
    a.c[i] += b.c[i];
    if (a.c[i] >= pN_) a.c[i] -= pN_;
  }
}

RingElem RingCtx::sub(const RingElem& a, const RingElem& b) const {
  RingElem r;
  r.c.resize(n_);
  for (unsigned i = 0; i < n_; ++i) {
    r.c[i] = a.c[i] - b.c[i];
    if (r.c[i] < 0) r.c[i] += pN_;
  }
  return r;
}

RingElem RingCtx::neg(const RingElem& a) const {
  RingElem r;
  r.c.resize(n_);
  for (unsigned i = 0; i < n_; ++i) {
    if (a.c[i] == 0)
      r.c[i] = 0;
    else
      r.c[i] = pN_ - a.c[i];
  }
  return r;
}

void RingCtx::mul_acc_raw(const RingElem& a, const RingElem& b,
                          std::vector<mpz_class>& acc) const {
  for (unsigned i = 0; i < n_; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      if (b.c[j] == 0) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
  }
}

RingElem RingCtx::finalize_raw(std::vector<mpz_class>& acc) const {
  RingElem r = zero();
  for (unsigned d = n_; d <= 2 * n_ - 2 && n_ >= 2; ++d) {
    if (acc[d] == 0) continue;
    const auto& row = red_rows_[d - n_];
    for (unsigned j = 0; j < n_; ++j)
      if (row[j] != 0) mpz_addmul(acc[j].get_mpz_t(), acc[d].get_mpz_t(), row[j].get_mpz_t());
  }
  for (unsigned j = 0; j < n_; ++j)
    mpz_mod(r.c[j].get_mpz_t(), acc[j].get_mpz_t(), pN_.get_mpz_t());
  return r;
}

RingElem RingCtx::mul(const RingElem& a, const RingElem& b) const {
  if (n_ == 1) {
    RingElem r = zero();
    mpz_class t = a.c[0] * b.c[0];
    mpz_mod(r.c[0].get_mpz_t(), t.get_mpz_t(), pN_.get_mpz_t());
    return r;
  }
  std::vector<mpz_class> acc(2 * n_ - 1);
  mul_acc_raw(a, b, acc);
  return finalize_raw(acc);
}

RingElem RingCtx::mul_small(const RingElem& a, long s) const {
  RingElem r;
  r.c.resize(n_);
  mpz_class z = s;
  for (unsigned i = 0; i < n_; ++i) {
    mpz_class t = a.c[i] * z;
    mpz_mod(r.c[i].get_mpz_t(), t.get_mpz_t(), pN_.get_mpz_t());
  }
  return r;
}

RingElem RingCtx::inv(const RingElem& a) const {
  FFElem abar = reduce_modp(a);
  if (field_.is_zero(abar)) fail(Errc::NotAUnit, "element is 0 mod p");
  RingElem x = lift(field_.inv(abar));
  // x <- x(2 - ax), doubling the correct precision each step
  unsigned correct = 1;
  while (correct < N_) {
    RingElem t = mul(a, x);
    RingElem two_minus = sub(from_int(2), t);
    x = mul(x, two_minus);
    correct *= 2;
  }
  if (!(mul(a, x) == one()))
    fail(Errc::SanityCheckFailed, "inverse lift did not converge");
  return x;
}

FFElem RingCtx::reduce_modp(const RingElem& a) const {
  FFElem b(n_);
  for (unsigned i = 0; i < n_; ++i) {
    mpz_class t;
    mpz_mod_ui(t.get_mpz_t(), a.c[i].get_mpz_t(), static_cast<unsigned long>(p_));
    b[i] = static_cast<uint32_t>(t.get_ui());
  }
  return b;
}

RingElem RingCtx::lift(const FFElem& b) const {
  if (b.size() != n_) fail(Errc::InvalidInput, "residue coordinate count != n");
  RingElem e = zero();
  for (unsigned i = 0; i < n_; ++i) e.c[i] = b[i];
  return e;
}

unsigned RingCtx::valuation_mpz(const mpz_class& v) const {
  if (v == 0) return N_;
  mpz_class t = v;
  unsigned k = 0;
  while (k < N_ && mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p_))) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p_));
    ++k;
  }
  return k;
}

unsigned RingCtx::valuation(const RingElem& a) const {
  unsigned v = N_;
  for (const auto& c : a.c) v = std::min(v, valuation_mpz(c));
  return v;
}

mpz_class RingCtx::divide_residue_by_odd(const mpz_class& c, uint64_t d) const {
  unsigned v = 0;
  uint64_t u = d;
  while (u % p_ == 0) {
    u /= p_;
    ++v;
  }
  mpz_class q0 = c;
  if (v > 0) {
    if (v >= N_)
      fail(Errc::NonIntegralReduction,
           "divisor p-valuation exceeds working precision");
    if (!mpz_divisible_p(c.get_mpz_t(), p_pows_[v].get_mpz_t()))
      fail(Errc::NonIntegralReduction,
           "residue not divisible by p^" + std::to_string(v));
    mpz_divexact(q0.get_mpz_t(), c.get_mpz_t(), p_pows_[v].get_mpz_t());
  }
  if (u != 1) {
    mpz_class uz(static_cast<unsigned long>(u)), uinv;
    mpz_invert(uinv.get_mpz_t(), uz.get_mpz_t(), pN_.get_mpz_t());
    q0 *= uinv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), q0.get_mpz_t(), pN_.get_mpz_t());
  return r;
}

RingElem RingCtx::divide_by_odd(const RingElem& a, uint64_t d) const {
  RingElem r;
  r.c.resize(n_);
  for (unsigned i = 0; i < n_; ++i) r.c[i] = divide_residue_by_odd(a.c[i], d);
  return r;
}

RingElem RingCtx::mul_pow_p(const RingElem& a, unsigned e) const {
  if (e == 0) return a;
  RingElem r;
  r.c.resize(n_);
  for (unsigned i = 0; i < n_; ++i) {
    mpz_class t = a.c[i] * p_pows_[std::min(e, N_)];
    mpz_mod(r.c[i].get_mpz_t(), t.get_mpz_t(), pN_.get_mpz_t());
  }
  return r;
}

RingElem RingCtx::div_pow_p(const RingElem& a, unsigned e) const {
  if (e == 0) return a;
  if (e >= N_)
    fail(Errc::NonIntegralReduction, "scaling exponent exceeds working precision");
  RingElem r;
  r.c.resize(n_);
  for (unsigned i = 0; i < n_; ++i) {
    if (!mpz_divisible_p(a.c[i].get_mpz_t(), p_pows_[e].get_mpz_t()))
      fail(Errc::NonIntegralReduction,
           "residue not divisible by p^" + std::to_string(e));
    mpz_divexact(r.c[i].get_mpz_t(), a.c[i].get_mpz_t(), p_pows_[e].get_mpz_t());
  }
  return r;
}

unsigned ceil_log_p(uint64_t p, const mpz_class& v) {
  unsigned c = 0;
  mpz_class pw = 1;
  while (pw < v) {
    pw *= static_cast<unsigned long>(p);
    ++c;
  }
  return c;
}

unsigned floor_log_p(uint64_t p, const mpz_class& v) {
  unsigned f = 0;
  mpz_class pw = static_cast<unsigned long>(p);
  while (pw <= v) {
    pw *= static_cast<unsigned long>(p);
    ++f;
  }
  return f;
}

RingElem RingCtx::eval_coords_at(const RingElem& a, const RingElem& beta) const {
  RingElem acc = zero();
  acc.c[0] = a.c[n_ - 1];
  for (unsigned i = n_ - 1; i-- > 0;) {
    acc = mul(acc, beta);
    acc.c[0] += a.c[i];
    if (acc.c[0] >= pN_) acc.c[0] -= pN_;
  }
  return acc;
}

namespace {

// P and P' evaluated at beta with plain ring arithmetic.
RingElem eval_int_poly(const RingCtx& R, const std::vector<mpz_class>& P,
                       const RingElem& beta) {
  RingElem acc = R.zero();
  for (size_t i = P.size(); i-- > 0;) {
    acc = R.mul(acc, beta);
    acc = R.add(acc, R.from_mpz(P[i]));
  }
  return acc;
}

}  // namespace

RingElem RingCtx::sigma_alpha_base() const {
  // residue-field image: alphabar^p by repeated squaring
  FFElem abar_p = field_.pow(field_.gen(), mpz_class(static_cast<unsigned long>(p_)));
  RingElem beta = lift(abar_p);

  std::vector<mpz_class> Pc = P_;
  std::vector<mpz_class> dPc(n_);
  for (unsigned i = 1; i <= n_; ++i) dPc[i - 1] = mpz_class(i) * P_[i];

  // Newton: beta <- beta - P(beta)/P'(beta); P'(beta) is a unit because the
  // residue polynomial is separable.
  unsigned correct = 1;
  while (correct < N_) {
    RingElem val = eval_int_poly(*this, Pc, beta);
    RingElem der = eval_int_poly(*this, dPc, beta);
    beta = sub(beta, mul(val, inv(der)));
    correct *= 2;
  }
  if (!is_zero(eval_int_poly(*this, Pc, beta)))
    fail(Errc::SanityCheckFailed, "sigma(alpha) Newton lift did not converge");
  return beta;
}

const RingElem& RingCtx::sigma_pow2_image(unsigned j) const {
  // caller holds cache_mu_
  while (sigma_pow2_.size() <= j) {
    if (sigma_pow2_.empty()) {
      sigma_pow2_.push_back(sigma_alpha_base());
    } else {
      const RingElem& prev = sigma_pow2_.back();
      sigma_pow2_.push_back(eval_coords_at(prev, prev));
    }
  }
  return sigma_pow2_[j];
}

RingElem RingCtx::sigma_alpha_power(unsigned k) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto it = sigma_alpha_cache_.find(k);
  if (it != sigma_alpha_cache_.end()) return it->second;
  RingElem beta = alpha();
  unsigned bit = 0;
  for (unsigned rest = k; rest != 0; rest >>= 1, ++bit) {
    if (rest & 1u) {
      const RingElem& img = sigma_pow2_image(bit);
      beta = eval_coords_at(beta, img);
    }
  }
  sigma_alpha_cache_.emplace(k, beta);
  return beta;
}

RingElem RingCtx::frobenius(const RingElem& a, unsigned k) const {
  k %= n_;
  if (k == 0 || n_ == 1) return a;
  RingElem beta = sigma_alpha_power(k);
  return eval_coords_at(a, beta);
}

}  // namespace hz
