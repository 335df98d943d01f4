#include "hz/poly_ring.hpp"

namespace hz {

int poly_degree(const RingCtx& R, const PolyR& a) {
  for (int i = static_cast<int>(a.c.size()) - 1; i >= 0; --i)
    if (!R.is_zero(a.c[i])) return i;
  return -1;
}

PolyR poly_zero() { return {}; }

PolyR poly_one(const RingCtx& R) {
  PolyR p;
  p.c.push_back(R.one());
  return p;
}

PolyR poly_monomial(const RingCtx& R, RingElem coeff, unsigned degree) {
  PolyR p;
  p.c.assign(degree + 1, R.zero());
  p.c[degree] = std::move(coeff);
  return p;
}

RingElem poly_coeff(const RingCtx& R, const PolyR& a, size_t i) {
  if (i < a.c.size()) return a.c[i];
  return R.zero();
}

bool poly_is_zero(const RingCtx& R, const PolyR& a) {
  return poly_degree(R, a) < 0;
}

bool poly_eq(const RingCtx& R, const PolyR& a, const PolyR& b) {
  size_t m = std::max(a.c.size(), b.c.size());
  for (size_t i = 0; i < m; ++i)
    if (!(poly_coeff(R, a, i) == poly_coeff(R, b, i))) return false;
  return true;
}

void poly_trim(const RingCtx& R, PolyR& a) {
  while (!a.c.empty() && R.is_zero(a.c.back())) a.c.pop_back();
}

PolyR poly_add(const RingCtx& R, const PolyR& a, const PolyR& b) {
  PolyR r;
  r.c.resize(std::max(a.c.size(), b.c.size()), R.zero());
  for (size_t i = 0; i < r.c.size(); ++i) {
    if (i < a.c.size() && i < b.c.size())
      r.c[i] = R.add(a.c[i], b.c[i]);
    else if (i < a.c.size())
      r.c[i] = a.c[i];
    else
      r.c[i] = b.c[i];
  }
  return r;
}

PolyR poly_sub(const RingCtx& R, const PolyR& a, const PolyR& b) {
  PolyR r;
  r.c.resize(std::max(a.c.size(), b.c.size()), R.zero());
  for (size_t i = 0; i < r.c.size(); ++i) {
    RingElem ai = i < a.c.size() ? a.c[i] : R.zero();
    if (i < b.c.size())
      r.c[i] = R.sub(ai, b.c[i]);
    else
      r.c[i] = std::move(ai);
  }
  return r;
}

PolyR poly_neg(const RingCtx& R, const PolyR& a) {
  PolyR r;
  r.c.reserve(a.c.size());
  for (const auto& e : a.c) r.c.push_back(R.neg(e));
  return r;
}

PolyR poly_mul(const RingCtx& R, const PolyR& a, const PolyR& b) {
  int da = poly_degree(R, a), db = poly_degree(R, b);
  PolyR r;
  if (da < 0 || db < 0) return r;
  r.c.resize(da + db + 1, R.zero());
  unsigned n = R.n();
  std::vector<mpz_class> acc(2 * n - 1);
  for (int k = 0; k <= da + db; ++k) {
    for (auto& v : acc) v = 0;
    int lo = std::max(0, k - db);
    int hi = std::min(da, k);
    for (int i = lo; i <= hi; ++i) R.mul_acc_raw(a.c[i], b.c[k - i], acc);
    r.c[k] = R.finalize_raw(acc);
  }
  return r;
}

PolyR poly_scale(const RingCtx& R, const PolyR& a, const RingElem& s) {
  PolyR r;
  r.c.reserve(a.c.size());
  for (const auto& e : a.c) r.c.push_back(R.mul(e, s));
  return r;
}

PolyR poly_mul_small(const RingCtx& R, const PolyR& a, long s) {
  PolyR r;
  r.c.reserve(a.c.size());
  for (const auto& e : a.c) r.c.push_back(R.mul_small(e, s));
  return r;
}

PolyR poly_shift(const PolyR& a, unsigned k) {
  PolyR r;
  if (a.c.empty()) return r;
  r.c.resize(a.c.size() + k);
  for (size_t i = 0; i < k; ++i) r.c[i].c.assign(a.c[0].c.size(), mpz_class(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
  return r;
}

PolyR poly_derivative(const RingCtx& R, const PolyR& a) {
  PolyR r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = R.mul_small(a.c[i], static_cast<long>(i));
  return r;
}

RingElem poly_eval(const RingCtx& R, const PolyR& a, const RingElem& x) {
  RingElem acc = R.zero();
  for (size_t i = a.c.size(); i-- > 0;) acc = R.add(R.mul(acc, x), a.c[i]);
  return acc;
}

PolyR poly_frobenius(const RingCtx& R, const PolyR& a, unsigned k) {
  PolyR r;
  r.c.reserve(a.c.size());
  for (const auto& e : a.c) r.c.push_back(R.frobenius(e, k));
  return r;
}

PolyR poly_divide_by_odd(const RingCtx& R, const PolyR& a, uint64_t d) {
  PolyR r;
  r.c.reserve(a.c.size());
  for (const auto& e : a.c) r.c.push_back(R.divide_by_odd(e, d));
  return r;
}

unsigned poly_valuation(const RingCtx& R, const PolyR& a) {
  unsigned v = R.N();
  for (const auto& e : a.c) v = std::min(v, R.valuation(e));
  return v;
}

std::pair<PolyR, PolyR> poly_divrem(const RingCtx& R, const PolyR& a,
                                    const PolyR& b) {
  int db = poly_degree(R, b);
  if (db < 0) fail(Errc::DivisionByZero, "polynomial division by zero");
  if (R.valuation(b.c[db]) != 0)
    fail(Errc::NonUnitLeadingCoefficient,
         "divisor leading coefficient is not a unit");
  RingElem lead_inv = R.inv(b.c[db]);
  PolyR rem = a;
  poly_trim(R, rem);
  int dr = poly_degree(R, rem);
  PolyR quo;
  if (dr >= db) quo.c.assign(dr - db + 1, R.zero());
  for (int i = dr; i >= db; --i) {
    if (R.is_zero(rem.c[i])) continue;
    RingElem q = R.mul(rem.c[i], lead_inv);
    for (int j = 0; j <= db; ++j)
      rem.c[i - db + j] = R.sub(rem.c[i - db + j], R.mul(q, b.c[j]));
    quo.c[i - db] = std::move(q);
  }
  if (static_cast<int>(rem.c.size()) > db) rem.c.resize(db);
  return {std::move(quo), std::move(rem)};
}

PolyR poly_div_exact(const RingCtx& R, const PolyR& a, const PolyR& b) {
  auto [q, r] = poly_divrem(R, a, b);
  if (!poly_is_zero(R, r))
    fail(Errc::InexactDivision, "expected exact polynomial division");
  return q;
}

BezoutPair bezout_precompute(const RingCtx& R, const PolyR& Q) {
  int dq = poly_degree(R, Q);
  if (dq < 3 || dq % 2 == 0)
    fail(Errc::WrongDegree, "Q must have odd degree 2g+1 >= 3");
  if (!(Q.c[dq] == R.one())) fail(Errc::NotMonic, "Q must be monic");
  unsigned g = static_cast<unsigned>((dq - 1) / 2);

  const FieldCtx& F = R.residue_field();
  FFPoly Qbar(dq + 1), dQbar;
  for (int i = 0; i <= dq; ++i) Qbar[i] = R.reduce_modp(Q.c[i]);
  dQbar = ff_poly_derivative(F, Qbar);
  FFExtGcd eg = ff_poly_ext_gcd(F, Qbar, dQbar);
  if (ff_poly_degree(F, eg.g) != 0)
    fail(Errc::NotCoprime, "gcd(Q, Q') mod p is not constant");

  BezoutPair pair;
  pair.R.c.resize(eg.u.size());
  for (size_t i = 0; i < eg.u.size(); ++i) pair.R.c[i] = R.lift(eg.u[i]);
  pair.S.c.resize(eg.v.size());
  for (size_t i = 0; i < eg.v.size(); ++i) pair.S.c[i] = R.lift(eg.v[i]);

  PolyR Qp = poly_derivative(R, Q);
  PolyR one = poly_one(R);
  // Newton update: residual e = 1 - RQ - SQ' drops as e^2 each round.
  unsigned rounds = 1;
  while ((1u << rounds) < R.N()) ++rounds;
  for (unsigned it = 0; it <= rounds + 1; ++it) {
    PolyR e = poly_sub(R, one,
                       poly_add(R, poly_mul(R, pair.R, Q), poly_mul(R, pair.S, Qp)));
    if (poly_is_zero(R, e)) break;
    auto [u_unused, dS] = poly_divrem(R, poly_mul(R, e, pair.S), Q);
    (void)u_unused;
    auto [dR, rem] = poly_divrem(R, poly_sub(R, e, poly_mul(R, dS, Qp)), Q);
    (void)rem;  // the O(e^2) tail, absorbed into the next round's residual
    pair.R = poly_add(R, pair.R, dR);
    pair.S = poly_add(R, pair.S, dS);
  }
  PolyR check = poly_sub(R, one,
                         poly_add(R, poly_mul(R, pair.R, Q), poly_mul(R, pair.S, Qp)));
  if (!poly_is_zero(R, check))
    fail(Errc::ConvergenceFailure, "Bezout pair lift did not reach full precision");
  if (poly_degree(R, pair.R) > static_cast<int>(2 * g - 1) ||
      poly_degree(R, pair.S) > static_cast<int>(2 * g))
    fail(Errc::SanityCheckFailed, "Bezout pair degree bounds violated");
  poly_trim(R, pair.R);
  poly_trim(R, pair.S);
  return pair;
}

std::pair<PolyR, PolyR> split_by_bezout(const RingCtx& R, const PolyR& T,
                                        const PolyR& Q, const PolyR& Qp,
                                        const BezoutPair& pair) {
  auto [u, B] = poly_divrem(R, poly_mul(R, T, pair.S), Q);
  (void)u;
  PolyR A = poly_div_exact(R, poly_sub(R, T, poly_mul(R, B, Qp)), Q);
  return {std::move(A), std::move(B)};
}

}  // namespace hz
