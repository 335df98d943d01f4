#include "hz/finite_field.hpp"

#include <algorithm>
#include <cstring>

namespace hz {

bool is_prime(uint64_t v) {
  mpz_class z(static_cast<unsigned long>(v));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

namespace {

uint32_t fp_inv_scalar(uint32_t a, uint32_t p) {
  if (a % p == 0) fail(Errc::DivisionByZero, "inverse of 0 in F_p");
  // extended Euclid on (a, p)
  int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

}  // namespace

int fp_poly_degree(const FpPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b, uint32_t p) {
  int da = fp_poly_degree(a), db = fp_poly_degree(b);
  if (da < 0 || db < 0) return {};
  FpPoly out(da + db + 1, 0);
  for (int i = 0; i <= da; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= db; ++j)
      out[i + j] = static_cast<uint32_t>(
          (out[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  }
  return out;
}

FpPoly fp_poly_mod(FpPoly a, const FpPoly& f, uint32_t p) {
  int df = fp_poly_degree(f);
  if (df < 0) fail(Errc::DivisionByZero, "polynomial modulus is zero");
  // monic divisor assumed
  for (int i = fp_poly_degree(a); i >= df; --i) {
    uint64_t c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= df; ++j) {
      uint64_t sub = c * f[j] % p;
      uint64_t cur = a[i - df + j];
      a[i - df + j] = static_cast<uint32_t>((cur + p - sub) % p);
    }
  }
  if (static_cast<int>(a.size()) > df) a.resize(df);
  return a;
}

FpPoly fp_poly_gcd(FpPoly a, FpPoly b, uint32_t p) {
  fp_trim(a);
  fp_trim(b);
  while (fp_poly_degree(b) >= 0) {
    // make b monic so fp_poly_mod applies
    uint32_t lead = b[fp_poly_degree(b)];
    if (lead != 1) {
      uint32_t il = fp_inv_scalar(lead, p);
      for (auto& c : b) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * il % p);
    }
    FpPoly r = fp_poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
    fp_trim(b);
  }
  fp_trim(a);
  int d = fp_poly_degree(a);
  if (d >= 0 && a[d] != 1) {
    uint32_t il = fp_inv_scalar(a[d], p);
    for (auto& c : a) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * il % p);
  }
  return a;
}

namespace {

// x^(p^k) mod f for k = 1..m, by iterated p-th powers of the previous image.
FpPoly fp_powmod_p(const FpPoly& base, uint32_t p, const FpPoly& f) {
  FpPoly result{1};
  FpPoly sq = base;
  uint32_t e = p;
  while (e > 0) {
    if (e & 1u) result = fp_poly_mod(fp_poly_mul(result, sq, p), f, p);
    e >>= 1u;
    if (e) sq = fp_poly_mod(fp_poly_mul(sq, sq, p), f, p);
  }
  return result;
}

}  // namespace

bool fp_poly_is_irreducible(const FpPoly& f, uint32_t p) {
  int m = fp_poly_degree(f);
  if (m <= 0) return false;
  if (f[m] != 1) return false;
  if (m == 1) return true;
  FpPoly x{0, 1};
  // frob[k] = x^(p^(k+1)) mod f
  std::vector<FpPoly> frob;
  FpPoly cur = x;
  for (int k = 1; k <= m; ++k) {
    cur = fp_powmod_p(cur, p, f);
    frob.push_back(cur);
  }
  FpPoly xm = frob[m - 1];
  fp_trim(xm);
  FpPoly xr = x;
  fp_trim(xr);
  if (xm != xr) return false;
  for (int d = 2; d <= m; ++d) {
    if (m % d != 0) continue;
    if (!is_prime(static_cast<uint64_t>(d))) continue;
    // proper subfield degree m/d
    FpPoly diff = frob[m / d - 1];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
    FpPoly g = fp_poly_gcd(diff, f, p);
    if (fp_poly_degree(g) != 0) return false;
  }
  return true;
}

FpPoly random_monic_irreducible(uint32_t p, unsigned m, std::mt19937_64& rng) {
  if (m == 1) return FpPoly{0, 1};
  std::uniform_int_distribution<uint32_t> dist(0, p - 1);
  for (;;) {
    FpPoly f(m + 1, 0);
    for (unsigned i = 0; i < m; ++i) f[i] = dist(rng);
    f[m] = 1;
    if (fp_poly_is_irreducible(f, p)) return f;
  }
}

FieldCtx::FieldCtx(uint32_t p, FpPoly modulus) : p_(p), modulus_(std::move(modulus)) {
  if (p % 2 == 0) fail(Errc::EvenCharacteristic, "p must be odd");
  if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
  int d = fp_poly_degree(modulus_);
  if (d < 1) fail(Errc::InvalidInput, "defining polynomial must have degree >= 1");
  for (uint32_t c : modulus_)
    if (c >= p) fail(Errc::InvalidInput, "defining polynomial coefficients must lie in [0, p)");
  if (modulus_[d] != 1) fail(Errc::NotMonic, "defining polynomial must be monic");
  modulus_.resize(d + 1);
  if (!fp_poly_is_irreducible(modulus_, p))
    fail(Errc::ReduciblePolynomial, "defining polynomial is reducible over F_p");
  m_ = static_cast<unsigned>(d);
  mpz_ui_pow_ui(order_.get_mpz_t(), p_, m_);
}

FieldCtx FieldCtx::prime_field(uint32_t p) { return FieldCtx(p, FpPoly{0, 1}); }

FFElem FieldCtx::one() const {
  FFElem e(m_, 0);
  e[0] = 1;
  return e;
}

FFElem FieldCtx::from_uint(uint64_t v) const {
  FFElem e(m_, 0);
  e[0] = static_cast<uint32_t>(v % p_);
  return e;
}

FFElem FieldCtx::gen() const {
  FFElem e(m_, 0);
  if (m_ >= 2)
    e[1] = 1;
  else
    e[0] = static_cast<uint32_t>((p_ - modulus_[0]) % p_);  // root of monic linear
  return e;
}

bool FieldCtx::is_zero(const FFElem& a) const {
  for (uint32_t c : a)
    if (c != 0) return false;
  return true;
}

FFElem FieldCtx::add(const FFElem& a, const FFElem& b) const {
  FFElem r(m_);
  for (unsigned i = 0; i < m_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FFElem FieldCtx::sub(const FFElem& a, const FFElem& b) const {
  FFElem r(m_);
  for (unsigned i = 0; i < m_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

FFElem FieldCtx::neg(const FFElem& a) const {
  FFElem r(m_);
  for (unsigned i = 0; i < m_; ++i) r[i] = (p_ - a[i]) % p_;
  return r;
}

FFElem FieldCtx::mul(const FFElem& a, const FFElem& b) const {
  FpPoly prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j)
      prod[i + j] = static_cast<uint32_t>(
          (prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p_);
  }
  FpPoly red = fp_poly_mod(std::move(prod), modulus_, p_);
  red.resize(m_, 0);
  return red;
}

FFElem FieldCtx::pow(FFElem a, const mpz_class& e) const {
  FFElem result = one();
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mul(result, a);
    k >>= 1;
    if (k > 0) a = mul(a, a);
  }
  return result;
}

FFElem FieldCtx::inv(const FFElem& a) const {
  if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero field element");
  mpz_class e = order_ - 2;
  return pow(a, e);
}

int FieldCtx::quadratic_character(const FFElem& a) const {
  if (is_zero(a)) return 0;
  mpz_class e = (order_ - 1) / 2;
  FFElem r = pow(a, e);
  return r == one() ? 1 : -1;
}

uint64_t FieldCtx::index_of(const FFElem& a) const {
  uint64_t idx = 0;
  for (unsigned i = m_; i-- > 0;) idx = idx * p_ + a[i];
  return idx;
}

FFElem FieldCtx::element_of_index(uint64_t idx) const {
  FFElem e(m_);
  for (unsigned i = 0; i < m_; ++i) {
    e[i] = static_cast<uint32_t>(idx % p_);
    idx /= p_;
  }
  return e;
}

bool FieldCtx::next_element(FFElem& a) const {
  for (unsigned i = 0; i < m_; ++i) {
    if (++a[i] < p_) return true;
    a[i] = 0;
  }
  return false;
}

int ff_poly_degree(const FieldCtx& F, const FFPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (!F.is_zero(f[i])) return i;
  return -1;
}

FFPoly ff_poly_derivative(const FieldCtx& F, const FFPoly& f) {
  if (f.size() <= 1) return {};
  FFPoly d(f.size() - 1, F.zero());
  for (size_t i = 1; i < f.size(); ++i) {
    FFElem s = F.from_uint(i % F.p());
    FFElem term = F.mul(f[i], s);
    d[i - 1] = term;
  }
  return d;
}

namespace {

void ff_trim(const FieldCtx& F, FFPoly& f) {
  while (!f.empty() && F.is_zero(f.back())) f.pop_back();
}

FFPoly ff_make_monic(const FieldCtx& F, FFPoly f) {
  int d = ff_poly_degree(F, f);
  if (d < 0) return f;
  FFElem il = F.inv(f[d]);
  for (auto& c : f) c = F.mul(c, il);
  return f;
}

// remainder of a by monic b
FFPoly ff_poly_mod_monic(const FieldCtx& F, FFPoly a, const FFPoly& b) {
  int db = ff_poly_degree(F, b);
  for (int i = ff_poly_degree(F, a); i >= db; --i) {
    FFElem c = a[i];
    if (F.is_zero(c)) continue;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]));
  }
  ff_trim(F, a);
  return a;
}

FFPoly ff_poly_mul_(const FieldCtx& F, const FFPoly& a, const FFPoly& b) {
  int da = ff_poly_degree(F, a), db = ff_poly_degree(F, b);
  if (da < 0 || db < 0) return {};
  FFPoly out(da + db + 1, F.zero());
  for (int i = 0; i <= da; ++i) {
    if (F.is_zero(a[i])) continue;
    for (int j = 0; j <= db; ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return out;
}

FFPoly ff_poly_sub_(const FieldCtx& F, FFPoly a, const FFPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), F.zero());
  for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  return a;
}

}  // namespace

FFPoly ff_poly_gcd(const FieldCtx& F, FFPoly a, FFPoly b) {
  ff_trim(F, a);
  ff_trim(F, b);
  while (ff_poly_degree(F, b) >= 0) {
    FFPoly bm = ff_make_monic(F, b);
    FFPoly r = ff_poly_mod_monic(F, a, bm);
    a = std::move(bm);
    b = std::move(r);
  }
  return ff_make_monic(F, a);
}

FFElem ff_poly_eval(const FieldCtx& F, const FFPoly& f, const FFElem& x) {
  FFElem acc = F.zero();
  for (size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

FFExtGcd ff_poly_ext_gcd(const FieldCtx& F, const FFPoly& a, const FFPoly& b) {
  FFPoly r0 = a, r1 = b;
  FFPoly u0{F.one()}, u1{};
  FFPoly v0{}, v1{F.one()};
  ff_trim(F, r0);
  ff_trim(F, r1);
  while (ff_poly_degree(F, r1) >= 0) {
    // divide r0 by r1
    FFPoly q;
    {
      FFPoly rem = r0;
      int d1 = ff_poly_degree(F, r1);
      FFElem il = F.inv(r1[d1]);
      int dr = ff_poly_degree(F, rem);
      if (dr >= d1) q.assign(dr - d1 + 1, F.zero());
      for (int i = dr; i >= d1; --i) {
        if (F.is_zero(rem[i])) continue;
        FFElem c = F.mul(rem[i], il);
        q[i - d1] = c;
        for (int j = 0; j <= d1; ++j)
          rem[i - d1 + j] = F.sub(rem[i - d1 + j], F.mul(c, r1[j]));
      }
      ff_trim(F, rem);
      r0 = std::move(r1);
      r1 = std::move(rem);
    }
    FFPoly qu = ff_poly_mul_(F, q, u1);
    FFPoly qv = ff_poly_mul_(F, q, v1);
    FFPoly nu = ff_poly_sub_(F, u0, qu);
    FFPoly nv = ff_poly_sub_(F, v0, qv);
    u0 = std::move(u1);
    u1 = std::move(nu);
    v0 = std::move(v1);
    v1 = std::move(nv);
  }
  // normalize gcd monic
  int d = ff_poly_degree(F, r0);
  if (d >= 0 && !(r0[d] == F.one())) {
    FFElem il = F.inv(r0[d]);
    for (auto& c : r0) c = F.mul(c, il);
    for (auto& c : u0) c = F.mul(c, il);
    for (auto& c : v0) c = F.mul(c, il);
  }
  return {r0, u0, v0};
}

void validate_curve(const CurveData& c) {
  const FieldCtx& F = c.field;
  int d = ff_poly_degree(F, c.Q);
  if (d != static_cast<int>(2 * c.genus + 1))
    fail(Errc::WrongDegree, "Q must have degree 2g+1 = " +
                                std::to_string(2 * c.genus + 1) + ", got " +
                                std::to_string(d));
  if (!(c.Q[d] == F.one())) fail(Errc::NotMonic, "Q must be monic");
  FFPoly dq = ff_poly_derivative(F, c.Q);
  FFPoly g = ff_poly_gcd(F, c.Q, dq);
  if (ff_poly_degree(F, g) != 0)
    fail(Errc::NotSquarefree, "gcd(Q, Q') is not constant");
}

namespace {

// First root of an F_p-coefficient polynomial in F, by exhaustive search.
FFElem find_root(const FieldCtx& F, const FpPoly& f) {
  int d = fp_poly_degree(f);
  if (d == 1) {
    // x + c0 -> root -c0 (f is monic)
    return F.from_uint((F.p() - f[0]) % F.p());
  }
  FFElem x = F.zero();
  do {
    FFElem acc = F.zero();
    for (int i = d; i >= 0; --i) acc = F.add(F.mul(acc, x), F.from_uint(f[i]));
    if (F.is_zero(acc)) return x;
  } while (F.next_element(x));
  fail(Errc::SanityCheckFailed, "defining polynomial has no root in extension field");
}

}  // namespace

uint64_t count_points_oracle(const CurveData& c, unsigned ext, uint64_t guard,
                             const FpPoly* big_modulus) {
  if (ext < 1) fail(Errc::InvalidInput, "extension degree must be >= 1");
  const FieldCtx& base = c.field;
  unsigned m = base.degree() * ext;
  mpz_class big_order;
  mpz_ui_pow_ui(big_order.get_mpz_t(), base.p(), m);
  if (big_order > guard)
    fail(Errc::FieldTooLarge, "p^(n*i) = " + big_order.get_str() +
                                  " exceeds the oracle guard " +
                                  std::to_string(guard));

  FieldCtx big = [&]() {
    if (big_modulus) return FieldCtx(base.p(), *big_modulus);
    if (ext == 1) return base;
    std::mt19937_64 rng(0x5eedULL * m + base.p());
    return FieldCtx(base.p(), random_monic_irreducible(base.p(), m, rng));
  }();

  // Embed the base field through a root of its defining polynomial.
  FFElem rho = (ext == 1) ? big.gen() : find_root(big, base.modulus());
  auto embed = [&](const FFElem& a) {
    FFElem acc = big.zero();
    for (size_t i = a.size(); i-- > 0;)
      acc = big.add(big.mul(acc, rho), big.from_uint(a[i]));
    return acc;
  };

  FFPoly Qbig(c.Q.size());
  for (size_t i = 0; i < c.Q.size(); ++i) Qbig[i] = embed(c.Q[i]);

  uint64_t order = big_order.get_ui();
  // square-root multiplicity table: sq[z] = #{y : y^2 = z}
  std::vector<uint8_t> sq(order, 0);
  FFElem y = big.zero();
  do {
    sq[big.index_of(big.mul(y, y))]++;
  } while (big.next_element(y));

  uint64_t affine = 0;
  FFElem x = big.zero();
  do {
    affine += sq[big.index_of(ff_poly_eval(big, Qbig, x))];
  } while (big.next_element(x));

  return affine + 1;  // single smooth point at infinity (deg Q odd)
}

FFPoly random_squarefree_monic(const FieldCtx& F, unsigned degree,
                               std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> dist(0, F.p() - 1);
  for (;;) {
    FFPoly f(degree + 1, F.zero());
    for (unsigned i = 0; i < degree; ++i) {
      FFElem e(F.degree());
      for (auto& d : e) d = dist(rng);
      f[i] = e;
    }
    f[degree] = F.one();
    FFPoly g = ff_poly_gcd(F, f, ff_poly_derivative(F, f));
    if (ff_poly_degree(F, g) == 0) return f;
  }
}

}  // namespace hz
