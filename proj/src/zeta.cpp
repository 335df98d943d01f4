#include "hz/zeta.hpp"

#include <complex>

namespace hz {

PrecisionProfile make_precision_profile(uint64_t p, unsigned n, unsigned g) {
  return make_precision_profile_with_n1(p, n, g, 0);
}

PrecisionProfile make_precision_profile_with_n1(uint64_t p, unsigned n,
                                                unsigned g, unsigned n1_floor) {
  PrecisionProfile pp;
  // smallest m with p^(2m) >= p^(g n) 2^(4g+2), i.e. m = ceil((g n)/2 + (2g+1) log_p 2)
  mpz_class rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(p), g * n);
  rhs <<= (4 * g + 2);
  mpz_class lhs = 1;
  mpz_class p2 = mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
  unsigned m = 0;
  while (lhs < rhs) {
    lhs *= p2;
    ++m;
  }
  pp.N1 = std::max(m + 1, n1_floor);
  unsigned c = ceil_log_p(p, mpz_class(2 * p * pp.N1 + 1));
  pp.J = static_cast<unsigned>(p) * (pp.N1 + c + 1);
  unsigned f = floor_log_p(p, mpz_class(2 * static_cast<unsigned long>(pp.J) + 1));
  pp.N = pp.N1 + f + 1;
  pp.delta = pp.N - pp.N1;
  return pp;
}

FrobMatrix mat_mul(const RingCtx& R, const FrobMatrix& A, const FrobMatrix& B) {
  FrobMatrix C;
  C.dim = A.dim;
  C.a.assign(static_cast<size_t>(C.dim) * C.dim, R.zero());
  unsigned nn = R.n();
  std::vector<mpz_class> acc(2 * nn - 1);
  for (unsigned i = 0; i < C.dim; ++i)
    for (unsigned j = 0; j < C.dim; ++j) {
      for (auto& v : acc) v = 0;
      for (unsigned k = 0; k < C.dim; ++k)
        R.mul_acc_raw(A.at(i, k), B.at(k, j), acc);
      C.at(i, j) = R.finalize_raw(acc);
    }
  return C;
}

FrobMatrix mat_frobenius(const RingCtx& R, const FrobMatrix& A, unsigned k) {
  FrobMatrix C = A;
  for (auto& e : C.a) e = R.frobenius(e, k);
  return C;
}

FrobMatrix norm_matrix(const RingCtx& R, const FrobMatrix& M) {
  unsigned n = R.n();
  if (n == 1) return M;
  // high-to-low bits of n
  unsigned top = 31;
  while (!(n & (1u << top))) --top;
  FrobMatrix T = M;
  unsigned e = 1;
  for (int bit = static_cast<int>(top) - 1; bit >= 0; --bit) {
    T = mat_mul(R, T, mat_frobenius(R, T, e));
    e *= 2;
    if (n & (1u << bit)) {
      T = mat_mul(R, T, mat_frobenius(R, M, e));
      e += 1;
    }
  }
  return T;
}

FrobMatrix reduce_matrix(const RingCtx& from, const RingCtx& to,
                         const FrobMatrix& M) {
  FrobMatrix C;
  C.dim = M.dim;
  C.a.reserve(M.a.size());
  for (const auto& e : M.a) {
    std::vector<mpz_class> coords = e.c;
    C.a.push_back(to.from_residues(std::move(coords)));
  }
  (void)from;
  return C;
}

std::vector<RingElem> charpoly(const RingCtx& R, const FrobMatrix& M) {
  unsigned dim = M.dim;
  std::vector<RingElem> c{R.one()};
  for (unsigned r = 1; r <= dim; ++r) {
    RingElem corner = M.at(r - 1, r - 1);
    // q_k = Row (A_{r-1})^k Col for the bordering row/column
    std::vector<RingElem> qs;
    if (r >= 2) {
      std::vector<RingElem> v(r - 1);
      for (unsigned i = 0; i < r - 1; ++i) v[i] = M.at(i, r - 1);
      for (unsigned k = 0; k + 2 <= r; ++k) {
        RingElem q = R.zero();
        for (unsigned i = 0; i < r - 1; ++i)
          R.add_inplace(q, R.mul(M.at(r - 1, i), v[i]));
        qs.push_back(q);
        if (k + 3 <= r) {
          std::vector<RingElem> nv(r - 1, R.zero());
          for (unsigned i = 0; i < r - 1; ++i) {
            for (unsigned j = 0; j < r - 1; ++j)
              R.add_inplace(nv[i], R.mul(M.at(i, j), v[j]));
          }
          v = std::move(nv);
        }
      }
    }
    std::vector<RingElem> nc(r + 1, R.zero());
    nc[0] = R.one();
    for (unsigned i = 1; i <= r; ++i) {
      RingElem acc = i < c.size() ? c[i] : R.zero();
      acc = R.sub(acc, R.mul(corner, c[i - 1]));
      for (unsigned k = 0; k < qs.size() && k + 2 <= i; ++k)
        acc = R.sub(acc, R.mul(qs[k], c[i - 2 - k]));
      nc[i] = std::move(acc);
    }
    c = std::move(nc);
  }
  return c;
}

// |a| <= binom(2g,i) q^(i/2), tested exactly as a^2 <= binom^2 q^i.
bool weil_coeff_in_box(const mpz_class& a, unsigned g, unsigned i,
                       const mpz_class& q) {
  mpz_class bin;
  mpz_bin_uiui(bin.get_mpz_t(), 2 * g, i);
  mpz_class qi;
  mpz_pow_ui(qi.get_mpz_t(), q.get_mpz_t(), i);
  return a * a <= bin * bin * qi;
}

std::vector<mpz_class> recover_integer_coeffs(const RingCtx& R,
                                              const std::vector<RingElem>& b,
                                              const mpz_class& q, unsigned g,
                                              unsigned N1) {
  if (b.size() != 2 * g + 1)
    fail(Errc::InvalidInput, "expected 2g+1 characteristic coefficients");
  if (N1 > R.N()) fail(Errc::InvalidInput, "N1 exceeds the context precision");
  const mpz_class& pN1 = R.p_pow(N1);
  // coefficients of the zeta numerator are rational integers: the higher
  // alpha-coordinates must vanish
  for (const auto& e : b)
    for (unsigned j = 1; j < R.n(); ++j)
      if (!mpz_divisible_p(e.c[j].get_mpz_t(), pN1.get_mpz_t()))
        fail(Errc::SanityCheckFailed,
             "characteristic polynomial is not Galois invariant");
  {
    mpz_class d0 = b[0].c[0] - 1;
    if (!mpz_divisible_p(d0.get_mpz_t(), pN1.get_mpz_t()))
      fail(Errc::SanityCheckFailed, "characteristic polynomial is not monic");
  }

  mpz_class half = (pN1 - 1) / 2;
  std::vector<mpz_class> a(2 * g + 1);
  a[0] = 1;
  for (unsigned i = 1; i <= g; ++i) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), b[i].c[0].get_mpz_t(), pN1.get_mpz_t());
    if (r > half) r -= pN1;  // signed residue in (-p^N1/2, p^N1/2]
    if (!weil_coeff_in_box(r, g, i, q))
      fail(Errc::WeilBoundViolated,
           "|a_" + std::to_string(i) + "| = " + r.get_str() +
               " exceeds binom(2g,i) q^(i/2)");
    a[i] = r;
  }
  for (unsigned i = g + 1; i <= 2 * g; ++i) {
    mpz_class qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), i - g);
    a[i] = qp * a[2 * g - i];
    mpz_class diff = a[i] - b[i].c[0];
    if (!mpz_divisible_p(diff.get_mpz_t(), pN1.get_mpz_t()))
      fail(Errc::FunctionalEquationMismatch,
           "a_" + std::to_string(i) + " != computed coefficient mod p^N1");
  }
  return std::vector<mpz_class>(a.begin() + 1, a.end());
}

std::vector<mpz_class> zeta_coefficients(const RingCtx& R,
                                         const ScaledFrobMatrix& M,
                                         unsigned N1, const mpz_class& q,
                                         unsigned g) {
  FrobMatrix Mn = norm_matrix(R, M.int_part);
  std::vector<RingElem> c = charpoly(R, Mn);
  unsigned e = M.denom_exp * R.n();
  if (e > 0) {
    // charpoly of p^(n denom_exp) M' has coefficient i equal to p^(i e) b_i
    for (unsigned i = 1; i <= 2 * g; ++i) {
      unsigned shift = i * e;
      if (shift + N1 > R.N())
        fail(Errc::NonIntegralReduction,
             "matrix denominator exhausts the working precision");
      c[i] = R.div_pow_p(c[i], shift);
    }
  }
  return recover_integer_coeffs(R, c, q, g, N1);
}

std::vector<mpz_class> point_counts(const std::vector<mpz_class>& a,
                                    const mpz_class& q, unsigned g,
                                    unsigned upto) {
  // s_k + a_1 s_{k-1} + ... + a_{k-1} s_1 + k a_k = 0 (k <= 2g),
  // s_k = -(a_1 s_{k-1} + ... + a_{2g} s_{k-2g}) beyond.
  std::vector<mpz_class> s(upto + 1);
  for (unsigned k = 1; k <= upto; ++k) {
    mpz_class acc = 0;
    for (unsigned j = 1; j < k && j <= 2 * g; ++j) acc += a[j - 1] * s[k - j];
    if (k <= 2 * g) acc += mpz_class(k) * a[k - 1];
    s[k] = -acc;
  }
  std::vector<mpz_class> counts(upto);
  for (unsigned i = 1; i <= upto; ++i) {
    mpz_class qi;
    mpz_pow_ui(qi.get_mpz_t(), q.get_mpz_t(), i);
    counts[i - 1] = qi + 1 - s[i];
    if (counts[i - 1] < 0)
      fail(Errc::NegativeCount,
           "#C(F_q^" + std::to_string(i) + ") = " + counts[i - 1].get_str());
  }
  return counts;
}

WeilRootCheck weil_root_check(const std::vector<mpz_class>& a,
                              const mpz_class& q, unsigned g) {
  using cplx = std::complex<double>;
  unsigned deg = 2 * g;
  std::vector<double> coeff(deg + 1);  // leading first
  coeff[0] = 1.0;
  for (unsigned i = 1; i <= deg; ++i) coeff[i] = mpz_get_d(a[i - 1].get_mpz_t());
  double rq = std::sqrt(mpz_get_d(q.get_mpz_t()));

  auto eval = [&](cplx z) {
    cplx acc = 0;
    for (unsigned i = 0; i <= deg; ++i) acc = acc * z + coeff[i];
    return acc;
  };

  // Durand-Kerner from points on the expected circle |z| = sqrt(q)
  std::vector<cplx> roots(deg);
  for (unsigned i = 0; i < deg; ++i) {
    double theta = 2.0 * M_PI * i / deg + 0.37;
    roots[i] = rq * cplx(std::cos(theta), std::sin(theta));
  }
  for (unsigned it = 0; it < 800; ++it) {
    double moved = 0;
    for (unsigned i = 0; i < deg; ++i) {
      cplx denom = 1.0;
      for (unsigned j = 0; j < deg; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      if (std::abs(denom) < 1e-300) denom = 1e-300;
      cplx step = eval(roots[i]) / denom;
      roots[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-13 * rq) break;
  }
  WeilRootCheck out;
  out.max_rel_dev = 0;
  for (const auto& r : roots)
    out.max_rel_dev = std::max(out.max_rel_dev, std::abs(std::abs(r) - rq) / rq);
  out.pass = out.max_rel_dev < 1e-6;
  return out;
}

}  // namespace hz
