#include "hz/cohomology.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace hz {

DifferentialForm frobenius_of_basis_form(const RingCtx& R, unsigned i,
                                         const FrobeniusSeries& fs,
                                         const PolyR& Q, unsigned g) {
  if (i > 2 * g - 1) fail(Errc::InvalidInput, "basis index out of range");
  unsigned p = static_cast<unsigned>(R.p());
  PolyR mono = poly_monomial(R, R.from_int(static_cast<long>(p)), p * i + p - 1);
  int shift = static_cast<int>((p - 1) / 2);
  DifferentialForm f;
  const DaggerSeries& z = fs.inv_sqrt;
  for (int k = z.k_min(); k <= z.k_max(); ++k) {
    const PolyR* c = z.coeff_ptr(k);
    if (!c || poly_is_zero(R, *c)) continue;
    f.series.set(k + shift, poly_mul(R, *c, mono));
  }
  series_normalize(R, f.series, Q, g);
  return f;
}

namespace {

PolyR poly_mul_pow_p(const RingCtx& R, const PolyR& a, unsigned e) {
  PolyR r;
  r.c.reserve(a.c.size());
  for (const auto& el : a.c) r.c.push_back(R.mul_pow_p(el, e));
  return r;
}

PolyR poly_div_pow_p(const RingCtx& R, const PolyR& a, unsigned e) {
  PolyR r;
  r.c.reserve(a.c.size());
  for (const auto& el : a.c) r.c.push_back(R.div_pow_p(el, e));
  return r;
}

// cancel as much of the denominator as the value allows
void scaled_normalize(const RingCtx& R, ScaledPoly& s) {
  if (s.scale == 0) return;
  unsigned v = poly_valuation(R, s.val);
  unsigned drop = std::min(v, s.scale);
  if (drop > 0) {
    s.val = poly_div_pow_p(R, s.val, drop);
    s.scale -= drop;
  }
}

}  // namespace

ScaledPoly reduce_poles_scaled(const RingCtx& R, const DifferentialForm& form,
                               const PolyR& Q, const PolyR& Qp,
                               const BezoutPair& pair, unsigned g,
                               PolyR* poly_part_out) {
  const DaggerSeries& s = form.series;
  int K = s.empty() ? 0 : s.k_max();

  // denominator budget for the chain of divisions by 2k-1, k = K..1
  unsigned L = K >= 1 ? floor_log_p(R.p(), mpz_class(2 * K - 1)) : 0;
  if (L >= R.N())
    fail(Errc::NonIntegralReduction,
         "working precision too small for the pole denominator budget");

  PolyR carry;
  for (int k = K; k >= 1; --k) {
    PolyR S = poly_add(R, carry, poly_mul_pow_p(R, s.coeff(k), L));
    if (poly_is_zero(R, S)) {
      carry = {};
      continue;
    }
    auto [A, B] = split_by_bezout(R, S, Q, Qp, pair);
    PolyR twoBp = poly_mul_small(R, poly_derivative(R, B), 2);
    carry = poly_add(R, A,
                     poly_divide_by_odd(R, twoBp, 2 * static_cast<uint64_t>(k) - 1));
  }
  ScaledPoly out;
  out.val = poly_add(R, carry, poly_mul_pow_p(R, s.coeff(0), L));
  out.scale = L;
  poly_trim(R, out.val);
  scaled_normalize(R, out);

  if (poly_part_out) {
    *poly_part_out = {};
    if (!s.empty() && s.k_min() < 0) {
      // t^(-m) = Q^m, folded by Horner
      PolyR acc = s.coeff(s.k_min());
      for (int k = s.k_min() + 1; k <= -1; ++k)
        acc = poly_add(R, poly_mul(R, acc, Q), s.coeff(k));
      *poly_part_out = poly_mul(R, acc, Q);
    }
  }
  return out;
}

ReducedParts reduce_poles(const RingCtx& R, const DifferentialForm& form,
                          const PolyR& Q, const PolyR& Qp,
                          const BezoutPair& pair, unsigned g) {
  ReducedParts out;
  ScaledPoly sp = reduce_poles_scaled(R, form, Q, Qp, pair, g, &out.poly_part);
  if (sp.scale > 0)
    fail(Errc::NonIntegralReduction,
         "pole reduction left a denominator of p^" + std::to_string(sp.scale));
  out.pole_residue = std::move(sp.val);
  return out;
}

ScaledPoly reduce_degree_scaled(const RingCtx& R, ScaledPoly G, const PolyR& Q,
                                const PolyR& Qp, unsigned g) {
  poly_trim(R, G.val);
  int d0 = poly_degree(R, G.val);
  if (d0 < static_cast<int>(2 * g)) {
    scaled_normalize(R, G);
    return G;
  }

  unsigned kstart = static_cast<unsigned>(d0) - 2 * g + 1;
  unsigned L = floor_log_p(R.p(), mpz_class(2 * kstart + 2 * g - 1));
  if (L + G.scale >= R.N())
    fail(Errc::NonIntegralReduction,
         "working precision too small for the degree denominator budget");
  PolyR P = poly_mul_pow_p(R, G.val, L);

  for (;;) {
    int d = poly_degree(R, P);
    if (d < static_cast<int>(2 * g)) break;
    unsigned k = static_cast<unsigned>(d) - 2 * g + 1;
    // relation x^(k-1) Q' + 2(k-1) x^(k-2) Q, degree k+2g-1 = d
    PolyR rel = poly_shift(Qp, k - 1);
    if (k >= 2)
      rel = poly_add(R, rel,
                     poly_mul_small(R, poly_shift(Q, k - 2),
                                    2 * (static_cast<long>(k) - 1)));
    uint64_t lam = 2 * static_cast<uint64_t>(k) + 2 * g - 1;
    RingElem u = R.divide_by_odd(P.c[d], lam);
    P = poly_sub(R, P, poly_scale(R, rel, u));
    if (poly_degree(R, P) >= d)
      fail(Errc::SanityCheckFailed, "degree reduction failed to make progress");
  }
  ScaledPoly out{std::move(P), G.scale + L};
  scaled_normalize(R, out);
  return out;
}

PolyR reduce_degree(const RingCtx& R, PolyR G, const PolyR& Q,
                    const PolyR& Qp, unsigned g) {
  ScaledPoly out = reduce_degree_scaled(R, {std::move(G), 0}, Q, Qp, g);
  if (out.scale > 0)
    fail(Errc::NonIntegralReduction,
         "degree reduction left a denominator of p^" + std::to_string(out.scale));
  return out.val;
}

ScaledPoly reduce_form_full(const RingCtx& R, const DifferentialForm& form,
                            const PolyR& Q, const PolyR& Qp,
                            const BezoutPair& pair, unsigned g) {
  PolyR poly_part;
  ScaledPoly sp = reduce_poles_scaled(R, form, Q, Qp, pair, g, &poly_part);
  ScaledPoly T;
  T.scale = sp.scale;
  T.val = poly_add(R, sp.val, poly_mul_pow_p(R, poly_part, sp.scale));
  return reduce_degree_scaled(R, std::move(T), Q, Qp, g);
}

ScaledFrobMatrix frobenius_matrix(const RingCtx& R, const PolyR& Q,
                                  const FrobeniusSeries& fs,
                                  const BezoutPair& pair, unsigned g,
                                  unsigned threads) {
  PolyR Qp = poly_derivative(R, Q);
  unsigned dim = 2 * g;
  std::vector<ScaledPoly> cols(dim);
  std::vector<std::exception_ptr> errors(dim);

  auto run_column = [&](unsigned i) {
    try {
      DifferentialForm f = frobenius_of_basis_form(R, i, fs, Q, g);
      cols[i] = reduce_form_full(R, f, Q, Qp, pair, g);
      if (poly_degree(R, cols[i].val) > static_cast<int>(2 * g - 1))
        fail(Errc::SanityCheckFailed, "reduced column degree exceeds 2g-1");
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  if (threads <= 1) {
    for (unsigned i = 0; i < dim; ++i) run_column(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<unsigned> next{0};
    unsigned nt = std::min(threads, dim);
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t)
      pool.emplace_back([&]() {
        for (;;) {
          unsigned i = next.fetch_add(1);
          if (i >= dim) return;
          run_column(i);
        }
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ScaledFrobMatrix M;
  for (const auto& c : cols) M.denom_exp = std::max(M.denom_exp, c.scale);
  M.int_part.dim = dim;
  M.int_part.a.assign(static_cast<size_t>(dim) * dim, R.zero());
  for (unsigned c = 0; c < dim; ++c) {
    unsigned lift = M.denom_exp - cols[c].scale;
    for (unsigned r = 0; r < dim; ++r)
      M.int_part.at(r, c) =
          R.mul_pow_p(poly_coeff(R, cols[c].val, r), lift);
  }
  return M;
}

}  // namespace hz
