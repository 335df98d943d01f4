#include "hz/pipeline.hpp"

#include <chrono>

namespace hz {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

CurveData curve_from_input(CurveInput& in, uint64_t seed) {
  if (in.p < 3 || in.p % 2 == 0)
    fail(Errc::EvenCharacteristic, "characteristic must be an odd prime");
  if (!is_prime(in.p)) fail(Errc::NotPrime, "p = " + std::to_string(in.p));
  if (in.n < 1) fail(Errc::InvalidInput, "n must be >= 1");
  if (in.Q.size() < 4 || in.Q.size() % 2 != 0)
    fail(Errc::WrongDegree,
         "Q needs 2g+2 coefficient entries (odd degree 2g+1 >= 3)");
  in.genus = static_cast<unsigned>((in.Q.size() - 2) / 2);

  if (!in.field_poly_given) {
    if (in.n == 1) {
      in.field_poly = FpPoly{0, 1};
    } else {
      std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + in.n + in.p);
      in.field_poly =
          random_monic_irreducible(static_cast<uint32_t>(in.p), in.n, rng);
    }
    in.field_poly_given = true;
  }
  if (fp_poly_degree(in.field_poly) != static_cast<int>(in.n))
    fail(Errc::WrongDegree, "field_poly degree != n");

  FieldCtx F(static_cast<uint32_t>(in.p), in.field_poly);
  FFPoly Q(in.Q.size());
  for (size_t i = 0; i < in.Q.size(); ++i) {
    if (in.Q[i].size() != in.n)
      fail(Errc::InvalidInput, "Q coefficient needs n coordinates");
    for (uint32_t v : in.Q[i])
      if (v >= in.p)
        fail(Errc::InvalidInput, "Q coordinates must lie in [0, p)");
    Q[i] = in.Q[i];
  }
  CurveData curve{in.genus, F, Q};
  validate_curve(curve);
  return curve;
}

RunResult run_count(CurveInput in, const RunOptions& opt) {
  RunResult out;
  auto t_total = std::chrono::steady_clock::now();
  auto t0 = t_total;

  CurveData curve = curve_from_input(in, opt.seed);
  out.input = in;
  unsigned g = curve.genus;
  unsigned n = in.n;
  uint64_t p = in.p;

  PrecisionProfile prof =
      make_precision_profile_with_n1(p, n, g, opt.n1_override);
  out.timings.setup_ms = ms_since(t0);

  // When the Frobenius matrix carries a denominator, the profile's slack
  // can fall short for the high characteristic coefficients; the recovery
  // audits catch that and the run retries with more working digits. The
  // integer outputs are identical across precisions, so the retry is
  // invisible apart from timing.
  ZetaResult z;
  z.genus = g;
  z.q = 1;
  // the degree-direction relations have leading coefficients up to p(2g+1),
  // a denominator budget on top of the profile's pole-direction slack
  unsigned extra = 1 + floor_log_p(p, mpz_class(2 * g + 1));
  for (unsigned attempt = 0;; ++attempt) {
    PrecisionProfile pr = prof;
    pr.N += extra;
    pr.delta = pr.N - pr.N1;
    try {
      t0 = std::chrono::steady_clock::now();
      RingCtx RN(p, n, pr.N, in.field_poly);
      PolyR Q;
      Q.c.resize(curve.Q.size());
      for (size_t i = 0; i < curve.Q.size(); ++i) Q.c[i] = RN.lift(curve.Q[i]);
      BezoutPair pair = bezout_precompute(RN, Q);
      out.timings.setup_ms = ms_since(t0);

      t0 = std::chrono::steady_clock::now();
      FrobeniusSeries fs =
          compute_inv_y_sigma(RN, Q, g, static_cast<int>(pr.J));
      out.timings.step1_ms = ms_since(t0);

      t0 = std::chrono::steady_clock::now();
      ScaledFrobMatrix M = frobenius_matrix(RN, Q, fs, pair, g, opt.threads);
      out.timings.step2_ms = ms_since(t0);

      t0 = std::chrono::steady_clock::now();
      z.q = RN.q();
      z.profile = pr;
      z.a = zeta_coefficients(RN, M, pr.N1, z.q, g);
      out.timings.step3_ms = ms_since(t0);
      break;
    } catch (const Error& e) {
      bool retryable = e.code() == Errc::NonIntegralReduction ||
                       e.code() == Errc::WeilBoundViolated ||
                       e.code() == Errc::FunctionalEquationMismatch ||
                       e.code() == Errc::SanityCheckFailed;
      if (!retryable || attempt >= 2) throw;
      extra += prof.delta + 2 * g * n;
    }
  }

  t0 = std::chrono::steady_clock::now();
  z.L.resize(2 * g + 1);
  z.L[0] = 1;
  for (unsigned i = 1; i <= 2 * g; ++i) z.L[i] = z.a[i - 1];
  z.counts = point_counts(z.a, z.q, g, std::max(1u, opt.counts_upto));
  WeilRootCheck wrc = weil_root_check(z.a, z.q, g);
  z.weil_root_pass = wrc.pass;
  z.weil_root_max_dev = wrc.max_rel_dev;
  out.timings.step3_ms += ms_since(t0);

  if (opt.verify) {
    t0 = std::chrono::steady_clock::now();
    for (unsigned i = 1; i <= std::max(1u, opt.counts_upto); ++i) {
      mpz_class sz;
      mpz_ui_pow_ui(sz.get_mpz_t(), static_cast<unsigned long>(p), n * i);
      if (sz > opt.oracle_guard) {
        out.verify_skipped.push_back(i);
        continue;
      }
      uint64_t oc = count_points_oracle(curve, i, opt.oracle_guard);
      VerifyEntry e;
      e.ext = i;
      e.oracle_count = static_cast<unsigned long>(oc);
      e.match = (z.counts[i - 1] == e.oracle_count);
      if (!e.match) out.verified = false;
      out.verify.push_back(std::move(e));
    }
    out.timings.verify_ms = ms_since(t0);
  }

  out.zeta = std::move(z);
  out.timings.total_ms = ms_since(t_total);
  return out;
}

CurveInput random_curve_input(uint64_t p, unsigned n, unsigned g,
                              uint64_t seed) {
  std::mt19937_64 rng(seed);
  FpPoly fpoly = n == 1 ? FpPoly{0, 1}
                        : random_monic_irreducible(static_cast<uint32_t>(p), n, rng);
  FieldCtx F(static_cast<uint32_t>(p), fpoly);
  FFPoly Q = random_squarefree_monic(F, 2 * g + 1, rng);
  CurveInput in;
  in.p = p;
  in.n = n;
  in.field_poly = fpoly;
  in.field_poly_given = true;
  in.Q.resize(Q.size());
  for (size_t i = 0; i < Q.size(); ++i) in.Q[i] = Q[i];
  in.genus = g;
  return in;
}

}  // namespace hz
