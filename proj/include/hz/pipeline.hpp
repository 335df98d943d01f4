#pragma once

#include <optional>
#include <string>

#include "hz/zeta.hpp"

namespace hz {

// One curve document: y^2 = Q(x) over F_{p^n}. Q coefficients are
// coordinate vectors of length n in [0, p), constant term first; the last
// entry is 1 (monic). field_poly is the monic degree-n defining polynomial
// of the field over F_p, generated deterministically from `seed` when the
// input omitted it.
struct CurveInput {
  uint64_t p = 0;
  unsigned n = 1;
  FpPoly field_poly;
  bool field_poly_given = false;
  std::vector<std::vector<uint32_t>> Q;
  unsigned genus = 0;
};

struct RunOptions {
  unsigned counts_upto = 1;
  unsigned threads = 1;
  unsigned n1_override = 0;  // raise N1 to at least this
  bool verify = false;
  uint64_t oracle_guard = 10000000;
  uint64_t seed = 0;  // field_poly generation
};

struct StepTimings {
  double setup_ms = 0;
  double step1_ms = 0;
  double step2_ms = 0;
  double step3_ms = 0;
  double verify_ms = 0;
  double total_ms = 0;
};

struct VerifyEntry {
  unsigned ext = 0;
  mpz_class oracle_count;
  bool match = false;
};

struct RunResult {
  CurveInput input;  // with field_poly resolved
  ZetaResult zeta;
  StepTimings timings;
  bool verified = true;          // false when any oracle comparison failed
  std::vector<VerifyEntry> verify;  // one entry per i that passed the guard
  std::vector<unsigned> verify_skipped;  // i values over the guard
};

// Build the validated CurveData over F_q (resolving field_poly first).
CurveData curve_from_input(CurveInput& in, uint64_t seed);

// The three-step run: precision profile, ring and Bezout setup, Frobenius
// lift, matrix of sigma on cohomology, twisted norm and characteristic
// polynomial, integer recovery, point counts, optional oracle verification.
RunResult run_count(CurveInput in, const RunOptions& opt);

// Random valid curve for benchmarks and randomized suites.
CurveInput random_curve_input(uint64_t p, unsigned n, unsigned g,
                              uint64_t seed);

}  // namespace hz
