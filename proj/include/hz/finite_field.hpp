#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "hz/errors.hpp"

namespace hz {

// Element of F_{p^m} in the power basis of a root of the defining
// polynomial: m coefficients in [0, p), constant term first.
using FFElem = std::vector<uint32_t>;

// Polynomial over F_p: coefficient vector, constant term first, values in
// [0, p). Trailing zeros are allowed; degree queries ignore them.
using FpPoly = std::vector<uint32_t>;

bool is_prime(uint64_t v);

int fp_poly_degree(const FpPoly& f);
FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b, uint32_t p);
// Remainder modulo a monic f.
FpPoly fp_poly_mod(FpPoly a, const FpPoly& f, uint32_t p);
FpPoly fp_poly_gcd(FpPoly a, FpPoly b, uint32_t p);
// x^(p^m) == x test plus gcd checks at the maximal proper subfield degrees.
bool fp_poly_is_irreducible(const FpPoly& f, uint32_t p);
FpPoly random_monic_irreducible(uint32_t p, unsigned m, std::mt19937_64& rng);

// F_{p^m} with a fixed monic irreducible defining polynomial.
class FieldCtx {
public:
  FieldCtx(uint32_t p, FpPoly modulus);
  static FieldCtx prime_field(uint32_t p);

  uint32_t p() const { return p_; }
  unsigned degree() const { return m_; }
  const FpPoly& modulus() const { return modulus_; }
  const mpz_class& order() const { return order_; }

  FFElem zero() const { return FFElem(m_, 0); }
  FFElem one() const;
  FFElem from_uint(uint64_t v) const;  // v mod p as a constant
  FFElem gen() const;                  // the class of x (m >= 2)

  bool is_zero(const FFElem& a) const;
  bool eq(const FFElem& a, const FFElem& b) const { return a == b; }

  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem pow(FFElem a, const mpz_class& e) const;
  FFElem inv(const FFElem& a) const;  // DivisionByZero on zero

  // a^((order-1)/2) interpreted in {-1, 0, +1}.
  int quadratic_character(const FFElem& a) const;

  // Enumeration: index <-> element via base-p digits.
  uint64_t index_of(const FFElem& a) const;
  FFElem element_of_index(uint64_t idx) const;
  // Odometer increment; returns false after wrapping past the last element.
  bool next_element(FFElem& a) const;

private:
  uint32_t p_;
  unsigned m_;
  FpPoly modulus_;
  mpz_class order_;
};

// Polynomials over an arbitrary FieldCtx: vector of FFElem, constant first.
using FFPoly = std::vector<FFElem>;

int ff_poly_degree(const FieldCtx& F, const FFPoly& f);
FFPoly ff_poly_derivative(const FieldCtx& F, const FFPoly& f);
FFPoly ff_poly_gcd(const FieldCtx& F, FFPoly a, FFPoly b);
FFElem ff_poly_eval(const FieldCtx& F, const FFPoly& f, const FFElem& x);
// u*a + v*b = g (monic gcd); returns {g, u, v}.
struct FFExtGcd {
  FFPoly g, u, v;
};
FFExtGcd ff_poly_ext_gcd(const FieldCtx& F, const FFPoly& a, const FFPoly& b);

// A hyperelliptic curve y^2 = Q(x) with Q monic squarefree of odd degree
// 2g+1 over the field.
struct CurveData {
  unsigned genus;
  FieldCtx field;
  FFPoly Q;  // 2g+2 coefficients, constant first
};

// NotMonic / WrongDegree / NotSquarefree.
void validate_curve(const CurveData& c);

// Brute-force count of #C(F_{q^ext}), the projective point count (one point
// at infinity since deg Q is odd). F_{q^ext} is built as F_p[t]/(f) for a
// deterministically chosen irreducible f unless big_modulus is supplied;
// the base field embeds through a root of its defining polynomial.
// FieldTooLarge when p^(n*ext) exceeds the guard.
uint64_t count_points_oracle(const CurveData& c, unsigned ext,
                             uint64_t guard = 10000000,
                             const FpPoly* big_modulus = nullptr);

// Random monic squarefree polynomial of the given degree (resamples until
// gcd(f, f') = 1); used by the benchmark and test drivers.
FFPoly random_squarefree_monic(const FieldCtx& F, unsigned degree,
                               std::mt19937_64& rng);

}  // namespace hz
