#pragma once

#include "hz/poly_ring.hpp"

namespace hz {

// Finite approximation of an overconvergent element: a Laurent polynomial
// sum_k c_k(x) * t^k in t = y^(-2), with y^2 = Q(x) giving the carry rule
// t*Q = 1. Negative exponents stand for positive even powers of y. After
// normalization every c_k has degree <= 2g.
class DaggerSeries {
public:
  DaggerSeries() = default;

  bool empty() const { return cs_.empty(); }
  int k_min() const { return kmin_; }
  int k_max() const { return kmin_ + static_cast<int>(cs_.size()) - 1; }

  PolyR coeff(int k) const {
    if (k < kmin_ || k > k_max()) return {};
    return cs_[static_cast<size_t>(k - kmin_)];
  }
  const PolyR* coeff_ptr(int k) const {
    if (k < kmin_ || k > k_max()) return nullptr;
    return &cs_[static_cast<size_t>(k - kmin_)];
  }

  void set(int k, PolyR v);
  void add_to(const RingCtx& R, int k, const PolyR& v);
  // drop zero coefficient polynomials at both ends
  void trim(const RingCtx& R);

private:
  void ensure_slot(int k);

  int kmin_ = 0;
  std::vector<PolyR> cs_;
};

// Carry every coefficient of degree > 2g downward through c = u*Q + r,
// c_k <- r, c_{k-1} += u. Terminates since each carry strictly reduces the
// total excess degree. Idempotent.
void series_normalize(const RingCtx& R, DaggerSeries& s, const PolyR& Q,
                      unsigned g);

DaggerSeries series_add(const RingCtx& R, const DaggerSeries& a,
                        const DaggerSeries& b);
DaggerSeries series_neg(const RingCtx& R, const DaggerSeries& a);
bool series_eq(const RingCtx& R, const DaggerSeries& a, const DaggerSeries& b);

// Exponent-wise convolution of normalized inputs, keeping k <= J+1 so the
// single downward carry into level J survives, then normalize and truncate
// at J.
DaggerSeries series_mul(const RingCtx& R, const DaggerSeries& a,
                        const DaggerSeries& b, const PolyR& Q, unsigned g,
                        int J);

// Valuation floor for a dropped index k, from the divisibility rule for the
// expansion of 1/y^sigma: terms beyond k carry at least this many factors
// of p.
long tail_valuation_bound(uint64_t p, long k);

struct TruncationAudit {
  int first_dropped = 0;       // J+1 when anything was dropped
  long min_valuation = 0;      // bound for the lowest dropped exponent
  bool dropped = false;
};

DaggerSeries series_truncate(const RingCtx& R, const DaggerSeries& s, int J,
                             TruncationAudit* audit = nullptr);

}  // namespace hz
