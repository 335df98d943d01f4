#include "hz/dagger_series.hpp"

namespace hz {

void DaggerSeries::ensure_slot(int k) {
  if (cs_.empty()) {
    kmin_ = k;
    cs_.resize(1);
    return;
  }
  if (k < kmin_) {
    cs_.insert(cs_.begin(), static_cast<size_t>(kmin_ - k), PolyR{});
    kmin_ = k;
  } else if (k > k_max()) {
    cs_.resize(cs_.size() + static_cast<size_t>(k - k_max()));
  }
}

void DaggerSeries::set(int k, PolyR v) {
  ensure_slot(k);
  cs_[static_cast<size_t>(k - kmin_)] = std::move(v);
}

void DaggerSeries::add_to(const RingCtx& R, int k, const PolyR& v) {
  ensure_slot(k);
  auto& slot = cs_[static_cast<size_t>(k - kmin_)];
  slot = poly_add(R, slot, v);
}

void DaggerSeries::trim(const RingCtx& R) {
  while (!cs_.empty() && poly_is_zero(R, cs_.back())) cs_.pop_back();
  while (!cs_.empty() && poly_is_zero(R, cs_.front())) {
    cs_.erase(cs_.begin());
    ++kmin_;
  }
  if (cs_.empty()) kmin_ = 0;
}

void series_normalize(const RingCtx& R, DaggerSeries& s, const PolyR& Q,
                      unsigned g) {
  if (s.empty()) return;
  for (int k = s.k_max(); ; --k) {
    if (k < s.k_min()) break;
    PolyR c = s.coeff(k);
    if (poly_degree(R, c) > static_cast<int>(2 * g)) {
      auto [u, r] = poly_divrem(R, c, Q);
      s.set(k, std::move(r));
      s.add_to(R, k - 1, u);  // Q * t^k = t^(k-1)
    }
  }
  s.trim(R);
}

DaggerSeries series_add(const RingCtx& R, const DaggerSeries& a,
                        const DaggerSeries& b) {
  DaggerSeries r = a;
  if (!b.empty())
    for (int k = b.k_min(); k <= b.k_max(); ++k) {
      if (const PolyR* c = b.coeff_ptr(k); c && !poly_is_zero(R, *c))
        r.add_to(R, k, *c);
    }
  r.trim(R);
  return r;
}

DaggerSeries series_neg(const RingCtx& R, const DaggerSeries& a) {
  DaggerSeries r;
  if (a.empty()) return r;
  for (int k = a.k_min(); k <= a.k_max(); ++k) {
    if (const PolyR* c = a.coeff_ptr(k); c && !poly_is_zero(R, *c))
      r.set(k, poly_neg(R, *c));
  }
  return r;
}

bool series_eq(const RingCtx& R, const DaggerSeries& a, const DaggerSeries& b) {
  int lo = std::min(a.empty() ? 0 : a.k_min(), b.empty() ? 0 : b.k_min());
  int hi = std::max(a.empty() ? 0 : a.k_max(), b.empty() ? 0 : b.k_max());
  for (int k = lo; k <= hi; ++k)
    if (!poly_eq(R, a.coeff(k), b.coeff(k))) return false;
  return true;
}

DaggerSeries series_mul(const RingCtx& R, const DaggerSeries& a,
                        const DaggerSeries& b, const PolyR& Q, unsigned g,
                        int J) {
  DaggerSeries r;
  if (a.empty() || b.empty()) return r;
  for (int ka = a.k_min(); ka <= a.k_max(); ++ka) {
    const PolyR* ca = a.coeff_ptr(ka);
    if (!ca || poly_is_zero(R, *ca)) continue;
    for (int kb = b.k_min(); kb <= b.k_max(); ++kb) {
      if (ka + kb > J + 1) continue;
      const PolyR* cb = b.coeff_ptr(kb);
      if (!cb || poly_is_zero(R, *cb)) continue;
      r.add_to(R, ka + kb, poly_mul(R, *ca, *cb));
    }
  }
  series_normalize(R, r, Q, g);
  return series_truncate(R, r, J);
}

long tail_valuation_bound(uint64_t p, long k) {
  // largest m with k > p/2 + p*m, i.e. floor((2k - p) / (2p)); clamp at 0
  long num = 2 * k - static_cast<long>(p);
  if (num <= 0) return 0;
  return num / static_cast<long>(2 * p);
}

DaggerSeries series_truncate(const RingCtx& R, const DaggerSeries& s, int J,
                             TruncationAudit* audit) {
  DaggerSeries r;
  bool dropped = false;
  if (!s.empty())
    for (int k = s.k_min(); k <= s.k_max(); ++k) {
      const PolyR* c = s.coeff_ptr(k);
      if (!c || poly_is_zero(R, *c)) continue;
      if (k > J) {
        dropped = true;
        continue;
      }
      r.set(k, *c);
    }
  if (audit) {
    audit->dropped = dropped;
    audit->first_dropped = J + 1;
    audit->min_valuation = dropped ? tail_valuation_bound(R.p(), J + 1) : 0;
  }
  r.trim(R);
  return r;
}

}  // namespace hz
