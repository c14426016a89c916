#include "curvecfg/interval.hpp"

#include <algorithm>
#include <utility>

namespace curvecfg {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(mpfr_prec_t prec, long value) : Interval(prec) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(other.prec_) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.prec_) { swap(other); }

Interval& Interval::operator=(Interval other) noexcept {
  swap(other);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Interval::swap(Interval& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval Interval::pi_fraction(mpfr_prec_t prec, long num, long den) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  r = r * Interval(prec, num);
  // division by a positive integer is monotone
  long d = den < 0 ? -den : den;
  if (den < 0) r = -r;
  mpfr_div_si(r.lo_, r.lo_, d, MPFR_RNDD);
  mpfr_div_si(r.hi_, r.hi_, d, MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

std::string Interval::str() const {
  return "[" + std::to_string(mpfr_get_d(lo_, MPFR_RNDD)) + ", " + std::to_string(mpfr_get_d(hi_, MPFR_RNDU)) + "]";
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.prec_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = std::max(a.prec_, b.prec_);
  Interval r(prec);
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  bool first = true;
  for (auto x : {a.lo_, a.hi_}) {
    for (auto y : {b.lo_, b.hi_}) {
      mpfr_mul(lo, x, y, MPFR_RNDD);
      mpfr_mul(hi, x, y, MPFR_RNDU);
      if (first || mpfr_less_p(lo, r.lo_)) mpfr_set(r.lo_, lo, MPFR_RNDD);
      if (first || mpfr_greater_p(hi, r.hi_)) mpfr_set(r.hi_, hi, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(lo);
  mpfr_clear(hi);
  return r;
}

namespace {

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// sin and cos are 1-Lipschitz, so f([lo, hi]) lies in [f(lo) - w, f(lo) + w]
// with w = hi - lo; the result is clamped to [-1, 1].
void lipschitz_enclosure(mpfr_ptr out_lo, mpfr_ptr out_hi, mpfr_srcptr lo, mpfr_srcptr hi,
                         mpfr_prec_t prec, MpfrUnary f) {
  mpfr_t w;
  mpfr_init2(w, prec);
  mpfr_sub(w, hi, lo, MPFR_RNDU);
  f(out_lo, lo, MPFR_RNDD);
  f(out_hi, lo, MPFR_RNDU);
  mpfr_sub(out_lo, out_lo, w, MPFR_RNDD);
  mpfr_add(out_hi, out_hi, w, MPFR_RNDU);
  if (mpfr_cmp_si(out_lo, -1) < 0) mpfr_set_si(out_lo, -1, MPFR_RNDD);
  if (mpfr_cmp_si(out_hi, 1) > 0) mpfr_set_si(out_hi, 1, MPFR_RNDU);
  mpfr_clear(w);
}

}  // namespace

Interval sin(const Interval& x) {
  Interval r(x.prec_);
  lipschitz_enclosure(r.lo_, r.hi_, x.lo_, x.hi_, x.prec_, mpfr_sin);
  return r;
}

Interval cos(const Interval& x) {
  Interval r(x.prec_);
  lipschitz_enclosure(r.lo_, r.hi_, x.lo_, x.hi_, x.prec_, mpfr_cos);
  return r;
}

}  // namespace curvecfg
