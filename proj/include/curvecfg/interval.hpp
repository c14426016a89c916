#pragma once

#include <mpfr.h>

#include <string>

namespace curvecfg {

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
/// lower endpoint down and the upper endpoint up, so the true value of any
/// expression evaluated on enclosures is enclosed by the result.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(mpfr_prec_t prec, long value);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other) noexcept;
  ~Interval();

  /// Enclosure of pi * num / den.
  static Interval pi_fraction(mpfr_prec_t prec, long num, long den);

  mpfr_prec_t precision() const { return prec_; }
  bool contains_zero() const;
  /// Upper bound on hi - lo.
  double width() const;
  std::string str() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

  friend Interval sin(const Interval& x);
  friend Interval cos(const Interval& x);

 private:
  void swap(Interval& other) noexcept;

  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace curvecfg
