#pragma once

#include "curvecfg/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace curvecfg {

/// Univariate polynomial with exact rational coefficients, constant term
/// first, always trimmed (no trailing zeros; the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// x
  static Polynomial identity();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  ///< -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division; throws on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Monic gcd (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);
  Polynomial monic() const;

  /// e.g. "5/2*n^2 - 4*n + 1"
  std::string str(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Reduced p(n)/q(n) with q monic.
class RationalFunctionInN {
 public:
  RationalFunctionInN(Polynomial numer, Polynomial denom);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Throws CurveError(invalid_argument) at a pole.
  Rational operator()(const Rational& n) const;

  friend bool operator==(const RationalFunctionInN&, const RationalFunctionInN&) = default;

  std::string str() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace curvecfg
