#pragma once

#include "curvecfg/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace curvecfg {

/// Polynomial in an integer parameter k whose coefficients depend on k mod
/// period: branch r is used for k ≡ r (mod period). Floor terms such as
/// ⌊k(k-3)/6⌋ are exact quasi-polynomials.
class QuasiPolynomial {
 public:
  /// The zero quasi-polynomial (period 1).
  QuasiPolynomial();
  explicit QuasiPolynomial(Polynomial p);
  /// One branch per residue class; period = branches.size() >= 1.
  explicit QuasiPolynomial(std::vector<Polynomial> branches);

  static QuasiPolynomial constant(const Rational& c) { return QuasiPolynomial(Polynomial::constant(c)); }
  /// Periodic constant: value[r] for k ≡ r.
  static QuasiPolynomial periodic(const std::vector<Rational>& values);

  std::size_t period() const { return branches_.size(); }
  const Polynomial& branch(std::size_t residue) const { return branches_[residue % branches_.size()]; }
  int degree() const;

  Rational operator()(const Integer& k) const;
  Rational operator()(std::int64_t k) const { return (*this)(to_integer(k)); }

  /// Coefficient of k^deg, or nullopt when it depends on the residue class.
  std::optional<Rational> uniform_coefficient(int deg) const;

  QuasiPolynomial& operator+=(const QuasiPolynomial& o);
  QuasiPolynomial& operator-=(const QuasiPolynomial& o);
  friend QuasiPolynomial operator+(QuasiPolynomial a, const QuasiPolynomial& b) { return a += b; }
  friend QuasiPolynomial operator-(QuasiPolynomial a, const QuasiPolynomial& b) { return a -= b; }
  friend QuasiPolynomial operator*(const QuasiPolynomial& a, const QuasiPolynomial& b);
  friend QuasiPolynomial operator*(const Rational& s, const QuasiPolynomial& a);
  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  template <class Op>
  static QuasiPolynomial combine(const QuasiPolynomial& a, const QuasiPolynomial& b, Op op);
  /// Shrinks the period to the smallest divisor that reproduces every branch.
  void reduce_period();

  std::vector<Polynomial> branches_;
};

/// ⌊numer(k) / divisor⌋ as a quasi-polynomial of period dividing `divisor`.
/// `numer` has integer coefficients, constant term first.
QuasiPolynomial qp_from_floor(const std::vector<Integer>& numer, std::int64_t divisor);

}  // namespace curvecfg
