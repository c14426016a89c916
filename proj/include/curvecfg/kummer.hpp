#pragma once

#include "curvecfg/config.hpp"
#include "curvecfg/quasi_polynomial.hpp"

#include <array>
#include <utility>
#include <vector>

namespace curvecfg {

/// a*n^2 + b*n + c
struct QuadraticInN {
  Rational a, b, c;

  Rational operator()(const Rational& n) const { return (a * n + b) * n + c; }
  friend bool operator==(const QuadraticInN&, const QuadraticInN&) = default;
  std::array<Rational, 3> coeffs() const { return {a, b, c}; }
};

/// Chern numbers of the Kummer cover of order n^{k-1}, both divided by n^{k-3}.
struct ChernPair {
  QuadraticInN c1sq;
  QuadraticInN c2;
  std::int64_t degree = 1;
  std::int64_t count = 0;
  MultiplicitySpectrum spectrum;

  std::string source_digest() const;
};

enum class GeneralTypeCondition {
  strong,  ///< t_k = t_{k-1} = t_{k-2} = 0, n >= 2
  weak,    ///< t_k = t_{k-1} = 0, n >= 3
};

bool satisfies(const MultiplicitySpectrum& spectrum, std::int64_t count, GeneralTypeCondition cond);
std::int64_t minimum_order(GeneralTypeCondition cond);

/// Coefficients indexed by the power of n. The same closed forms are used for
/// a single datum (T = Rational) and for a parameterised family
/// (T = QuasiPolynomial in the family parameter).
template <class T>
struct ChernCoefficients {
  std::array<T, 3> c1sq;
  std::array<T, 3> c2;
};

namespace detail {
template <class T>
T lift(long v);
template <>
inline Rational lift<Rational>(long v) { return Rational(v); }
template <>
inline QuasiPolynomial lift<QuasiPolynomial>(long v) { return QuasiPolynomial::constant(Rational(v)); }
}  // namespace detail

/// Chern formulas for smooth degree-d curves meeting transversally.
template <class T>
ChernCoefficients<T> general_chern_coefficients(const T& d, const T& k, const T& f0, const T& f1, const T& t2) {
  auto c = [](long v) { return detail::lift<T>(v); };
  T e = d * d - c(3) * d;
  T linear = c(0) - e * k - c(2) * f1 + c(2) * f0;
  ChernCoefficients<T> out;
  out.c2 = {f1 - t2, linear, c(3) + e * k + f1 - f0};
  out.c1sq = {c(3) * d * k + e * k + f1 - f0 + t2, c(2) * linear,
              c(9) + d * d * k - c(6) * d * k + c(3) * f1 - c(4) * f0};
  return out;
}

/// Chern formulas specialised to line configurations.
template <class T>
ChernCoefficients<T> line_chern_coefficients(const T& k, const T& f0, const T& f1, const T& t2) {
  auto c = [](long v) { return detail::lift<T>(v); };
  T mid = k - f1 + f0;
  ChernCoefficients<T> out;
  out.c2 = {f1 - t2, c(2) * mid, c(3) - c(2) * k + f1 - f0};
  out.c1sq = {f1 - f0 + k + t2, c(4) * mid, c(9) - c(5) * k + c(3) * f1 - c(4) * f0};
  return out;
}

/// Requires t_k = 0 and k >= 4. For lines the general-degree formulas are
/// checked against the line formulas.
ChernPair chern_pair(const ValidatedConfiguration& cfg);

/// c1^2(n) / c2(n); n >= 2 and c2(n) > 0.
Rational slope_at(const ChernPair& pair, const Integer& n);
inline Rational slope_at(const ChernPair& pair, std::int64_t n) { return slope_at(pair, to_integer(n)); }

/// Limit of the slope as n -> infinity: ratio of the n^2 coefficients.
Rational characteristic_number(const ChernPair& pair);

/// 3*c2 - c1^2 as a quadratic in n (lines only).
QuadraticInN bmy_gap(const ChernPair& pair);

/// The gap polynomial in the shifted variable x = n - 1.
QuadraticInN bmy_gap_shifted(const ChernPair& pair);

/// All integers n >= minimum_order(cond) with bmy_gap(n) == 0, ascending.
std::vector<Integer> ball_quotient_candidates(const ChernPair& pair, GeneralTypeCondition cond);

/// Integer roots of a*n^2 + b*n + c that are >= n_min.
std::vector<Integer> integer_roots(const QuadraticInN& q, const Integer& n_min);

/// (2(k-3)/(k-2), 8/3) for k >= 6.
std::pair<Rational, Rational> sommese_bounds(std::int64_t k);

}  // namespace curvecfg
