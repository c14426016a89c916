#include "curvecfg/polynomial.hpp"

#include "curvecfg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace curvecfg {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::identity() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> out = a.c_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw CurveError(Errc::invalid_argument, "polynomial division by zero");
  Polynomial rem = *this;
  std::vector<Rational> quot(std::max(0, degree() - divisor.degree() + 1), Rational(0));
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Rational factor = rem.leading() / divisor.leading();
    quot[static_cast<std::size_t>(shift)] = factor;
    std::vector<Rational> term(static_cast<std::size_t>(shift) + 1, Rational(0));
    term.back() = factor;
    rem -= Polynomial(std::move(term)) * divisor;
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return Rational(1) / leading() * *this;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = mag == 1 && i > 0;
    if (!unit) out << to_string(mag);
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

RationalFunctionInN::RationalFunctionInN(Polynomial numer, Polynomial denom) {
  if (denom.is_zero()) throw CurveError(Errc::invalid_argument, "rational function with zero denominator");
  Polynomial g = Polynomial::gcd(numer, denom);
  num_ = numer.divmod(g).first;
  den_ = denom.divmod(g).first;
  Rational lead = den_.leading();
  num_ = Rational(1) / lead * num_;
  den_ = Rational(1) / lead * den_;
}

Rational RationalFunctionInN::operator()(const Rational& n) const {
  Rational q = den_(n);
  if (q == 0) throw CurveError(Errc::invalid_argument, "rational function evaluated at a pole");
  return num_(n) / q;
}

std::string RationalFunctionInN::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

}  // namespace curvecfg
