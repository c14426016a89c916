#include "curvecfg/quasi_polynomial.hpp"

#include "curvecfg/errors.hpp"

#include <numeric>

namespace curvecfg {

QuasiPolynomial::QuasiPolynomial() : branches_(1) {}

QuasiPolynomial::QuasiPolynomial(Polynomial p) : branches_{std::move(p)} {}

QuasiPolynomial::QuasiPolynomial(std::vector<Polynomial> branches) : branches_(std::move(branches)) {
  if (branches_.empty()) throw CurveError(Errc::invalid_argument, "quasi-polynomial needs period >= 1");
  reduce_period();
}

QuasiPolynomial QuasiPolynomial::periodic(const std::vector<Rational>& values) {
  std::vector<Polynomial> branches;
  for (const auto& v : values) branches.push_back(Polynomial::constant(v));
  return QuasiPolynomial(std::move(branches));
}

int QuasiPolynomial::degree() const {
  int deg = -1;
  for (const auto& b : branches_) deg = std::max(deg, b.degree());
  return deg;
}

Rational QuasiPolynomial::operator()(const Integer& k) const {
  Integer m = to_integer(static_cast<std::int64_t>(period()));
  Integer r = k % m;
  if (r < 0) r += m;
  return branches_[r.get_ui()](Rational(k));
}

std::optional<Rational> QuasiPolynomial::uniform_coefficient(int deg) const {
  Rational first = branches_.front().coeff(deg);
  for (const auto& b : branches_) {
    if (b.coeff(deg) != first) return std::nullopt;
  }
  return first;
}

template <class Op>
QuasiPolynomial QuasiPolynomial::combine(const QuasiPolynomial& a, const QuasiPolynomial& b, Op op) {
  std::size_t period = std::lcm(a.period(), b.period());
  std::vector<Polynomial> out;
  out.reserve(period);
  for (std::size_t r = 0; r < period; ++r) out.push_back(op(a.branch(r), b.branch(r)));
  return QuasiPolynomial(std::move(out));
}

QuasiPolynomial& QuasiPolynomial::operator+=(const QuasiPolynomial& o) {
  return *this = combine(*this, o, [](const Polynomial& x, const Polynomial& y) { return x + y; });
}

QuasiPolynomial& QuasiPolynomial::operator-=(const QuasiPolynomial& o) {
  return *this = combine(*this, o, [](const Polynomial& x, const Polynomial& y) { return x - y; });
}

QuasiPolynomial operator*(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  return QuasiPolynomial::combine(a, b, [](const Polynomial& x, const Polynomial& y) { return x * y; });
}

QuasiPolynomial operator*(const Rational& s, const QuasiPolynomial& a) {
  std::vector<Polynomial> out;
  for (const auto& b : a.branches_) out.push_back(s * b);
  return QuasiPolynomial(std::move(out));
}

void QuasiPolynomial::reduce_period() {
  const std::size_t n = branches_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t r = p; r < n && repeats; ++r) repeats = branches_[r] == branches_[r % p];
    if (repeats) {
      branches_.resize(p);
      return;
    }
  }
}

QuasiPolynomial qp_from_floor(const std::vector<Integer>& numer, std::int64_t divisor) {
  if (divisor < 1) throw CurveError(Errc::invalid_argument, "floor divisor must be >= 1");
  std::vector<Rational> base;
  for (const auto& c : numer) base.emplace_back(c);
  Polynomial p(base);
  Integer q = to_integer(divisor);
  Rational inv_q = make_rational(Integer(1), q);
  std::vector<Polynomial> branches;
  for (std::int64_t r = 0; r < divisor; ++r) {
    // numer(k) ≡ numer(r) (mod q) for k ≡ r, so the floor drops a fixed remainder
    Integer value = p(Rational(to_integer(r))).get_num();
    Integer rem = value % q;
    if (rem < 0) rem += q;
    branches.push_back(inv_q * (p - Polynomial::constant(Rational(rem))));
  }
  return QuasiPolynomial(std::move(branches));
}

}  // namespace curvecfg
