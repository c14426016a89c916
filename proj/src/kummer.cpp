#include "curvecfg/kummer.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvecfg {

namespace {

QuadraticInN to_quadratic(const std::array<Rational, 3>& by_power) {
  return {by_power[2], by_power[1], by_power[0]};
}

void require_lines(const ChernPair& pair, const char* what) {
  if (pair.degree != 1) {
    throw CurveError(Errc::unsupported_degree, std::string(what) + " is only defined for line configurations");
  }
}

}  // namespace

std::string ChernPair::source_digest() const {
  return "d=" + std::to_string(degree) + ";k=" + std::to_string(count) + ";" + spectrum.digest();
}

bool satisfies(const MultiplicitySpectrum& spectrum, std::int64_t count, GeneralTypeCondition cond) {
  bool ok = spectrum.count(count) == 0 && spectrum.count(count - 1) == 0;
  if (cond == GeneralTypeCondition::strong) ok = ok && spectrum.count(count - 2) == 0;
  return ok;
}

std::int64_t minimum_order(GeneralTypeCondition cond) {
  return cond == GeneralTypeCondition::strong ? 2 : 3;
}

ChernPair chern_pair(const ValidatedConfiguration& cfg) {
  if (cfg.count() < 4) {
    throw CurveError(Errc::size, "Kummer covers need at least 4 curves, got " + std::to_string(cfg.count()));
  }
  if (cfg.t(cfg.count()) != 0) {
    throw CurveError(Errc::pencil, "all curves pass through a common point (t_k != 0)");
  }
  Rational d(to_integer(cfg.degree()));
  Rational k(to_integer(cfg.count()));
  Rational f0(cfg.f(0)), f1(cfg.f(1)), t2(to_integer(cfg.t(2)));
  auto general = general_chern_coefficients(d, k, f0, f1, t2);
  if (cfg.degree() == 1) {
    auto lines = line_chern_coefficients(k, f0, f1, t2);
    if (lines.c1sq != general.c1sq || lines.c2 != general.c2) {
      throw std::logic_error("general Chern formulas do not reduce to the line formulas at d = 1");
    }
  }
  ChernPair pair;
  pair.c1sq = to_quadratic(general.c1sq);
  pair.c2 = to_quadratic(general.c2);
  pair.degree = cfg.degree();
  pair.count = cfg.count();
  pair.spectrum = cfg.spectrum();
  return pair;
}

Rational slope_at(const ChernPair& pair, const Integer& n) {
  if (n < 2) throw CurveError(Errc::invalid_argument, "cover order n must be >= 2");
  Rational c2 = pair.c2(Rational(n));
  if (c2 <= 0) {
    throw CurveError(Errc::invalid_surface, "c2 is not positive at n = " + n.get_str());
  }
  return pair.c1sq(Rational(n)) / c2;
}

Rational characteristic_number(const ChernPair& pair) {
  if (pair.c2.a <= 0) {
    throw CurveError(Errc::undefined_gamma, "leading coefficient of c2 is not positive");
  }
  Rational gamma = pair.c1sq.a / pair.c2.a;
  if (pair.degree == 1) {
    Rational k(to_integer(pair.count));
    CurveConfigurationDatum src{1, pair.count, pair.spectrum, std::nullopt};
    Rational f0(f_moment(src, 0)), f1(f_moment(src, 1));
    Rational closed = Rational(5, 2) - (3 * f0 - f1 - 3) / (2 * (3 - 2 * k + f1 - f0));
    if (closed != gamma) throw std::logic_error("characteristic number disagrees with its closed form");
  }
  return gamma;
}

QuadraticInN bmy_gap(const ChernPair& pair) {
  require_lines(pair, "the BMY gap polynomial");
  QuadraticInN gap{3 * pair.c2.a - pair.c1sq.a, 3 * pair.c2.b - pair.c1sq.b, 3 * pair.c2.c - pair.c1sq.c};
  CurveConfigurationDatum src{1, pair.count, pair.spectrum, std::nullopt};
  Rational k(to_integer(pair.count));
  Rational f0(f_moment(src, 0)), f1(f_moment(src, 1)), t2(to_integer(pair.spectrum.count(2)));
  QuadraticInN closed{f0 - k, 2 * (k - f1 + f0), 2 * f1 + f0 - k - 4 * t2};
  if (closed != gap) throw std::logic_error("BMY gap disagrees with its closed form");
  return gap;
}

QuadraticInN bmy_gap_shifted(const ChernPair& pair) {
  QuadraticInN p = bmy_gap(pair);
  // p(x + 1) = a x^2 + (2a + b) x + (a + b + c)
  QuadraticInN shifted{p.a, 2 * p.a + p.b, p.a + p.b + p.c};
  CurveConfigurationDatum src{1, pair.count, pair.spectrum, std::nullopt};
  Rational k(to_integer(pair.count));
  Rational f0(f_moment(src, 0)), f1(f_moment(src, 1)), t2(to_integer(pair.spectrum.count(2)));
  QuadraticInN closed{f0 - k, -2 * (f1 - 2 * f0), 4 * (f0 - t2)};
  if (closed != shifted) throw std::logic_error("shifted BMY gap disagrees with its closed form");
  return shifted;
}

std::vector<Integer> integer_roots(const QuadraticInN& q, const Integer& n_min) {
  Integer scale = lcm(lcm(q.a.get_den(), q.b.get_den()), q.c.get_den());
  Integer a = Rational(q.a * scale).get_num();
  Integer b = Rational(q.b * scale).get_num();
  Integer c = Rational(q.c * scale).get_num();
  std::vector<Integer> roots;
  auto accept = [&](const Integer& num, const Integer& den) {
    if (den == 0 || num % den != 0) return;
    Integer r = num / den;
    if (r >= n_min && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  };
  if (a == 0) {
    if (b == 0) {
      if (c == 0) throw CurveError(Errc::unsupported, "gap polynomial vanishes identically");
      return roots;
    }
    accept(-c, b);
    return roots;
  }
  Integer disc = b * b - 4 * a * c;
  if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) return roots;
  Integer s = sqrt(disc);
  accept(-b - s, 2 * a);
  accept(-b + s, 2 * a);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Integer> ball_quotient_candidates(const ChernPair& pair, GeneralTypeCondition cond) {
  require_lines(pair, "ball-quotient detection");
  if (!satisfies(pair.spectrum, pair.count, cond)) {
    throw CurveError(Errc::invalid_argument, "spectrum does not satisfy the requested general-type condition");
  }
  return integer_roots(bmy_gap(pair), to_integer(minimum_order(cond)));
}

std::pair<Rational, Rational> sommese_bounds(std::int64_t k) {
  if (k < 6) throw CurveError(Errc::out_of_range, "Sommese bounds need k >= 6");
  return {make_rational(2 * (k - 3), k - 2), Rational(8, 3)};
}

}  // namespace curvecfg
