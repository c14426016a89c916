#include "curvecfg/families.hpp"

#include <stdexcept>

namespace curvecfg {

namespace {

QuasiPolynomial qp(std::vector<Rational> coeffs) { return QuasiPolynomial(Polynomial(std::move(coeffs))); }

QuasiPolynomial linear_in_param(std::int64_t slope, std::int64_t offset) {
  return qp({Rational(static_cast<long>(offset)), Rational(static_cast<long>(slope))});
}

Rational leading_ratio(const QuasiPolynomial& num, const QuasiPolynomial& den, const std::string& what) {
  int deg = den.degree();
  if (deg < 0) throw CurveError(Errc::no_limit, what + ": denominator vanishes");
  auto lead_den = den.uniform_coefficient(deg);
  if (!lead_den) throw CurveError(Errc::no_limit, what + ": leading coefficient depends on the residue class");
  if (num.degree() > deg) throw CurveError(Errc::no_limit, what + ": ratio diverges");
  auto lead_num = num.uniform_coefficient(deg);
  if (!lead_num) throw CurveError(Errc::no_limit, what + ": leading coefficient depends on the residue class");
  return *lead_num / *lead_den;
}

bool integral_nonnegative(const Rational& q) { return is_integer(q) && q >= 0; }

}  // namespace

QuasiPolynomial FamilySpectrum::moment(int i) const {
  if (i < 0 || i > 2) throw CurveError(Errc::invalid_argument, "moment index must be 0, 1 or 2");
  QuasiPolynomial sum;
  for (const auto& [r, count] : fixed) {
    Rational weight = 1;
    for (int p = 0; p < i; ++p) weight *= Rational(static_cast<long>(r));
    sum += weight * count;
  }
  for (const auto& g : growing) {
    QuasiPolynomial term = g.count;
    for (int p = 0; p < i; ++p) term = QuasiPolynomial(g.multiplicity) * term;
    sum += term;
  }
  return sum;
}

QuasiPolynomial FamilySpectrum::fixed_count(std::int64_t r) const {
  auto it = fixed.find(r);
  return it == fixed.end() ? QuasiPolynomial() : it->second;
}

BuiltinFamily parse_family_name(std::string_view name) {
  if (name == "boroczky") return BuiltinFamily::boroczky;
  if (name == "s-elliptic" || name == "s_elliptic") return BuiltinFamily::s_elliptic;
  if (name == "polyhedral") return BuiltinFamily::polyhedral;
  if (name == "fermat") return BuiltinFamily::fermat;
  throw CurveError(Errc::invalid_argument, "unknown family '" + std::string(name) + "'");
}

FamilySpectrum builtin_family(std::string_view name, std::int64_t w) {
  return builtin_family(parse_family_name(name), w);
}

FamilySpectrum builtin_family(BuiltinFamily kind, std::int64_t w) {
  FamilySpectrum fam;
  switch (kind) {
    case BuiltinFamily::boroczky: {
      fam.name = "boroczky";
      fam.line_count = linear_in_param(1, 0);
      QuasiPolynomial eps = QuasiPolynomial::periodic({Rational(0), Rational(2), Rational(2)});
      fam.fixed[2] = linear_in_param(1, -3) + eps;
      fam.fixed[3] = QuasiPolynomial::constant(1) + qp_from_floor({0, -3, 1}, 6);
      fam.domain = {6, 2, 0};
      break;
    }
    case BuiltinFamily::s_elliptic: {
      if (w < 0) throw CurveError(Errc::invalid_argument, "s-elliptic flex count w must be >= 0");
      fam.name = "s-elliptic(w=" + std::to_string(w) + ")";
      fam.line_count = linear_in_param(1, 0);
      fam.fixed[2] = linear_in_param(1, -w);
      Rational w3 = make_rational(w, 3);
      fam.fixed[3] = qp({w3, Rational(-1, 2), Rational(1, 6)});
      fam.domain = {3, 1, 0};
      break;
    }
    case BuiltinFamily::polyhedral: {
      fam.name = "polyhedral";
      fam.line_count = linear_in_param(2, 0);
      fam.fixed[2] = linear_in_param(1, 0);
      fam.fixed[3] = qp({Rational(0), Rational(-1, 2), Rational(1, 2)});
      fam.growing.push_back({Polynomial::identity(), QuasiPolynomial::constant(1)});
      fam.domain = {3, 1, 0};
      break;
    }
    case BuiltinFamily::fermat: {
      fam.name = "fermat";
      fam.parameter = "m";
      fam.line_count = linear_in_param(3, 0);
      fam.fixed[3] = qp({Rational(0), Rational(0), Rational(1)});
      fam.growing.push_back({Polynomial::identity(), QuasiPolynomial::constant(3)});
      fam.domain = {3, 1, 0};
      break;
    }
  }
  return fam;
}

FamilySpectrum generic_family(std::int64_t degree) {
  if (degree < 1) throw CurveError(Errc::invalid_argument, "degree must be >= 1");
  FamilySpectrum fam;
  fam.name = "generic(d=" + std::to_string(degree) + ")";
  fam.degree = degree;
  fam.line_count = linear_in_param(1, 0);
  Rational half_d2 = make_rational(degree * degree, 2);
  fam.fixed[2] = qp({Rational(0), -half_d2, half_d2});
  fam.domain = {degree == 1 ? 2 : 4, 1, 0};
  return fam;
}

FamilySpectrum dominant_profile(std::int64_t r0, const Rational& c) {
  if (r0 < 3) throw CurveError(Errc::invalid_argument, "dominant multiplicity must be >= 3");
  if (c <= 0) throw CurveError(Errc::invalid_argument, "dominant coefficient must be positive");
  FamilySpectrum fam;
  fam.name = "dominant-t" + std::to_string(r0);
  fam.line_count = linear_in_param(1, 0);
  fam.fixed[r0] = qp({Rational(0), Rational(0), c});
  fam.instantiable = false;
  return fam;
}

ValidatedConfiguration instantiate(const FamilySpectrum& fam, std::int64_t parameter) {
  if (!fam.instantiable) {
    throw CurveError(Errc::unsupported, "family '" + fam.name + "' is limit-only and cannot be instantiated");
  }
  const auto& dom = fam.domain;
  const std::string at = fam.parameter + "=" + std::to_string(parameter);
  if (parameter < dom.min_parameter) {
    throw CurveError(Errc::domain, fam.name + ": " + at + " is below the minimum " + std::to_string(dom.min_parameter));
  }
  if (((parameter - dom.residue) % dom.modulus + dom.modulus) % dom.modulus != 0) {
    throw CurveError(Errc::domain, fam.name + ": " + at + " violates the parity rule " + fam.parameter + " ≡ " +
                                       std::to_string(dom.residue) + " (mod " + std::to_string(dom.modulus) + ")");
  }
  auto checked = [&](const Rational& v, const std::string& what) -> std::int64_t {
    if (!is_integer(v)) throw CurveError(Errc::domain, fam.name + ": " + what + " = " + to_string(v) + " is not integral at " + at);
    if (v < 0) throw CurveError(Errc::domain, fam.name + ": " + what + " = " + to_string(v) + " is negative at " + at);
    if (!v.get_num().fits_slong_p()) throw CurveError(Errc::domain, fam.name + ": " + what + " overflows at " + at);
    return v.get_num().get_si();
  };
  CurveConfigurationDatum cfg;
  cfg.degree = fam.degree;
  cfg.count = checked(fam.line_count(parameter), "line count");
  cfg.label = fam.name + "(" + at + ")";
  for (const auto& [r, count] : fam.fixed) cfg.spectrum.add(r, checked(count(parameter), "t_" + std::to_string(r)));
  for (const auto& g : fam.growing) {
    std::int64_t r = checked(g.multiplicity(Rational(to_integer(parameter))), "growing multiplicity");
    if (r < 2) throw CurveError(Errc::domain, fam.name + ": growing multiplicity below 2 at " + at);
    cfg.spectrum.add(r, checked(g.count(parameter), "t_" + std::to_string(r)));
  }
  return ValidatedConfiguration::check(std::move(cfg));
}

std::optional<std::int64_t> next_admissible(const FamilySpectrum& fam, std::int64_t from, std::int64_t search) {
  for (std::int64_t p = from; p < from + search; ++p) {
    try {
      instantiate(fam, p);
      return p;
    } catch (const CurveError& e) {
      if (e.code() != Errc::domain) throw;
    }
  }
  return std::nullopt;
}

Rational asymptotic_harbourne(const FamilySpectrum& fam) {
  QuasiPolynomial f0 = fam.moment(0);
  if (f0.degree() < 1) throw CurveError(Errc::no_limit, fam.name + ": singular point count does not grow");
  return leading_ratio(fam.line_count - fam.moment(1), f0, fam.name + " Harbourne limit");
}

ChernCoefficients<QuasiPolynomial> symbolic_chern(const FamilySpectrum& fam) {
  QuasiPolynomial d = QuasiPolynomial::constant(Rational(static_cast<long>(fam.degree)));
  QuasiPolynomial f0 = fam.moment(0), f1 = fam.moment(1), t2 = fam.fixed_count(2);
  auto general = general_chern_coefficients(d, fam.line_count, f0, f1, t2);
  if (fam.degree == 1) {
    auto lines = line_chern_coefficients(fam.line_count, f0, f1, t2);
    if (lines.c1sq != general.c1sq || lines.c2 != general.c2) {
      throw std::logic_error("symbolic Chern formulas disagree at d = 1");
    }
  }
  return general;
}

RationalFunctionInN k_chern_slope(const FamilySpectrum& fam) {
  auto chern = symbolic_chern(fam);
  int deg = -1;
  for (int j = 0; j < 3; ++j) deg = std::max({deg, chern.c1sq[j].degree(), chern.c2[j].degree()});
  if (deg < 1) throw CurveError(Errc::no_limit, fam.name + ": Chern coefficients do not grow");
  std::vector<Rational> num(3), den(3);
  for (std::size_t j = 0; j < 3; ++j) {
    auto a = chern.c1sq[j].uniform_coefficient(deg);
    auto b = chern.c2[j].uniform_coefficient(deg);
    if (!a || !b) throw CurveError(Errc::no_limit, fam.name + ": leading Chern coefficient depends on the residue class");
    num[j] = *a;
    den[j] = *b;
  }
  Polynomial denominator(den);
  if (denominator.is_zero()) throw CurveError(Errc::no_limit, fam.name + ": c2 leading term vanishes");
  return RationalFunctionInN(Polynomial(num), denominator);
}

Rational kn_chern_slope(const FamilySpectrum& fam) {
  RationalFunctionInN slope = k_chern_slope(fam);
  const auto& p = slope.numerator();
  const auto& q = slope.denominator();
  if (p.degree() > q.degree()) throw CurveError(Errc::no_limit, fam.name + ": k-slope diverges in n");
  Rational along_n = p.degree() < q.degree() ? Rational(0) : p.leading() / q.leading();

  auto chern = symbolic_chern(fam);
  Rational along_k = leading_ratio(chern.c1sq[2], chern.c2[2], fam.name + " characteristic-number limit");
  if (along_n != along_k) {
    throw CurveError(Errc::no_limit, fam.name + ": iterated limits disagree (" + to_string(along_n) + " vs " +
                                         to_string(along_k) + ")");
  }
  return along_n;
}

}  // namespace curvecfg
