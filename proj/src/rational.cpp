#include "curvecfg/rational.hpp"

#include "curvecfg/errors.hpp"

#include <string>

namespace curvecfg {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::not_validated: return "not-validated";
    case Errc::no_singular_points: return "no-singular-points";
    case Errc::unsupported_degree: return "unsupported-degree";
    case Errc::degenerate_intersection: return "degenerate-intersection";
    case Errc::duplicate_line: return "duplicate-line";
    case Errc::generation_failure: return "generation-failure";
    case Errc::precision_exhausted: return "precision-exhausted";
    case Errc::domain: return "domain";
    case Errc::no_limit: return "no-limit";
    case Errc::unsupported: return "unsupported";
    case Errc::pencil: return "pencil";
    case Errc::size: return "size";
    case Errc::invalid_surface: return "invalid-surface";
    case Errc::undefined_gamma: return "undefined-gamma";
    case Errc::out_of_range: return "out-of-range";
    case Errc::wrong_checker: return "wrong-checker";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw CurveError(Errc::invalid_argument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) throw CurveError(Errc::invalid_argument, "negative digit count");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer num = abs(q.get_num()) * scale;
  const Integer& den = q.get_den();
  // round half away from zero: floor((2*num + den) / (2*den))
  Integer scaled = (2 * num + den) / (2 * den);
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  bool negative = sgn(q) < 0 && scaled != 0;
  return negative ? "-" + body : body;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    Integer z;
    if (part.empty() || z.set_str(part, 10) != 0) {
      throw CurveError(Errc::parse, "malformed rational: '" + s + "'");
    }
    return z;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace curvecfg
