#include "curvecfg/config.hpp"

#include <sstream>
#include <stdexcept>

namespace curvecfg {

MultiplicitySpectrum::MultiplicitySpectrum(
    std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init) {
  for (const auto& [r, t] : init) add(r, t);
}

void MultiplicitySpectrum::add(std::int64_t r, std::int64_t t) {
  if (r < 2) throw CurveError(Errc::invalid_argument, "multiplicity must be >= 2, got " + std::to_string(r));
  if (t < 0) throw CurveError(Errc::invalid_argument, "point count must be >= 0, got " + std::to_string(t));
  if (t == 0) return;
  entries_[r] += t;
}

std::int64_t MultiplicitySpectrum::count(std::int64_t r) const {
  auto it = entries_.find(r);
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t MultiplicitySpectrum::max_multiplicity() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

std::string MultiplicitySpectrum::digest() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, t] : entries_) {
    if (!first) out << ',';
    out << r << ':' << t;
    first = false;
  }
  return out.str();
}

Integer f_moment(const CurveConfigurationDatum& cfg, int i) {
  if (i < 0 || i > 2) throw CurveError(Errc::invalid_argument, "moment index must be 0, 1 or 2");
  Integer sum = 0;
  for (const auto& [r, t] : cfg.spectrum.entries()) {
    Integer term = to_integer(t);
    for (int p = 0; p < i; ++p) term *= to_integer(r);
    sum += term;
  }
  return sum;
}

ValidationReport validate(const CurveConfigurationDatum& cfg) {
  ValidationReport report;
  if (cfg.degree < 1) report.problems.push_back("degree must be >= 1");
  if (cfg.count < 1) report.problems.push_back("curve count must be >= 1");
  if (cfg.spectrum.max_multiplicity() > cfg.count) {
    report.problems.push_back("multiplicity " + std::to_string(cfg.spectrum.max_multiplicity()) +
                              " exceeds curve count " + std::to_string(cfg.count));
  }
  Integer d = to_integer(cfg.degree);
  Integer k = to_integer(cfg.count);
  report.lhs = d * d * (k * k - k);
  report.rhs = 0;
  for (const auto& [r, t] : cfg.spectrum.entries()) {
    Integer rr = to_integer(r);
    report.rhs += (rr * rr - rr) * to_integer(t);
  }
  report.identity_holds = report.lhs == report.rhs;
  if (cfg.degree == 1) {
    report.line_form = std::make_pair(Integer(k * k - k), Integer(f_moment(cfg, 2) - f_moment(cfg, 1)));
    if ((report.line_form->first == report.line_form->second) != report.identity_holds) {
      throw std::logic_error("line form of the combinatorial identity disagrees with the general form");
    }
  }
  return report;
}

ValidatedConfiguration ValidatedConfiguration::check(CurveConfigurationDatum cfg) {
  ValidationReport report = validate(cfg);
  if (!report.passed()) {
    std::string msg = "configuration";
    if (cfg.label) msg += " '" + *cfg.label + "'";
    msg += " failed validation:";
    for (const auto& p : report.problems) msg += " " + p + ";";
    if (!report.identity_holds) {
      msg += " combinatorial identity " + to_string(report.lhs) + " != " + to_string(report.rhs);
    }
    throw CurveError(Errc::not_validated, msg);
  }
  return ValidatedConfiguration(std::move(cfg));
}

Rational linear_harbourne(const ValidatedConfiguration& cfg) {
  if (cfg.degree() != 1) {
    throw CurveError(Errc::unsupported_degree, "Harbourne constant is defined for line configurations only");
  }
  Integer f0 = cfg.f(0);
  if (f0 == 0) throw CurveError(Errc::no_singular_points, "configuration has no singular points");
  Integer k = to_integer(cfg.count());
  Rational value = make_rational(k * k - cfg.f(2), f0);
  if (value != make_rational(k - cfg.f(1), f0)) {
    throw std::logic_error("Harbourne formulas disagree on a validated datum");
  }
  return value;
}

}  // namespace curvecfg
