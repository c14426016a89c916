#include "curvecfg/inequalities.hpp"

#include "curvecfg/kummer.hpp"

namespace curvecfg {

namespace {

Rational tail_sum(const ValidatedConfiguration& cfg, std::int64_t from, std::int64_t shift) {
  Rational sum = 0;
  for (const auto& [r, t] : cfg.spectrum().entries()) {
    if (r >= from) sum += Rational(to_integer((r - shift) * t));
  }
  return sum;
}

Rational t(const ValidatedConfiguration& cfg, std::int64_t r) { return Rational(to_integer(cfg.t(r))); }

InequalityVerdict finish(InequalityVerdict v) {
  v.slack = v.relation == Relation::at_least ? v.lhs - v.rhs : v.rhs - v.lhs;
  if (v.reasons.empty()) {
    v.preconditions_met = true;
    v.holds = v.relation == Relation::at_least ? v.slack >= 0 : v.slack > 0;
  } else {
    v.preconditions_met = false;
    v.holds.reset();
  }
  return v;
}

}  // namespace

InequalityVerdict hirzebruch_lines(const ValidatedConfiguration& cfg) {
  InequalityVerdict v;
  v.name = "hirzebruch";
  const std::int64_t k = cfg.count();
  if (cfg.degree() != 1) v.reasons.push_back("requires a line configuration (d = 1)");
  if (k < 4) v.reasons.push_back("requires k >= 4 lines");
  if (cfg.t(k) != 0 || cfg.t(k - 1) != 0) v.reasons.push_back("requires t_k = t_{k-1} = 0");
  v.lhs = t(cfg, 2) + Rational(3, 4) * t(cfg, 3);
  v.rhs = Rational(to_integer(k)) + tail_sum(cfg, 5, 4);
  v.interpretation = "failure rules out realizability over the complex numbers";
  return finish(std::move(v));
}

InequalityVerdict melchior(const ValidatedConfiguration& cfg) {
  InequalityVerdict v;
  v.name = "melchior";
  const std::int64_t k = cfg.count();
  if (cfg.degree() != 1) v.reasons.push_back("requires a line configuration (d = 1)");
  if (k < 3) v.reasons.push_back("requires k >= 3 lines");
  if (cfg.t(k) != 0) v.reasons.push_back("requires t_k = 0");
  v.lhs = t(cfg, 2);
  v.rhs = 3 + tail_sum(cfg, 4, 3);
  v.interpretation = "applies to real arrangements only; failure rules out realizability over the reals";
  return finish(std::move(v));
}

InequalityVerdict hirzebruch_dconfig(const ValidatedConfiguration& cfg) {
  const std::int64_t d = cfg.degree();
  if (d < 3) {
    throw CurveError(Errc::wrong_checker, "hirzebruch-d needs d >= 3; use " +
                                              std::string(d == 2 ? "tang-conics" : "hirzebruch") + " for d = " +
                                              std::to_string(d));
  }
  InequalityVerdict v;
  v.name = "hirzebruch-d";
  if (cfg.count() < 4) v.reasons.push_back("requires k >= 4 curves");
  if (cfg.t(cfg.count()) != 0) v.reasons.push_back("requires t_k = 0");
  Rational dd(to_integer(d));
  v.lhs = (Rational(7, 2) * dd * dd - Rational(9, 2) * dd) * Rational(to_integer(cfg.count())) + t(cfg, 2) + t(cfg, 3);
  v.rhs = tail_sum(cfg, 4, 4);
  v.interpretation = "failure rules out a transversal configuration of smooth curves over the complex numbers";
  return finish(std::move(v));
}

InequalityVerdict tang_conics(const ValidatedConfiguration& cfg) {
  if (cfg.degree() != 2) {
    throw CurveError(Errc::wrong_checker, "tang-conics needs d = 2; use " +
                                              std::string(cfg.degree() == 1 ? "hirzebruch" : "hirzebruch-d") +
                                              " for d = " + std::to_string(cfg.degree()));
  }
  InequalityVerdict v;
  v.name = "tang-conics";
  if (cfg.count() < 4) v.reasons.push_back("requires k >= 4 conics");
  if (cfg.t(cfg.count()) != 0) v.reasons.push_back("requires t_k = 0");
  v.lhs = 5 * Rational(to_integer(cfg.count())) + t(cfg, 2) + t(cfg, 3);
  v.rhs = tail_sum(cfg, 4, 4);
  v.interpretation = "failure rules out a transversal conic configuration over the complex numbers";
  return finish(std::move(v));
}

InequalityVerdict gamma_bound(const ValidatedConfiguration& cfg) {
  InequalityVerdict v;
  v.name = "gamma-bound";
  v.relation = Relation::strictly_less;
  v.rhs = Rational(8, 3);
  v.interpretation = "failure rules out a transversal configuration of smooth curves over the complex numbers";
  if (cfg.degree() < 2) {
    v.reasons.push_back("requires d >= 2 (for lines only gamma <= 8/3 holds, with equality for dual Hesse)");
    return finish(std::move(v));
  }
  InequalityVerdict hyp = cfg.degree() == 2 ? tang_conics(cfg) : hirzebruch_dconfig(cfg);
  for (const auto& r : hyp.reasons) v.reasons.push_back(r);
  if (hyp.preconditions_met && !*hyp.holds) v.reasons.push_back(hyp.name + " does not hold");
  if (!v.reasons.empty()) return finish(std::move(v));
  ChernPair pair = chern_pair(cfg);
  if (pair.c2.a <= 0) {
    v.reasons.push_back("leading coefficient of c2 is not positive");
    return finish(std::move(v));
  }
  v.lhs = characteristic_number(pair);
  return finish(std::move(v));
}

std::vector<InequalityVerdict> verify_all(const ValidatedConfiguration& cfg, bool all) {
  std::vector<InequalityVerdict> out;
  const std::int64_t d = cfg.degree();
  auto mismatch = [](const std::string& name, const std::string& why) {
    InequalityVerdict v;
    v.name = name;
    v.reasons.push_back(why);
    return finish(std::move(v));
  };
  if (d == 1 || all) {
    out.push_back(hirzebruch_lines(cfg));
    out.push_back(melchior(cfg));
  }
  if (d == 2) {
    out.push_back(tang_conics(cfg));
  } else if (all) {
    out.push_back(mismatch("tang-conics", "requires d = 2"));
  }
  if (d >= 3) {
    out.push_back(hirzebruch_dconfig(cfg));
  } else if (all) {
    out.push_back(mismatch("hirzebruch-d", "requires d >= 3"));
  }
  if (d >= 2 || all) out.push_back(gamma_bound(cfg));
  return out;
}

}  // namespace curvecfg
