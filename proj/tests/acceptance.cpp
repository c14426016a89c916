// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion is checked directly against the library and also
// against the matching claims of the reproduction report.

#include "curvecfg/families.hpp"
#include "curvecfg/fixtures.hpp"
#include "curvecfg/incidence.hpp"
#include "curvecfg/inequalities.hpp"
#include "curvecfg/kummer.hpp"
#include "curvecfg/polygon_families.hpp"
#include "curvecfg/reproduce.hpp"

#include "oracles.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace curvecfg;

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream msg;
    msg << what << ": got " << show(got) << ", want " << show(want);
    failures_.push_back(msg.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  template <class T>
  static std::string show(const T& v) {
    if constexpr (std::is_same_v<T, Rational>) {
      return to_string(v);
    } else if constexpr (std::is_same_v<T, QuadraticInN>) {
      return "(" + to_string(v.a) + ", " + to_string(v.b) + ", " + to_string(v.c) + ")";
    } else if constexpr (std::is_same_v<T, RationalFunctionInN>) {
      return v.str();
    } else if constexpr (std::is_same_v<T, std::string>) {
      return v;
    } else if constexpr (std::is_arithmetic_v<T>) {
      return std::to_string(v);
    } else {
      return "<value>";
    }
  }
  std::vector<std::string> failures_;
};

QuadraticInN quad(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

ValidatedConfiguration lines(std::int64_t k, MultiplicitySpectrum s) {
  return ValidatedConfiguration::check({1, k, std::move(s), std::nullopt});
}

void wiman(Checks& c) {
  Rational h = linear_harbourne(lines(45, {{3, 120}, {4, 45}, {5, 36}}));
  c.equal(h, Rational(-225, 67), "Wiman Harbourne constant");
  c.equal(to_decimal(h, 5), std::string("-3.35821"), "Wiman decimal");
}

void t6(Checks& c) {
  auto pair = chern_pair(lines(6, {{2, 3}, {3, 4}}));
  c.equal(pair.c2, quad(2, -10, 15), "T6 c2");
  c.equal(pair.c1sq, quad(5, -20, 20), "T6 c1^2");
  c.equal(slope_at(pair, 5), Rational(3), "T6 slope at n=5");
  c.expect(ball_quotient_candidates(pair, GeneralTypeCondition::strong) == std::vector<Integer>{5},
           "T6 ball-quotient orders");
}

void klein(Checks& c) {
  auto pair = chern_pair(lines(21, {{3, 28}, {4, 21}}));
  c.equal(pair.c1sq, quad(212, -392, 140), "Klein c1^2");
  c.equal(pair.c2, quad(80, -196, 168), "Klein c2");
  c.equal(slope_at(pair, 4), Rational(491, 166), "Klein slope at n=4");
  c.equal(to_decimal(slope_at(pair, 4), 5), std::string("2.95783"), "Klein slope decimal");
  c.equal(characteristic_number(pair), Rational(53, 20), "Klein gamma");
  c.equal(to_decimal(characteristic_number(pair), 2), std::string("2.65"), "Klein gamma decimal");
}

void line_inequalities(Checks& c) {
  auto check = [&](const InequalityVerdict& v, long lhs, long rhs, bool holds, const std::string& what) {
    c.equal(v.lhs, Rational(lhs), what + " lhs");
    c.equal(v.rhs, Rational(rhs), what + " rhs");
    c.expect(v.holds == holds, what + " verdict");
  };
  check(hirzebruch_lines(fixtures::t6()), 6, 6, true, "Hirzebruch T6");
  check(hirzebruch_lines(fixtures::klein()), 21, 21, true, "Hirzebruch Klein");
  check(melchior(fixtures::t6()), 3, 3, true, "Melchior T6");
  check(melchior(fixtures::klein()), 0, 24, false, "Melchior Klein");
}

RationalFunctionInN rf(std::vector<Rational> num, std::vector<Rational> den) {
  return {Polynomial(std::move(num)), Polynomial(std::move(den))};
}

void family_limits(Checks& c) {
  auto want = rf({Rational(1), Rational(-4), Rational(5, 2)}, {Rational(3, 2), Rational(-2), Rational(1)});
  for (auto fam : {builtin_family(BuiltinFamily::boroczky), builtin_family(BuiltinFamily::s_elliptic, 3),
                   builtin_family(BuiltinFamily::polyhedral), builtin_family(BuiltinFamily::fermat)}) {
    c.equal(asymptotic_harbourne(fam), Rational(-3), fam.name + " Harbourne limit");
    c.equal(k_chern_slope(fam), want, fam.name + " k-slope");
    c.equal(kn_chern_slope(fam), Rational(5, 2), fam.name + " (k,n)-slope");
  }
}

void ball_quotients(Checks& c) {
  auto b8 = chern_pair(instantiate(builtin_family(BuiltinFamily::boroczky), 8));
  c.equal(bmy_gap(b8)(2), Rational(20), "Boroczky k=8 gap at n=2");
  auto p4 = chern_pair(instantiate(builtin_family(BuiltinFamily::polyhedral), 4));
  c.equal(bmy_gap(p4)(4), Rational(7), "polyhedral k=4 gap at n=4");
  auto none = [&](const FamilySpectrum& fam, std::int64_t k) {
    auto pair = chern_pair(instantiate(fam, k));
    if (!satisfies(pair.spectrum, pair.count, GeneralTypeCondition::strong)) return;
    c.expect(ball_quotient_candidates(pair, GeneralTypeCondition::strong).empty(),
             fam.name + " k=" + std::to_string(k) + " has a ball quotient");
  };
  for (std::int64_t k = 8; k <= 40; k += 2) none(builtin_family(BuiltinFamily::boroczky), k);
  for (std::int64_t k = 4; k <= 40; ++k) none(builtin_family(BuiltinFamily::polyhedral), k);
}

void profiles(Checks& c) {
  auto p3 = dominant_profile(3);
  c.equal(asymptotic_harbourne(p3), Rational(-3), "t3 profile Harbourne limit");
  c.equal(kn_chern_slope(p3), Rational(5, 2), "t3 profile (k,n)-slope");
  auto p4 = dominant_profile(4);
  c.equal(asymptotic_harbourne(p4), Rational(-4), "t4 profile Harbourne limit");
  c.equal(kn_chern_slope(p4), Rational(8, 3), "t4 profile (k,n)-slope");
  auto slope = k_chern_slope(p4);
  c.equal(slope, rf({Rational(1), Rational(-4), Rational(8, 3)}, {Rational(4, 3), Rational(-2), Rational(1)}),
          "t4 profile k-slope");
  c.equal(slope(Rational(3)), Rational(3), "t4 profile k-slope at n=3");
}

void curve_examples(Checks& c) {
  c.equal(characteristic_number(chern_pair(fixtures::ap_conics())), Rational(9, 5), "AP conics gamma");
  c.equal(characteristic_number(chern_pair(fixtures::hesse_conics())), Rational(13, 6), "Hesse conics gamma");
  for (std::int64_t d = 2; d <= 4; ++d) {
    auto fam = generic_family(d);
    for (std::int64_t k = 4; k <= 10; ++k) {
      Integer dk = d * k;
      Rational closed(2 * (dk - 3) * (dk - 3), Integer(d * d * k * k + (d * d - 6 * d) * k + 6));
      closed.canonicalize();
      c.equal(characteristic_number(chern_pair(instantiate(fam, k))), closed,
              "general d-configuration gamma d=" + std::to_string(d) + " k=" + std::to_string(k));
    }
    c.equal(kn_chern_slope(fam), Rational(2), "general d-configuration limit d=" + std::to_string(d));
  }
}

void identity_on_arrangements(Checks& c) {
  std::mt19937_64 rng(20240101);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t k = 2 + rng() % 7;
    auto ls = oracles::random_lines(rng, k, 3);
    auto cfg = spectrum_of(LineArrangement(ls));
    c.expect(validate(cfg.datum()).passed(), "identity fails on arrangement " + std::to_string(trial));
    std::int64_t triples = 0;
    for (auto [r, t] : cfg.spectrum().entries()) triples += r * (r - 1) * (r - 2) / 6 * t;
    c.equal(triples, oracles::concurrent_triples(ls), "concurrent triples on arrangement " + std::to_string(trial));
  }
}

void gamma_bound_property(Checks& c) {
  std::mt19937_64 rng(8);
  int applicable = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 3);
    std::int64_t k = 4 + static_cast<std::int64_t>(rng() % 17);
    auto v = gamma_bound(ValidatedConfiguration::check(oracles::random_spectrum(rng, d, k)));
    if (!v.preconditions_met) continue;
    ++applicable;
    c.expect(v.holds == true, "gamma >= 8/3 at trial " + std::to_string(trial));
  }
  c.expect(applicable >= 5000, "too few applicable spectra: " + std::to_string(applicable));
}

void line_reduction_property(Checks& c) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    std::int64_t k = 4 + static_cast<std::int64_t>(rng() % 40);
    auto cfg = ValidatedConfiguration::check(oracles::random_spectrum(rng, 1, k));
    Rational kk(k), f0(cfg.f(0)), f1(cfg.f(1)), t2(cfg.t(2));
    auto general = general_chern_coefficients<Rational>(Rational(1), kk, f0, f1, t2);
    QuadraticInN c2{3 - 2 * kk + f1 - f0, 2 * (kk - f1 + f0), f1 - t2};
    QuadraticInN c1{-5 * kk + 9 + 3 * f1 - 4 * f0, 4 * (kk - f1 + f0), f1 - f0 + kk + t2};
    c.equal(QuadraticInN{general.c2[2], general.c2[1], general.c2[0]}, c2, "d=1 c2 at trial " + std::to_string(trial));
    c.equal(QuadraticInN{general.c1sq[2], general.c1sq[1], general.c1sq[0]}, c1,
            "d=1 c1^2 at trial " + std::to_string(trial));
  }
}

void gamma_closed_form_property(Checks& c) {
  std::mt19937_64 rng(10);
  int checked = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    std::int64_t k = 4 + static_cast<std::int64_t>(rng() % 40);
    auto cfg = ValidatedConfiguration::check(oracles::random_spectrum(rng, 1, k));
    if (cfg.t(k) != 0) continue;
    Rational kk(k), f0(cfg.f(0)), f1(cfg.f(1));
    Rational den = 3 - 2 * kk + f1 - f0;
    if (den <= 0) continue;
    ++checked;
    c.equal(characteristic_number(chern_pair(cfg)), Rational(5, 2) - (3 * f0 - f1 - 3) / (2 * den),
            "closed-form gamma at trial " + std::to_string(trial));
  }
  c.expect(checked >= 1000, "too few spectra with positive denominator");
}

void numeric_generators(Checks& c) {
  auto poly = builtin_family(BuiltinFamily::polyhedral);
  for (std::int64_t k = 3; k <= 12; ++k) {
    auto s = generate_regular_polygon_family(PolygonFamily::polyhedral, k, 64);
    c.expect(s.datum.spectrum == instantiate(poly, k).spectrum(), "polyhedral k=" + std::to_string(k));
  }
  auto bor = builtin_family(BuiltinFamily::boroczky);
  for (std::int64_t k = 6; k <= 16; k += 2) {
    auto s = generate_regular_polygon_family(PolygonFamily::boroczky, k, 64);
    c.expect(s.datum.spectrum == instantiate(bor, k).spectrum(), "Boroczky k=" + std::to_string(k));
  }
}

void sommese(Checks& c) {
  c.equal(characteristic_number(chern_pair(fixtures::dual_hesse())), Rational(8, 3), "dual Hesse gamma");
  c.equal(sommese_bounds(9).second, Rational(8, 3), "upper bound");
  for (std::int64_t k = 6; k <= 20; ++k) {
    auto cfg = spectrum_of(generate_generic(k, static_cast<std::uint64_t>(k)));
    Rational gamma = characteristic_number(chern_pair(cfg));
    Rational want(2 * (k - 3), k - 2);
    want.canonicalize();
    c.equal(gamma, want, "generic k=" + std::to_string(k));
    c.equal(sommese_bounds(k).first, want, "lower bound k=" + std::to_string(k));
  }
}

struct Criterion {
  std::string id;
  std::string title;
  int claims_criterion;
  std::function<void(Checks&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1", "Wiman linear Harbourne constant", 1, wiman},
      {"2", "T6 Chern pair, slope, ball quotient", 2, t6},
      {"3", "Klein Chern pair, slope, characteristic number", 3, klein},
      {"4", "Hirzebruch and Melchior verdicts", 4, line_inequalities},
      {"5", "family limits: Harbourne, k-slope, (k,n)-slope", 5, family_limits},
      {"6", "BMY gaps and absence of ball quotients", 6, ball_quotients},
      {"7", "dominant multiplicity profiles", 7, profiles},
      {"8", "curve configuration examples", 8, curve_examples},
      {"9a", "identity on 500 random arrangements", 0, identity_on_arrangements},
      {"9b", "gamma < 8/3 on 10^4 random curve spectra", 0, gamma_bound_property},
      {"9c", "d=1 reduction on 10^3 random spectra", 0, line_reduction_property},
      {"9d", "closed-form characteristic number", 0, gamma_closed_form_property},
      {"9e", "numeric polygon generators", 9, numeric_generators},
      {"10", "Sommese bounds attained", 10, sommese},
  };

  ReproductionReport report = run_reproduction(5);
  int failed = 0;
  for (const auto& crit : criteria) {
    Checks checks;
    try {
      crit.run(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    for (const auto& claim : report.claims) {
      if (claim.criterion == crit.claims_criterion && !claim.match)
        checks.expect(false, "claim " + claim.id + ": " + claim.computed);
    }
    bool ok = checks.failures().empty();
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << crit.id << "  " << crit.title << "\n";
    for (const auto& f : checks.failures()) std::cout << "       " << f << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
