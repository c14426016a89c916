#include "curvecfg/reproduce.hpp"

#include "curvecfg/families.hpp"
#include "curvecfg/fixtures.hpp"
#include "curvecfg/incidence.hpp"
#include "curvecfg/inequalities.hpp"
#include "curvecfg/kummer.hpp"
#include "curvecfg/polygon_families.hpp"

#include <functional>
#include <sstream>

namespace curvecfg {

namespace {

std::string quad(const QuadraticInN& q) {
  return "[" + to_string(q.a) + ", " + to_string(q.b) + ", " + to_string(q.c) + "]";
}

std::string roots(const std::vector<Integer>& rs) {
  std::string out = "[";
  for (std::size_t i = 0; i < rs.size(); ++i) out += (i ? ", " : "") + rs[i].get_str();
  return out + "]";
}

std::string verdict(const InequalityVerdict& v) {
  if (!v.holds) return "preconditions not met";
  return std::string(*v.holds ? "holds: " : "fails: ") + to_string(v.lhs) + " vs " + to_string(v.rhs);
}

class Recorder {
 public:
  void add(std::string id, int criterion, std::string source, std::string expected,
           const std::function<std::string()>& compute) {
    Claim c{std::move(id), criterion, std::move(source), std::move(expected), {}, false};
    try {
      c.computed = compute();
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    c.match = c.computed == c.expected;
    claims_.push_back(std::move(c));
  }
  std::vector<Claim> take() { return std::move(claims_); }

 private:
  std::vector<Claim> claims_;
};

const char* kBuiltinNames[] = {"boroczky", "s-elliptic", "polyhedral", "fermat"};

FamilySpectrum limit_family(const std::string& name) { return builtin_family(name, name == "s-elliptic" ? 3 : 0); }

}  // namespace

bool ReproductionReport::all_match() const {
  for (const auto& c : claims) {
    if (!c.match) return false;
  }
  return !claims.empty();
}

ReproductionReport run_reproduction(int digits) {
  Recorder rec;
  using namespace fixtures;

  rec.add("wiman-harbourne", 1, "Wiman arrangement, linear Harbourne constant", "-225/67",
          [] { return to_string(linear_harbourne(wiman())); });
  rec.add("wiman-harbourne-decimal", 1, "Wiman arrangement, linear Harbourne constant (decimal)", "-3.35821",
          [digits] { return to_decimal(linear_harbourne(wiman()), digits); });

  rec.add("t6-chern-c2", 2, "T6, c2 / n^3", "[2, -10, 15]", [] { return quad(chern_pair(t6()).c2); });
  rec.add("t6-chern-c1sq", 2, "T6, c1^2 / n^3", "[5, -20, 20]", [] { return quad(chern_pair(t6()).c1sq); });
  rec.add("t6-slope-n5", 2, "T6, Chern slope at n = 5", "3", [] { return to_string(slope_at(chern_pair(t6()), 5)); });
  rec.add("t6-ball-quotient", 2, "T6, ball-quotient orders (strong condition)", "[5]",
          [] { return roots(ball_quotient_candidates(chern_pair(t6()), GeneralTypeCondition::strong)); });

  rec.add("klein-chern-c1sq", 3, "Klein, c1^2 / n^18", "[212, -392, 140]", [] { return quad(chern_pair(klein()).c1sq); });
  rec.add("klein-chern-c2", 3, "Klein, c2 / n^18", "[80, -196, 168]", [] { return quad(chern_pair(klein()).c2); });
  rec.add("klein-slope-n4", 3, "Klein, Chern slope at n = 4", "491/166",
          [] { return to_string(slope_at(chern_pair(klein()), 4)); });
  rec.add("klein-slope-n4-decimal", 3, "Klein, Chern slope at n = 4 (decimal)", "2.95783",
          [digits] { return to_decimal(slope_at(chern_pair(klein()), 4), digits); });
  rec.add("klein-gamma", 3, "Klein, characteristic number", "53/20",
          [] { return to_string(characteristic_number(chern_pair(klein()))); });

  rec.add("t6-hirzebruch", 4, "T6, Hirzebruch inequality", "holds: 6 vs 6", [] { return verdict(hirzebruch_lines(t6())); });
  rec.add("klein-hirzebruch", 4, "Klein, Hirzebruch inequality", "holds: 21 vs 21",
          [] { return verdict(hirzebruch_lines(klein())); });
  rec.add("t6-melchior", 4, "T6, Melchior inequality", "holds: 3 vs 3", [] { return verdict(melchior(t6())); });
  rec.add("klein-melchior", 4, "Klein, Melchior inequality", "fails: 0 vs 24", [] { return verdict(melchior(klein())); });

  for (const char* name : kBuiltinNames) {
    std::string n(name);
    rec.add(n + "-harbourne-limit", 5, n + " family, asymptotic Harbourne constant", "-3",
            [n] { return to_string(asymptotic_harbourne(limit_family(n))); });
    rec.add(n + "-k-slope", 5, n + " family, k-Chern slope", "(5/2*n^2 - 4*n + 1)/(n^2 - 2*n + 3/2)",
            [n] { return k_chern_slope(limit_family(n)).str(); });
    rec.add(n + "-kn-slope", 5, n + " family, (k,n)-Chern slope", "5/2",
            [n] { return to_string(kn_chern_slope(limit_family(n))); });
  }

  rec.add("boroczky8-gap-n2", 6, "Böröczky k = 8, BMY gap at n = 2", "20", [] {
    return to_string(bmy_gap(chern_pair(instantiate(builtin_family(BuiltinFamily::boroczky), 8)))(2));
  });
  rec.add("polyhedral4-gap-n4", 6, "polyhedral k = 4, BMY gap at n = 4", "7", [] {
    return to_string(bmy_gap(chern_pair(instantiate(builtin_family(BuiltinFamily::polyhedral), 4)))(4));
  });
  rec.add("boroczky-never-ball-quotient", 6, "Böröczky even k in [8, 40], ball-quotient orders", "none", [] {
    auto fam = builtin_family(BuiltinFamily::boroczky);
    for (std::int64_t k = 8; k <= 40; k += 2) {
      auto r = ball_quotient_candidates(chern_pair(instantiate(fam, k)), GeneralTypeCondition::strong);
      if (!r.empty()) return "k=" + std::to_string(k) + ": " + roots(r);
    }
    return std::string("none");
  });
  rec.add("polyhedral-never-ball-quotient", 6, "polyhedral k in [4, 40], ball-quotient orders", "none", [] {
    auto fam = builtin_family(BuiltinFamily::polyhedral);
    for (std::int64_t k = 4; k <= 40; ++k) {
      auto r = ball_quotient_candidates(chern_pair(instantiate(fam, k)), GeneralTypeCondition::strong);
      if (!r.empty()) return "k=" + std::to_string(k) + ": " + roots(r);
    }
    return std::string("none");
  });

  rec.add("profile3-limits", 7, "dominant triple points, (Harbourne limit, (k,n)-slope)", "(-3, 5/2)", [] {
    auto fam = dominant_profile(3);
    return "(" + to_string(asymptotic_harbourne(fam)) + ", " + to_string(kn_chern_slope(fam)) + ")";
  });
  rec.add("profile4-limits", 7, "dominant quadruple points, (Harbourne limit, (k,n)-slope)", "(-4, 8/3)", [] {
    auto fam = dominant_profile(4);
    return "(" + to_string(asymptotic_harbourne(fam)) + ", " + to_string(kn_chern_slope(fam)) + ")";
  });
  rec.add("profile4-k-slope", 7, "dominant quadruple points, k-Chern slope", "(8/3*n^2 - 4*n + 1)/(n^2 - 2*n + 4/3)",
          [] { return k_chern_slope(dominant_profile(4)).str(); });
  rec.add("profile4-k-slope-n3", 7, "dominant quadruple points, k-Chern slope at n = 3", "3",
          [] { return to_string(k_chern_slope(dominant_profile(4))(3)); });

  rec.add("ap-gamma", 8, "AP conic configuration, characteristic number", "9/5",
          [] { return to_string(characteristic_number(chern_pair(ap_conics()))); });
  rec.add("hesse-conics-gamma", 8, "Hesse conic configuration, characteristic number", "13/6",
          [] { return to_string(characteristic_number(chern_pair(hesse_conics()))); });
  rec.add("general-dconfig-gamma", 8, "general d-configurations, closed-form characteristic number", "all match", [] {
    for (std::int64_t d = 2; d <= 4; ++d) {
      for (std::int64_t k = 4; k <= 10; ++k) {
        Rational gamma = characteristic_number(chern_pair(instantiate(generic_family(d), k)));
        Rational closed = make_rational(2 * (d * k - 3) * (d * k - 3), d * d * k * k + (d * d - 6 * d) * k + 6);
        if (gamma != closed) return "mismatch at d=" + std::to_string(d) + ", k=" + std::to_string(k);
      }
    }
    return std::string("all match");
  });
  rec.add("general-dconfig-limit", 8, "general d-configurations, characteristic number as k grows", "2, 2, 2", [] {
    std::string out;
    for (std::int64_t d = 2; d <= 4; ++d) out += (d > 2 ? ", " : "") + to_string(kn_chern_slope(generic_family(d)));
    return out;
  });

  rec.add("numeric-generators", 9, "interval-arithmetic polyhedral / Böröczky spectra vs closed forms", "all match", [] {
    for (std::int64_t k = 3; k <= 12; ++k) {
      auto numeric = generate_regular_polygon_family(PolygonFamily::polyhedral, k, 64);
      if (numeric.datum.spectrum != instantiate(builtin_family(BuiltinFamily::polyhedral), k).spectrum()) {
        return "polyhedral mismatch at k=" + std::to_string(k);
      }
    }
    for (std::int64_t k = 6; k <= 16; k += 2) {
      auto numeric = generate_regular_polygon_family(PolygonFamily::boroczky, k, 64);
      if (numeric.datum.spectrum != instantiate(builtin_family(BuiltinFamily::boroczky), k).spectrum()) {
        return "Böröczky mismatch at k=" + std::to_string(k);
      }
    }
    return std::string("all match");
  });

  rec.add("dual-hesse-gamma", 10, "dual Hesse, characteristic number (Sommese upper bound)", "8/3",
          [] { return to_string(characteristic_number(chern_pair(dual_hesse()))); });
  rec.add("generic-lines-gamma", 10, "generic lines k in [6, 20], characteristic number vs Sommese lower bound",
          "all equal", [] {
            for (std::int64_t k = 6; k <= 20; ++k) {
              auto cfg = spectrum_of(generate_generic(k, static_cast<std::uint64_t>(k)));
              if (characteristic_number(chern_pair(cfg)) != sommese_bounds(k).first) {
                return "mismatch at k=" + std::to_string(k);
              }
            }
            return std::string("all equal");
          });

  return ReproductionReport{rec.take()};
}

}  // namespace curvecfg
