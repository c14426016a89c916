// curvecfg: invariants of curve configurations from the command line.
//
//   curvecfg family --name boroczky --k 8
//   curvecfg chern --config t6.json --n 5
//   curvecfg chern --config t6.json --sweep 2:10
//   curvecfg verify --config klein.json --all
//   curvecfg arrangement lines.txt
//   curvecfg ball-quotient --config t6.json
//   curvecfg limits --name fermat
//   curvecfg reproduce
//
// Exit codes: 0 success, 1 reproduction mismatch (or failed inequality with
// --strict), 2 usage or input error.

#include "curvecfg/families.hpp"
#include "curvecfg/incidence.hpp"
#include "curvecfg/inequalities.hpp"
#include "curvecfg/json_io.hpp"
#include "curvecfg/kummer.hpp"
#include "curvecfg/polygon_families.hpp"
#include "curvecfg/reproduce.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace curvecfg;

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct GlobalOptions {
  bool json = false;
  bool csv = false;
  int digits = 5;
  std::uint64_t seed = 1;
  bool strict = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CurveError(Errc::parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ValidatedConfiguration load_config(const std::string& path) {
  return ValidatedConfiguration::check(datum_from_text(read_file(path)));
}

std::optional<GeneralTypeCondition> strongest_condition(const ChernPair& pair) {
  if (pair.degree != 1) return std::nullopt;
  if (satisfies(pair.spectrum, pair.count, GeneralTypeCondition::strong)) return GeneralTypeCondition::strong;
  if (satisfies(pair.spectrum, pair.count, GeneralTypeCondition::weak)) return GeneralTypeCondition::weak;
  return std::nullopt;
}

const char* condition_name(GeneralTypeCondition c) {
  return c == GeneralTypeCondition::strong ? "strong" : "weak";
}

Json roots_json(const std::vector<Integer>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(r.get_si());
  return out;
}

Json limits_json(const FamilySpectrum& fam, int digits) {
  Json j = Json::object();
  j["family"] = fam.name;
  j["harbourne_limit"] = rational_json(asymptotic_harbourne(fam), digits);
  j["k_chern_slope"] = to_json(k_chern_slope(fam));
  j["kn_chern_slope"] = rational_json(kn_chern_slope(fam), digits);
  return j;
}

struct FamilyArgs {
  std::string name;
  std::int64_t w = 0;
  std::optional<std::int64_t> k;
  bool limits = false;
};

int cmd_family(const FamilyArgs& a, const GlobalOptions& g) {
  FamilySpectrum fam = builtin_family(a.name, a.w);
  if (a.limits) {
    std::cout << limits_json(fam, g.digits).dump(2) << "\n";
    return 0;
  }
  if (!a.k) throw CLI::ValidationError("--k", "required unless --limits is given");
  std::cout << to_json(instantiate(fam, *a.k).datum()).dump(2) << "\n";
  return 0;
}

struct LimitsArgs {
  std::string name;
  std::int64_t w = 0;
  std::optional<std::int64_t> profile;
  std::string c = "1";
  std::optional<std::int64_t> generic;
};

int cmd_limits(const LimitsArgs& a, const GlobalOptions& g) {
  int chosen = !a.name.empty() + a.profile.has_value() + a.generic.has_value();
  if (chosen != 1) throw CLI::ValidationError("limits", "give exactly one of --name, --profile, --generic");
  FamilySpectrum fam = a.profile   ? dominant_profile(*a.profile, parse_rational(a.c))
                       : a.generic ? generic_family(*a.generic)
                                   : builtin_family(a.name, a.w);
  std::cout << limits_json(fam, g.digits).dump(2) << "\n";
  return 0;
}

struct ChernArgs {
  std::string config;
  std::optional<std::int64_t> n;
  std::string sweep;
};

std::pair<std::int64_t, std::int64_t> parse_sweep(const std::string& s) {
  auto colon = s.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(s);
    std::int64_t lo = std::stoll(s.substr(0, colon));
    std::int64_t hi = std::stoll(s.substr(colon + 1));
    if (lo < 2 || hi < lo) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--sweep", "expected n0:n1 with 2 <= n0 <= n1, got '" + s + "'");
  }
}

int cmd_chern(const ChernArgs& a, const GlobalOptions& g) {
  auto cfg = load_config(a.config);
  ChernPair pair = chern_pair(cfg);
  std::optional<QuadraticInN> gap;
  if (pair.degree == 1) gap = bmy_gap(pair);

  if (!a.sweep.empty()) {
    auto [lo, hi] = parse_sweep(a.sweep);
    if (g.json) {
      Json rows = Json::array();
      for (std::int64_t n = lo; n <= hi; ++n) {
        Rational c2 = pair.c2(n);
        rows.push_back({{"n", n},
                        {"c1sq", to_string(pair.c1sq(n))},
                        {"c2", to_string(c2)},
                        {"slope", c2 > 0 ? Json(to_string(slope_at(pair, n))) : Json(nullptr)},
                        {"gap", gap ? Json(to_string((*gap)(n))) : Json(nullptr)}});
      }
      std::cout << rows.dump(2) << "\n";
      return 0;
    }
    std::cout << "n,c1sq,c2,slope,gap\n";
    for (std::int64_t n = lo; n <= hi; ++n) {
      Rational c2 = pair.c2(n);
      std::cout << n << ',' << to_string(pair.c1sq(n)) << ',' << to_string(c2) << ','
                << (c2 > 0 ? to_string(slope_at(pair, n)) : "") << ',' << (gap ? to_string((*gap)(n)) : "") << "\n";
    }
    return 0;
  }

  Json j = Json::object();
  j["source"] = pair.source_digest();
  j["c1sq"] = to_json(pair.c1sq);
  j["c2"] = to_json(pair.c2);
  if (a.n) {
    j["n"] = *a.n;
    j["slope"] = rational_json(slope_at(pair, *a.n), g.digits);
  }
  try {
    j["gamma"] = rational_json(characteristic_number(pair), g.digits);
  } catch (const CurveError& e) {
    if (e.code() != Errc::undefined_gamma) throw;
    j["gamma"] = nullptr;
  }
  j["bmy_gap"] = gap ? to_json(*gap) : Json(nullptr);
  auto cond = strongest_condition(pair);
  j["general_type_condition"] = cond ? Json(condition_name(*cond)) : Json(nullptr);
  j["ball_quotient_n"] = cond ? roots_json(ball_quotient_candidates(pair, *cond)) : Json::array();
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string config;
  bool all = false;
};

int cmd_verify(const VerifyArgs& a, const GlobalOptions& g) {
  auto cfg = load_config(a.config);
  Json out = Json::array();
  bool failed = false;
  for (const auto& v : verify_all(cfg, a.all)) {
    out.push_back(to_json(v));
    failed = failed || (v.holds && !*v.holds);
  }
  std::cout << out.dump(2) << "\n";
  return g.strict && failed ? kExitMismatch : 0;
}

struct ArrangementArgs {
  std::string file;
  std::optional<std::int64_t> generic;
  std::string polygon;
  std::int64_t k = 0;
  long precision = 64;
};

int cmd_arrangement(const ArrangementArgs& a, const GlobalOptions& g) {
  Json j = Json::object();
  if (!a.polygon.empty()) {
    PolygonFamily kind = a.polygon == "polyhedral" ? PolygonFamily::polyhedral
                         : a.polygon == "boroczky" ? PolygonFamily::boroczky
                                                   : throw CLI::ValidationError("--polygon", "polyhedral or boroczky");
    auto presumed = generate_regular_polygon_family(kind, a.k, a.precision);
    auto formula = instantiate(builtin_family(a.polygon), a.k);
    j["configuration"] = to_json(presumed.datum);
    j["presumed"] = true;
    j["precision_bits"] = presumed.precision_bits;
    j["matches_closed_form"] = presumed.datum.spectrum == formula.spectrum();
    j["validation"] = to_json(validate(presumed.datum));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::optional<LineArrangement> arr;
  if (a.generic) {
    arr = generate_generic(*a.generic, g.seed);
    Json lines = Json::array();
    for (const auto& l : arr->lines()) lines.push_back({l[0].get_str(), l[1].get_str(), l[2].get_str()});
    j["lines"] = lines;
  } else {
    if (a.file.empty()) throw CLI::ValidationError("arrangement", "give a file, --generic K or --polygon NAME");
    std::ifstream in(a.file);
    if (!in) throw CurveError(Errc::parse, "cannot open '" + a.file + "'");
    arr = parse_arrangement(in, std::filesystem::path(a.file).filename().string());
  }
  auto cfg = spectrum_of(*arr);
  j["configuration"] = to_json(cfg.datum());
  j["validation"] = to_json(validate(cfg.datum()));
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct BallQuotientArgs {
  std::string config;
  std::string condition;
};

int cmd_ball_quotient(const BallQuotientArgs& a, const GlobalOptions&) {
  auto pair = chern_pair(load_config(a.config));
  std::optional<GeneralTypeCondition> cond;
  if (a.condition.empty()) {
    cond = strongest_condition(pair);
    if (!cond) throw CurveError(Errc::invalid_argument, "spectrum satisfies neither general-type condition");
  } else {
    cond = a.condition == "strong" ? GeneralTypeCondition::strong : GeneralTypeCondition::weak;
  }
  Json j = Json::object();
  j["source"] = pair.source_digest();
  j["condition"] = condition_name(*cond);
  j["bmy_gap"] = to_json(bmy_gap(pair));
  j["bmy_gap_shifted"] = to_json(bmy_gap_shifted(pair));
  j["ball_quotient_n"] = roots_json(ball_quotient_candidates(pair, *cond));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_reproduce(const GlobalOptions& g) {
  ReproductionReport report = run_reproduction(g.digits);
  if (g.json) {
    Json out = Json::array();
    for (const auto& c : report.claims) {
      out.push_back({{"id", c.id},
                     {"criterion", c.criterion},
                     {"source", c.source},
                     {"expected", c.expected},
                     {"computed", c.computed},
                     {"match", c.match}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : report.claims) {
      std::cout << (c.match ? "[ok]   " : "[FAIL] ") << std::left << std::setw(34) << c.id << " " << c.computed;
      if (!c.match) std::cout << "  (expected " << c.expected << ")";
      std::cout << "\n";
    }
    std::cout << (report.all_match() ? "all claims reproduced\n" : "reproduction mismatch\n");
  }
  return report.all_match() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial and asymptotic invariants of plane curve configurations"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json, "JSON output where a command also has a text/CSV form");
  app.add_flag("--csv", g.csv, "CSV output (default for chern --sweep)");
  app.add_option("--digits", g.digits, "fractional digits of decimal renderings")->check(CLI::Range(0, 100));
  app.add_option("--seed", g.seed, "seed for randomized generators");
  app.add_flag("--strict", g.strict, "exit 1 when an applicable inequality fails");

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "instantiate a built-in family or print its limits");
  family->add_option("--name", fa.name, "boroczky | s-elliptic | polyhedral | fermat")->required();
  family->add_option("--w", fa.w, "flex count for s-elliptic");
  family->add_option("--k", fa.k, "family parameter (Fermat: m, lines = 3m)");
  family->add_flag("--limits", fa.limits, "emit asymptotic invariants instead of an instance");

  LimitsArgs la;
  auto* limits = app.add_subcommand("limits", "asymptotic Harbourne constant and Chern slopes of a family");
  limits->add_option("--name", la.name, "built-in family name");
  limits->add_option("--w", la.w, "flex count for s-elliptic");
  limits->add_option("--profile", la.profile, "dominant multiplicity r0 (t_r0 = c k^2)");
  limits->add_option("--c", la.c, "dominant coefficient c, e.g. 1/6");
  limits->add_option("--generic", la.generic, "general configuration of degree-d curves");

  ChernArgs ca;
  auto* chern = app.add_subcommand("chern", "Chern numbers of the Kummer covers of a configuration");
  chern->add_option("--config", ca.config, "configuration JSON")->required();
  auto* n_opt = chern->add_option("--n", ca.n, "cover order n");
  chern->add_option("--sweep", ca.sweep, "n0:n1 range, CSV output")->excludes(n_opt);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check the inequalities on a configuration");
  verify->add_option("--config", va.config, "configuration JSON")->required();
  verify->add_flag("--all", va.all, "also report checkers whose degree does not match");

  ArrangementArgs aa;
  auto* arrangement = app.add_subcommand("arrangement", "exact spectrum of explicit lines");
  arrangement->add_option("file", aa.file, "text file, one 'a b c' line per row");
  arrangement->add_option("--generic", aa.generic, "generate K lines in general position (uses --seed)");
  arrangement->add_option("--polygon", aa.polygon, "polyhedral | boroczky (interval arithmetic)");
  arrangement->add_option("--k", aa.k, "polygon family parameter");
  arrangement->add_option("--precision", aa.precision, "initial interval precision in bits");

  BallQuotientArgs ba;
  auto* ball = app.add_subcommand("ball-quotient", "orders n at which the Kummer cover is a ball quotient");
  ball->add_option("--config", ba.config, "configuration JSON")->required();
  ball->add_option("--condition", ba.condition, "strong | weak")->check(CLI::IsMember({"strong", "weak"}));

  auto* reproduce = app.add_subcommand("reproduce", "recompute every published value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (family->parsed()) return cmd_family(fa, g);
    if (limits->parsed()) return cmd_limits(la, g);
    if (chern->parsed()) return cmd_chern(ca, g);
    if (verify->parsed()) return cmd_verify(va, g);
    if (arrangement->parsed()) return cmd_arrangement(aa, g);
    if (ball->parsed()) return cmd_ball_quotient(ba, g);
    if (reproduce->parsed()) return cmd_reproduce(g);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CurveError& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
