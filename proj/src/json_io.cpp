#include "curvecfg/json_io.hpp"

namespace curvecfg {

namespace {

std::int64_t require_int(const Json& j, const char* key) {
  if (!j.contains(key)) throw CurveError(Errc::parse, std::string("missing key '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw CurveError(Errc::parse, std::string("'") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

Json coeff_list(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

}  // namespace

Json to_json(const CurveConfigurationDatum& cfg) {
  Json j = Json::object();
  if (cfg.label) j["label"] = *cfg.label;
  j["degree"] = cfg.degree;
  j["count"] = cfg.count;
  Json spectrum = Json::object();
  for (const auto& [r, t] : cfg.spectrum.entries()) spectrum[std::to_string(r)] = t;
  j["spectrum"] = spectrum;
  return j;
}

CurveConfigurationDatum datum_from_json(const Json& j) {
  if (!j.is_object()) throw CurveError(Errc::parse, "configuration must be a JSON object");
  CurveConfigurationDatum cfg;
  if (j.contains("label") && !j.at("label").is_null()) {
    if (!j.at("label").is_string()) throw CurveError(Errc::parse, "'label' must be a string");
    cfg.label = j.at("label").get<std::string>();
  }
  cfg.degree = require_int(j, "degree");
  cfg.count = require_int(j, "count");
  if (!j.contains("spectrum") || !j.at("spectrum").is_object()) {
    throw CurveError(Errc::parse, "'spectrum' must be an object of multiplicity -> count");
  }
  for (const auto& [key, value] : j.at("spectrum").items()) {
    std::size_t used = 0;
    long long r = 0;
    try {
      r = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw CurveError(Errc::parse, "spectrum key '" + key + "' is not a decimal integer");
    if (!value.is_number_integer()) throw CurveError(Errc::parse, "spectrum count for '" + key + "' must be an integer");
    try {
      cfg.spectrum.add(r, value.get<std::int64_t>());
    } catch (const CurveError& e) {
      throw CurveError(Errc::parse, std::string("spectrum entry '") + key + "': " + e.what());
    }
  }
  return cfg;
}

CurveConfigurationDatum datum_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CurveError(Errc::parse, std::string("malformed JSON: ") + e.what());
  }
  return datum_from_json(j);
}

Json to_json(const ValidationReport& report) {
  Json j = Json::object();
  j["lhs"] = to_string(report.lhs);
  j["rhs"] = to_string(report.rhs);
  j["identity_holds"] = report.identity_holds;
  if (report.line_form) {
    j["line_form"] = {{"k2_minus_k", to_string(report.line_form->first)},
                      {"f2_minus_f1", to_string(report.line_form->second)}};
  }
  j["problems"] = report.problems;
  j["passed"] = report.passed();
  return j;
}

Json to_json(const InequalityVerdict& v) {
  Json j = Json::object();
  j["name"] = v.name;
  j["relation"] = v.relation == Relation::at_least ? ">=" : "<";
  j["lhs"] = to_string(v.lhs);
  j["rhs"] = to_string(v.rhs);
  j["slack"] = to_string(v.slack);
  j["holds"] = v.holds ? Json(*v.holds) : Json(nullptr);
  j["preconditions"] = {{"met", v.preconditions_met}, {"reasons", v.reasons}};
  j["interpretation"] = v.interpretation;
  return j;
}

Json to_json(const QuadraticInN& q) { return Json::array({to_string(q.a), to_string(q.b), to_string(q.c)}); }

Json to_json(const RationalFunctionInN& f) {
  return {{"numerator", coeff_list(f.numerator())},
          {"denominator", coeff_list(f.denominator())},
          {"text", f.str()}};
}

Json rational_json(const Rational& q, int digits) {
  return {{"exact", to_string(q)}, {"decimal", to_decimal(q, digits)}};
}

}  // namespace curvecfg
