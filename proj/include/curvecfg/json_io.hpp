#pragma once

#include "curvecfg/config.hpp"
#include "curvecfg/inequalities.hpp"
#include "curvecfg/kummer.hpp"
#include "curvecfg/polynomial.hpp"

#include <json.hpp>

#include <string>

namespace curvecfg {

using Json = nlohmann::ordered_json;

/// {"label"?, "degree", "count", "spectrum": {"r": t_r, ...}}
Json to_json(const CurveConfigurationDatum& cfg);
/// Throws CurveError(parse) on schema violations.
CurveConfigurationDatum datum_from_json(const Json& j);
CurveConfigurationDatum datum_from_text(const std::string& text);

Json to_json(const ValidationReport& report);
Json to_json(const InequalityVerdict& v);
/// ["a", "b", "c"] as exact strings, n^2 coefficient first.
Json to_json(const QuadraticInN& q);
/// Coefficient lists in ascending powers of n.
Json to_json(const RationalFunctionInN& f);

/// {"exact": "p/q", "decimal": "..."}
Json rational_json(const Rational& q, int digits);

}  // namespace curvecfg
