#include "curvecfg/incidence.hpp"

#include <istream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace curvecfg {

namespace {

std::array<Integer, 3> cross(const std::array<Integer, 3>& u, const std::array<Integer, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

}  // namespace

bool incident(const ProjPoint& p, const ProjLine& l) {
  return p[0] * l[0] + p[1] * l[1] + p[2] * l[2] == 0;
}

ProjPoint intersect(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw CurveError(Errc::degenerate_intersection, "identical lines " + l1.str());
  auto c = cross(l1.coords(), l2.coords());
  return ProjPoint(c[0], c[1], c[2]);
}

ProjLine join(const ProjPoint& p1, const ProjPoint& p2) {
  if (p1 == p2) throw CurveError(Errc::degenerate_intersection, "identical points " + p1.str());
  auto c = cross(p1.coords(), p2.coords());
  return ProjLine(c[0], c[1], c[2]);
}

LineArrangement::LineArrangement(std::vector<ProjLine> lines, std::string label)
    : lines_(std::move(lines)), label_(std::move(label)) {
  std::map<ProjLine, std::size_t> seen;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    auto [it, inserted] = seen.emplace(lines_[i], i);
    if (!inserted) {
      throw CurveError(Errc::duplicate_line, "lines " + std::to_string(it->second) + " and " +
                                                 std::to_string(i) + " coincide: " + lines_[i].str());
    }
  }
}

ValidatedConfiguration spectrum_of(const LineArrangement& arr) {
  if (arr.size() < 2) throw CurveError(Errc::invalid_argument, "need at least two lines");
  const auto& lines = arr.lines();
  std::map<ProjPoint, std::set<std::size_t>> incidences;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto& on = incidences[intersect(lines[i], lines[j])];
      on.insert(i);
      on.insert(j);
    }
  }
  CurveConfigurationDatum cfg;
  cfg.degree = 1;
  cfg.count = static_cast<std::int64_t>(lines.size());
  if (!arr.label().empty()) cfg.label = arr.label();
  for (const auto& [point, on] : incidences) cfg.spectrum.add(static_cast<std::int64_t>(on.size()), 1);
  return ValidatedConfiguration::check(std::move(cfg));
}

LineArrangement generate_generic(std::int64_t k, std::uint64_t seed) {
  if (k < 2) throw CurveError(Errc::invalid_argument, "generic arrangement needs k >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-10 * k, 10 * k);
  std::vector<ProjLine> lines;
  std::vector<ProjPoint> points;
  const std::int64_t budget = 100 * k;
  for (std::int64_t attempt = 0; attempt < budget && static_cast<std::int64_t>(lines.size()) < k; ++attempt) {
    long a = coef(rng), b = coef(rng), c = coef(rng);
    if (a == 0 && b == 0 && c == 0) continue;
    ProjLine candidate(a, b, c);
    bool ok = true;
    for (const auto& l : lines) ok = ok && !(l == candidate);
    for (const auto& p : points) ok = ok && !incident(p, candidate);
    if (!ok) continue;
    for (const auto& l : lines) points.push_back(intersect(l, candidate));
    lines.push_back(candidate);
  }
  if (static_cast<std::int64_t>(lines.size()) < k) {
    throw CurveError(Errc::generation_failure,
                     "rejection budget of " + std::to_string(budget) + " attempts exceeded");
  }
  LineArrangement arr(std::move(lines), "generic-" + std::to_string(k));
  auto cfg = spectrum_of(arr);
  if (cfg.spectrum().count(2) != k * (k - 1) / 2) {
    throw std::logic_error("generic generator produced a non-generic arrangement");
  }
  return arr;
}

LineArrangement parse_arrangement(std::istream& in, std::string label) {
  std::vector<ProjLine> lines;
  std::string row;
  int lineno = 0;
  while (std::getline(in, row)) {
    ++lineno;
    if (auto hash = row.find('#'); hash != std::string::npos) row.erase(hash);
    std::istringstream fields(row);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw CurveError(Errc::parse, "line " + std::to_string(lineno) + ": expected three integers");
    }
    std::array<Integer, 3> c;
    for (std::size_t i = 0; i < 3; ++i) {
      if (c[i].set_str(tokens[i], 10) != 0) {
        throw CurveError(Errc::parse, "line " + std::to_string(lineno) + ": bad integer '" + tokens[i] + "'");
      }
    }
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
      throw CurveError(Errc::parse, "line " + std::to_string(lineno) + ": all coefficients zero");
    }
    lines.emplace_back(c[0], c[1], c[2]);
  }
  return LineArrangement(std::move(lines), std::move(label));
}

}  // namespace curvecfg
