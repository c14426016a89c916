#pragma once

#include "curvecfg/errors.hpp"
#include "curvecfg/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curvecfg {

/// Sparse map r -> t_r of points where exactly r curves meet. Only r >= 2 and
/// t_r >= 1 are stored; an absent r means t_r = 0.
class MultiplicitySpectrum {
 public:
  using Map = std::map<std::int64_t, std::int64_t>;

  MultiplicitySpectrum() = default;
  MultiplicitySpectrum(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init);

  /// Adds `t` points of multiplicity `r` (merging with existing entries).
  /// t == 0 is a no-op; r < 2 or t < 0 throws invalid_argument.
  void add(std::int64_t r, std::int64_t t);

  std::int64_t count(std::int64_t r) const;
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::int64_t max_multiplicity() const;

  /// "2:3,3:4" style digest, ascending r.
  std::string digest() const;

  friend bool operator==(const MultiplicitySpectrum&, const MultiplicitySpectrum&) = default;

 private:
  Map entries_;
};

struct CurveConfigurationDatum {
  std::int64_t degree = 1;
  std::int64_t count = 0;
  MultiplicitySpectrum spectrum;
  std::optional<std::string> label;

  friend bool operator==(const CurveConfigurationDatum&, const CurveConfigurationDatum&) = default;
};

/// f_i = sum_r r^i t_r for i in {0, 1, 2}.
Integer f_moment(const CurveConfigurationDatum& cfg, int i);

struct ValidationReport {
  /// d^2 (k^2 - k)
  Integer lhs;
  /// sum_r (r^2 - r) t_r
  Integer rhs;
  bool identity_holds = false;
  /// Line form k^2 - k = f_2 - f_1, present for d = 1.
  std::optional<std::pair<Integer, Integer>> line_form;
  /// Type-invariant violations (degree, count, multiplicity bound).
  std::vector<std::string> problems;

  bool passed() const { return identity_holds && problems.empty(); }
};

ValidationReport validate(const CurveConfigurationDatum& cfg);

/// A datum known to satisfy its type invariants and the combinatorial
/// identity. Downstream operations only accept this form.
class ValidatedConfiguration {
 public:
  /// Throws CurveError(not_validated) with the report's diagnostics on failure.
  static ValidatedConfiguration check(CurveConfigurationDatum cfg);

  const CurveConfigurationDatum& datum() const { return datum_; }
  std::int64_t degree() const { return datum_.degree; }
  std::int64_t count() const { return datum_.count; }
  const MultiplicitySpectrum& spectrum() const { return datum_.spectrum; }
  std::int64_t t(std::int64_t r) const { return datum_.spectrum.count(r); }
  Integer f(int i) const { return f_moment(datum_, i); }

 private:
  explicit ValidatedConfiguration(CurveConfigurationDatum cfg) : datum_(std::move(cfg)) {}
  CurveConfigurationDatum datum_;
};

/// (k^2 - f_2) / f_0 for a line configuration, cross-checked against
/// (k - f_1) / f_0.
Rational linear_harbourne(const ValidatedConfiguration& cfg);

}  // namespace curvecfg
