#pragma once

#include "curvecfg/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvecfg {

enum class Relation {
  at_least,       ///< lhs >= rhs
  strictly_less,  ///< lhs < rhs
};

/// Exact outcome of one inequality on one datum. `slack` is the margin in
/// favour of the inequality (lhs - rhs for >=, rhs - lhs for <), so
/// holds == (slack >= 0) for `at_least` and holds == (slack > 0) for
/// `strictly_less`. When the hypotheses are not met, `holds` is empty.
struct InequalityVerdict {
  std::string name;
  Relation relation = Relation::at_least;
  Rational lhs;
  Rational rhs;
  Rational slack;
  std::optional<bool> holds;
  bool preconditions_met = true;
  std::vector<std::string> reasons;
  /// What a failing verdict means, e.g. which realizability it rules out.
  std::string interpretation;
};

/// t2 + 3/4 t3 >= k + sum_{r>=5} (r-4) t_r, for k >= 4 lines with t_k = t_{k-1} = 0.
InequalityVerdict hirzebruch_lines(const ValidatedConfiguration& cfg);

/// t2 >= 3 + sum_{r>=4} (r-3) t_r, for k >= 3 real lines with t_k = 0.
InequalityVerdict melchior(const ValidatedConfiguration& cfg);

/// (7/2 d^2 - 9/2 d) k + t2 + t3 >= sum_{r>=4} (r-4) t_r for d >= 3.
/// Throws wrong_checker when d < 3.
InequalityVerdict hirzebruch_dconfig(const ValidatedConfiguration& cfg);

/// 5k + t2 + t3 >= sum_{r>=4} (r-4) t_r for conics. Throws wrong_checker when d != 2.
InequalityVerdict tang_conics(const ValidatedConfiguration& cfg);

/// gamma < 8/3 for d-configurations (d >= 2) satisfying the applicable
/// inequality above and with positive leading c2 coefficient.
InequalityVerdict gamma_bound(const ValidatedConfiguration& cfg);

/// Every checker whose degree matches the datum; with `all`, also the
/// degree-mismatched ones, reported with preconditions_met = false.
std::vector<InequalityVerdict> verify_all(const ValidatedConfiguration& cfg, bool all = false);

}  // namespace curvecfg
