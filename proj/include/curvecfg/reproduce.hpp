#pragma once

#include <string>
#include <vector>

namespace curvecfg {

struct Claim {
  std::string id;
  int criterion = 0;   ///< acceptance criterion this claim belongs to
  std::string source;  ///< what is being reproduced
  std::string expected;
  std::string computed;
  bool match = false;
};

struct ReproductionReport {
  std::vector<Claim> claims;
  bool all_match() const;
};

/// Recomputes every published value and worked example; `digits` controls
/// decimal renderings.
ReproductionReport run_reproduction(int digits = 5);

}  // namespace curvecfg
