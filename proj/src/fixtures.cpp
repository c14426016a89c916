#include "curvecfg/fixtures.hpp"

namespace curvecfg::fixtures {

namespace {

ValidatedConfiguration make(const char* label, std::int64_t d, std::int64_t k, MultiplicitySpectrum s) {
  return ValidatedConfiguration::check({d, k, std::move(s), std::string(label)});
}

}  // namespace

ValidatedConfiguration t6() { return make("T6", 1, 6, {{2, 3}, {3, 4}}); }
ValidatedConfiguration klein() { return make("Klein", 1, 21, {{3, 28}, {4, 21}}); }
ValidatedConfiguration wiman() { return make("Wiman", 1, 45, {{3, 120}, {4, 45}, {5, 36}}); }
ValidatedConfiguration dual_hesse() { return make("dual Hesse", 1, 9, {{3, 12}}); }
ValidatedConfiguration ap_conics() { return make("AP conics", 2, 6, {{5, 6}}); }
ValidatedConfiguration hesse_conics() { return make("Hesse conics", 2, 12, {{2, 12}, {8, 9}}); }

}  // namespace curvecfg::fixtures
