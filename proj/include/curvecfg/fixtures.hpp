#pragma once

#include "curvecfg/config.hpp"

namespace curvecfg::fixtures {

/// 6 lines, t2 = 3, t3 = 4 (the smallest polyhedral / Böröczky arrangement).
ValidatedConfiguration t6();
/// Klein: 21 lines, t3 = 28, t4 = 21.
ValidatedConfiguration klein();
/// Wiman: 45 lines, t3 = 120, t4 = 45, t5 = 36.
ValidatedConfiguration wiman();
/// Dual Hesse: 9 lines, t3 = 12.
ValidatedConfiguration dual_hesse();
/// 6 conics with six 5-fold points.
ValidatedConfiguration ap_conics();
/// Hesse pencil conics: 12 conics, t2 = 12, t8 = 9.
ValidatedConfiguration hesse_conics();

}  // namespace curvecfg::fixtures
