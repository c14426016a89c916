#pragma once

#include "curvecfg/config.hpp"

#include <cstdint>

namespace curvecfg {

enum class PolygonFamily { polyhedral, boroczky };

/// Spectrum obtained from interval-arithmetic geometry. Intervals certify
/// that two points differ but never that they coincide, so the spectrum is
/// only presumed and must be reconciled with the closed-form family data.
struct PresumedSpectrum {
  CurveConfigurationDatum datum;
  bool presumed = true;
  long precision_bits = 0;  ///< precision at which clustering was consistent
};

/// Builds the regular-polygon arrangement (polyhedral: 2k lines from a
/// k-gon, k >= 3; Böröczky: k lines, k even and >= 6) at `precision_bits`,
/// doubling the precision up to `max_refinements` times until the clusters
/// of unseparated intersection points are consistent.
PresumedSpectrum generate_regular_polygon_family(PolygonFamily kind, std::int64_t k, long precision_bits,
                                                 int max_refinements = 4);

}  // namespace curvecfg
