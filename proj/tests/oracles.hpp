#pragma once

// Test-only generators and brute-force checks. Nothing here calls the code
// paths it is used to check.

#include "curvecfg/config.hpp"
#include "curvecfg/incidence.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

using curvecfg::CurveConfigurationDatum;
using curvecfg::Integer;

/// Random spectrum satisfying d^2(k^2 - k) = sum (r^2 - r) t_r with every
/// multiplicity in [2, k-1]: high multiplicities are drawn first and the
/// remainder is filled with double points.
inline CurveConfigurationDatum random_spectrum(std::mt19937_64& rng, std::int64_t d, std::int64_t k) {
  CurveConfigurationDatum cfg;
  cfg.degree = d;
  cfg.count = k;
  std::int64_t budget = d * d * (k * k - k);  // always even
  std::uniform_int_distribution<std::int64_t> pick_r(3, std::max<std::int64_t>(3, k - 1));
  std::uniform_int_distribution<int> rounds(0, 6);
  for (int i = rounds(rng); i > 0 && k > 3; --i) {
    std::int64_t r = pick_r(rng);
    std::int64_t weight = r * r - r;
    if (weight > budget) continue;
    std::uniform_int_distribution<std::int64_t> pick_t(1, std::max<std::int64_t>(1, budget / weight / 2 + 1));
    std::int64_t t = std::min(pick_t(rng), budget / weight);
    cfg.spectrum.add(r, t);
    budget -= t * weight;
  }
  cfg.spectrum.add(2, budget / 2);
  return cfg;
}

/// floor(p(k) / q) with plain integer arithmetic.
inline Integer brute_floor(const std::vector<Integer>& p, const Integer& k, const Integer& q) {
  Integer value = 0, power = 1;
  for (const auto& c : p) {
    value += c * power;
    power *= k;
  }
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_mpz_t(), q.get_mpz_t());
  return out;
}

inline Integer det3(const curvecfg::ProjLine& a, const curvecfg::ProjLine& b, const curvecfg::ProjLine& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

/// Number of concurrent triples of lines, by determinants.
inline std::int64_t concurrent_triples(const std::vector<curvecfg::ProjLine>& lines) {
  std::int64_t n = 0;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      for (std::size_t l = j + 1; l < lines.size(); ++l)
        if (det3(lines[i], lines[j], lines[l]) == 0) ++n;
  return n;
}

/// Distinct random lines with small coefficients (so concurrences happen).
inline std::vector<curvecfg::ProjLine> random_lines(std::mt19937_64& rng, std::size_t count, long range) {
  std::uniform_int_distribution<long> coef(-range, range);
  std::vector<curvecfg::ProjLine> lines;
  while (lines.size() < count) {
    long a = coef(rng), b = coef(rng), c = coef(rng);
    if (a == 0 && b == 0 && c == 0) continue;
    curvecfg::ProjLine l(a, b, c);
    bool dup = false;
    for (const auto& m : lines) dup = dup || m == l;
    if (!dup) lines.push_back(l);
  }
  return lines;
}

}  // namespace oracles
