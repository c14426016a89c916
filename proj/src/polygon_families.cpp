#include "curvecfg/polygon_families.hpp"

#include "curvecfg/interval.hpp"

#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace curvecfg {

namespace {

using Vec3 = std::array<Interval, 3>;

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool certainly_nonzero(const Vec3& v) {
  return !v[0].contains_zero() || !v[1].contains_zero() || !v[2].contains_zero();
}

// Two projective points are certainly distinct iff some component of their
// cross product excludes zero.
bool certainly_distinct(const Vec3& p, const Vec3& q) { return certainly_nonzero(cross(p, q)); }

Vec3 circle_point(mpfr_prec_t prec, std::int64_t j, std::int64_t k) {
  Interval angle = Interval::pi_fraction(prec, 2 * j, k);
  return {cos(angle), sin(angle), Interval(prec, 1)};
}

std::vector<Vec3> polyhedral_lines(mpfr_prec_t prec, std::int64_t k) {
  std::vector<Vec3> lines;
  for (std::int64_t j = 0; j < k; ++j) {
    lines.push_back(cross(circle_point(prec, j, k), circle_point(prec, (j + 1) % k, k)));
  }
  // axes of symmetry: lines through the centre at angles pi*j/k
  for (std::int64_t j = 0; j < k; ++j) {
    Interval angle = Interval::pi_fraction(prec, j, k);
    lines.push_back({sin(angle), -cos(angle), Interval(prec, 0)});
  }
  return lines;
}

std::vector<Vec3> boroczky_lines(mpfr_prec_t prec, std::int64_t k) {
  std::vector<Vec3> lines;
  for (std::int64_t i = 0; i < k; ++i) {
    std::int64_t partner = ((k / 2 - 2 * i) % k + k) % k;
    if (partner == i) {
      Vec3 p = circle_point(prec, i, k);
      lines.push_back({p[0], p[1], Interval(prec, -1)});  // tangent x cos a + y sin a = 1
    } else {
      lines.push_back(cross(circle_point(prec, i, k), circle_point(prec, partner, k)));
    }
  }
  return lines;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Returns nullopt when the precision cannot produce a consistent clustering.
std::optional<MultiplicitySpectrum> cluster_spectrum(const std::vector<Vec3>& lines) {
  struct Meet {
    std::size_t i, j;
    Vec3 point;
  };
  std::vector<Meet> meets;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Vec3 p = cross(lines[i], lines[j]);
      if (!certainly_nonzero(p)) return std::nullopt;  // lines not certified distinct
      meets.push_back({i, j, std::move(p)});
    }
  }
  const std::size_t n = meets.size();
  std::vector<std::vector<bool>> distinct(n, std::vector<bool>(n, true));
  UnionFind uf(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      bool d = certainly_distinct(meets[a].point, meets[b].point);
      distinct[a][b] = distinct[b][a] = d;
      if (!d) uf.unite(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> clusters(n);
  for (std::size_t a = 0; a < n; ++a) clusters[uf.find(a)].push_back(a);

  MultiplicitySpectrum spectrum;
  for (const auto& members : clusters) {
    if (members.empty()) continue;
    std::set<std::size_t> on;
    for (std::size_t a : members) {
      on.insert(meets[a].i);
      on.insert(meets[a].j);
      for (std::size_t b : members) {
        if (a != b && distinct[a][b]) return std::nullopt;  // chained through a separated pair
      }
    }
    std::size_t m = on.size();
    if (members.size() != m * (m - 1) / 2) return std::nullopt;
    spectrum.add(static_cast<std::int64_t>(m), 1);
  }
  return spectrum;
}

}  // namespace

PresumedSpectrum generate_regular_polygon_family(PolygonFamily kind, std::int64_t k, long precision_bits,
                                                 int max_refinements) {
  if (kind == PolygonFamily::polyhedral && k < 3) {
    throw CurveError(Errc::invalid_argument, "polyhedral family needs k >= 3");
  }
  if (kind == PolygonFamily::boroczky && (k < 6 || k % 2 != 0)) {
    throw CurveError(Errc::invalid_argument, "Boroczky family needs even k >= 6");
  }
  if (precision_bits < 2) throw CurveError(Errc::invalid_argument, "precision must be at least 2 bits");
  if (max_refinements < 0) throw CurveError(Errc::invalid_argument, "negative refinement count");

  long prec = precision_bits;
  for (int round = 0; round <= max_refinements; ++round, prec *= 2) {
    auto lines = kind == PolygonFamily::polyhedral ? polyhedral_lines(prec, k) : boroczky_lines(prec, k);
    auto spectrum = cluster_spectrum(lines);
    if (!spectrum) continue;
    PresumedSpectrum out;
    out.datum.degree = 1;
    out.datum.count = static_cast<std::int64_t>(lines.size());
    out.datum.spectrum = std::move(*spectrum);
    out.datum.label = (kind == PolygonFamily::polyhedral ? "polyhedral-" : "boroczky-") + std::to_string(k);
    out.precision_bits = prec;
    return out;
  }
  throw CurveError(Errc::precision_exhausted,
                   "intersection clusters still inconsistent at " + std::to_string(prec / 2) + " bits");
}

}  // namespace curvecfg
