#pragma once

#include "curvecfg/config.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace curvecfg {

namespace detail {

/// Homogeneous integer triple in canonical form: coprime entries, first
/// nonzero entry positive. Structural equality is projective equality.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous(Integer a, Integer b, Integer c) : c_{std::move(a), std::move(b), std::move(c)} {
    normalize();
  }
  Homogeneous(long a, long b, long c) : Homogeneous(Integer(a), Integer(b), Integer(c)) {}

  const Integer& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Integer, 3>& coords() const { return c_; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.c_ == b.c_; }
  friend bool operator<(const Homogeneous& a, const Homogeneous& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      int s = cmp(a.c_[i], b.c_[i]);
      if (s != 0) return s < 0;
    }
    return false;
  }

  std::string str() const {
    return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
  }

 private:
  void normalize() {
    Integer g = gcd(gcd(c_[0], c_[1]), c_[2]);
    if (g == 0) throw CurveError(Errc::invalid_argument, "homogeneous coordinates must not all be zero");
    for (auto& x : c_) x /= g;
    for (const auto& x : c_) {
      if (x == 0) continue;
      if (x < 0) {
        for (auto& y : c_) y = -y;
      }
      break;
    }
  }

  std::array<Integer, 3> c_;
};

struct PointTag {};
struct LineTag {};

}  // namespace detail

using ProjPoint = detail::Homogeneous<detail::PointTag>;
using ProjLine = detail::Homogeneous<detail::LineTag>;

bool incident(const ProjPoint& p, const ProjLine& l);

/// Meet of two distinct lines; throws degenerate_intersection on equal lines.
ProjPoint intersect(const ProjLine& l1, const ProjLine& l2);

/// Line through two distinct points.
ProjLine join(const ProjPoint& p1, const ProjPoint& p2);

class LineArrangement {
 public:
  /// Throws duplicate_line if two entries are projectively equal.
  explicit LineArrangement(std::vector<ProjLine> lines, std::string label = {});

  const std::vector<ProjLine>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }
  const std::string& label() const { return label_; }

 private:
  std::vector<ProjLine> lines_;
  std::string label_;
};

/// Exact multiplicity spectrum of an arrangement of at least two lines.
ValidatedConfiguration spectrum_of(const LineArrangement& arr);

/// k lines in general position (only double points), deterministic in seed.
LineArrangement generate_generic(std::int64_t k, std::uint64_t seed);

/// One line per row "a b c"; '#' starts a comment; blank lines ignored.
LineArrangement parse_arrangement(std::istream& in, std::string label = {});

}  // namespace curvecfg
