#include "curvecfg/families.hpp"
#include "curvecfg/polygon_families.hpp"

#include "errc_check.hpp"

using namespace curvecfg;

TEST_CASE("smallest polygon arrangements are T6") {
  MultiplicitySpectrum t6{{2, 3}, {3, 4}};
  auto poly = generate_regular_polygon_family(PolygonFamily::polyhedral, 3, 64);
  CHECK(poly.presumed);
  CHECK(poly.datum.count == 6);
  CHECK(poly.datum.spectrum == t6);
  auto bor = generate_regular_polygon_family(PolygonFamily::boroczky, 6, 64);
  CHECK(bor.datum.spectrum == t6);
}

TEST_CASE("numeric generators match the closed forms") {
  auto polyhedral = builtin_family(BuiltinFamily::polyhedral);
  for (std::int64_t k = 3; k <= 12; ++k) {
    auto s = generate_regular_polygon_family(PolygonFamily::polyhedral, k, 64);
    CHECK_MESSAGE(s.datum.spectrum == instantiate(polyhedral, k).spectrum(), "polyhedral k=", k);
  }
  auto boroczky = builtin_family(BuiltinFamily::boroczky);
  for (std::int64_t k = 6; k <= 16; k += 2) {
    auto s = generate_regular_polygon_family(PolygonFamily::boroczky, k, 64);
    CHECK_MESSAGE(s.datum.spectrum == instantiate(boroczky, k).spectrum(), "boroczky k=", k);
  }
}

TEST_CASE("low precision is refined or reported") {
  auto refined = generate_regular_polygon_family(PolygonFamily::polyhedral, 8, 4, 6);
  CHECK(refined.precision_bits > 4);
  CHECK(refined.datum.spectrum == instantiate(builtin_family(BuiltinFamily::polyhedral), 8).spectrum());
  CHECK_ERRC(generate_regular_polygon_family(PolygonFamily::boroczky, 12, 2, 0), Errc::precision_exhausted);
}

TEST_CASE("polygon argument checks") {
  CHECK_ERRC(generate_regular_polygon_family(PolygonFamily::polyhedral, 2, 64), Errc::invalid_argument);
  CHECK_ERRC(generate_regular_polygon_family(PolygonFamily::boroczky, 7, 64), Errc::invalid_argument);
  CHECK_ERRC(generate_regular_polygon_family(PolygonFamily::boroczky, 4, 64), Errc::invalid_argument);
  CHECK_ERRC(generate_regular_polygon_family(PolygonFamily::polyhedral, 4, 1), Errc::invalid_argument);
}
