#include "curvecfg/fixtures.hpp"
#include "curvecfg/inequalities.hpp"
#include "curvecfg/kummer.hpp"

#include "errc_check.hpp"
#include "oracles.hpp"

using namespace curvecfg;

namespace {
ValidatedConfiguration cfg(std::int64_t d, std::int64_t k, MultiplicitySpectrum s) {
  return ValidatedConfiguration::check({d, k, std::move(s), std::nullopt});
}
}  // namespace

TEST_CASE("Hirzebruch inequality for lines") {
  auto t6 = hirzebruch_lines(fixtures::t6());
  CHECK(t6.lhs == 6);
  CHECK(t6.rhs == 6);
  CHECK(t6.slack == 0);
  CHECK(t6.holds == true);
  auto klein = hirzebruch_lines(fixtures::klein());
  CHECK(klein.lhs == 21);
  CHECK(klein.rhs == 21);
  CHECK(klein.holds == true);
  CHECK(hirzebruch_lines(fixtures::wiman()).holds == true);

  auto near_pencil = hirzebruch_lines(cfg(1, 5, {{4, 1}, {2, 4}}));
  CHECK_FALSE(near_pencil.preconditions_met);
  CHECK_FALSE(near_pencil.holds);
  CHECK_FALSE(near_pencil.reasons.empty());
}

TEST_CASE("Melchior inequality") {
  auto t6 = melchior(fixtures::t6());
  CHECK(t6.lhs == 3);
  CHECK(t6.rhs == 3);
  CHECK(t6.holds == true);
  auto klein = melchior(fixtures::klein());
  CHECK(klein.lhs == 0);
  CHECK(klein.rhs == 24);
  CHECK(klein.slack == -24);
  CHECK(klein.holds == false);
  CHECK(melchior(fixtures::dual_hesse()).holds == false);
  CHECK_FALSE(melchior(cfg(1, 4, {{4, 1}})).preconditions_met);
}

TEST_CASE("curve inequalities") {
  auto cubics = hirzebruch_dconfig(cfg(3, 4, {{2, 54}}));
  CHECK(cubics.lhs == 126);
  CHECK(cubics.rhs == 0);
  CHECK(cubics.holds == true);
  CHECK_ERRC(hirzebruch_dconfig(fixtures::hesse_conics()), Errc::wrong_checker);
  CHECK_ERRC(hirzebruch_dconfig(fixtures::t6()), Errc::wrong_checker);

  auto hesse = tang_conics(fixtures::hesse_conics());
  CHECK(hesse.lhs == 72);
  CHECK(hesse.rhs == 36);
  CHECK(hesse.holds == true);
  CHECK(tang_conics(fixtures::ap_conics()).holds == true);
  CHECK_ERRC(tang_conics(fixtures::t6()), Errc::wrong_checker);
}

TEST_CASE("gamma bound") {
  auto hesse = gamma_bound(fixtures::hesse_conics());
  CHECK(hesse.relation == Relation::strictly_less);
  CHECK(hesse.lhs == Rational(13, 6));
  CHECK(hesse.slack == Rational(1, 2));
  CHECK(hesse.holds == true);
  CHECK(gamma_bound(fixtures::ap_conics()).lhs == Rational(9, 5));
  auto lines = gamma_bound(fixtures::dual_hesse());
  CHECK_FALSE(lines.preconditions_met);
  CHECK_FALSE(lines.holds);
}

TEST_CASE("verify_all selects checkers by degree") {
  auto names = [](const std::vector<InequalityVerdict>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.name);
    return out;
  };
  CHECK(names(verify_all(fixtures::t6())) == std::vector<std::string>{"hirzebruch", "melchior"});
  CHECK(names(verify_all(fixtures::hesse_conics())) == std::vector<std::string>{"tang-conics", "gamma-bound"});
  CHECK(names(verify_all(cfg(3, 4, {{2, 54}}))) == std::vector<std::string>{"hirzebruch-d", "gamma-bound"});
  auto all = verify_all(fixtures::t6(), true);
  CHECK(all.size() == 5);
  for (std::size_t i = 2; i < all.size(); ++i) CHECK_FALSE(all[i].preconditions_met);
}

TEST_CASE("property: slack orientation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 4);
    std::int64_t k = 4 + static_cast<std::int64_t>(rng() % 12);
    auto c = ValidatedConfiguration::check(oracles::random_spectrum(rng, d, k));
    for (const auto& v : verify_all(c, true)) {
      if (!v.preconditions_met) {
        CHECK_FALSE(v.holds);
        continue;
      }
      REQUIRE(v.holds);
      if (v.relation == Relation::at_least) {
        CHECK(v.slack == v.lhs - v.rhs);
        CHECK(*v.holds == (v.slack >= 0));
      } else {
        CHECK(v.slack == v.rhs - v.lhs);
        CHECK(*v.holds == (v.slack > 0));
      }
    }
  }
}

TEST_CASE("property: gamma stays below 8/3 for curves passing the inequality") {
  std::mt19937_64 rng(23);
  int applicable = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 3);
    std::int64_t k = 4 + static_cast<std::int64_t>(rng() % 16);
    auto v = gamma_bound(ValidatedConfiguration::check(oracles::random_spectrum(rng, d, k)));
    if (!v.preconditions_met) continue;
    ++applicable;
    CHECK(v.holds == true);
  }
  CHECK(applicable > 1000);
}
