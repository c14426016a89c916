#pragma once

#include "curvecfg/config.hpp"
#include "curvecfg/kummer.hpp"
#include "curvecfg/polynomial.hpp"
#include "curvecfg/quasi_polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace curvecfg {

/// Points whose multiplicity grows with the parameter, e.g. the centre of a
/// polyhedral arrangement.
struct GrowingEntry {
  Polynomial multiplicity;  ///< integer-valued linear polynomial in the parameter
  QuasiPolynomial count;
};

struct FamilyDomain {
  std::int64_t min_parameter = 1;
  std::int64_t modulus = 1;  ///< parameter ≡ residue (mod modulus)
  std::int64_t residue = 0;
};

/// A parameterised family of line or curve configurations. Counts are
/// quasi-polynomials in the parameter; instantiation additionally requires
/// every count to be a nonnegative integer.
struct FamilySpectrum {
  std::string name;
  std::string parameter = "k";
  std::int64_t degree = 1;
  QuasiPolynomial line_count;
  std::map<std::int64_t, QuasiPolynomial> fixed;
  std::vector<GrowingEntry> growing;
  FamilyDomain domain;
  bool instantiable = true;

  /// f_i as a quasi-polynomial in the parameter, growing entries included.
  QuasiPolynomial moment(int i) const;
  QuasiPolynomial fixed_count(std::int64_t r) const;
};

enum class BuiltinFamily { boroczky, s_elliptic, polyhedral, fermat };

/// `w` is only used by the s-elliptic family (w >= 0).
FamilySpectrum builtin_family(BuiltinFamily kind, std::int64_t w = 0);
/// Accepts "boroczky", "s-elliptic"/"s_elliptic", "polyhedral", "fermat".
FamilySpectrum builtin_family(std::string_view name, std::int64_t w = 0);
BuiltinFamily parse_family_name(std::string_view name);

/// k degree-d curves with only transversal double points:
/// t_2 = d^2 k(k-1)/2.
FamilySpectrum generic_family(std::int64_t degree = 1);

/// Synthetic limit-only family with t_{r0} = c k^2 and nothing else.
FamilySpectrum dominant_profile(std::int64_t r0, const Rational& c = Rational(1));

/// Throws domain (with the violated rule) or unsupported.
ValidatedConfiguration instantiate(const FamilySpectrum& fam, std::int64_t parameter);

/// Smallest admissible parameter >= `from`, or nullopt if none within `search`.
std::optional<std::int64_t> next_admissible(const FamilySpectrum& fam, std::int64_t from, std::int64_t search = 1000);

/// lim (lines - f_1) / f_0 as the parameter grows.
Rational asymptotic_harbourne(const FamilySpectrum& fam);

/// Chern coefficient quasi-polynomials of the family's Kummer covers.
ChernCoefficients<QuasiPolynomial> symbolic_chern(const FamilySpectrum& fam);

/// Parameter -> infinity limit of the Chern slope, as a function of n.
RationalFunctionInN k_chern_slope(const FamilySpectrum& fam);

/// Joint limit; computed as lim_n of the k-slope and as the leading ratio of
/// the n^2 coefficients, which must agree.
Rational kn_chern_slope(const FamilySpectrum& fam);

}  // namespace curvecfg
