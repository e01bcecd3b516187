#ifndef GIBBS_GIBBS_RUN_HPP_
#define GIBBS_GIBBS_RUN_HPP_

#include <optional>
#include <string_view>

#include "gibbs/critpoints.hpp"
#include "gibbs/expansion.hpp"
#include "gibbs/families.hpp"

namespace gibbs {

/**
 * @brief One row of an overshoot table.
 *
 * Laguerre rows are two-sided (overshoot = value_plus - value_minus);
 * Hermite and Gegenbauer rows are one-sided (overshoot = value_plus) and
 * leave the minus fields empty. @c n is the Laguerre degree or the
 * half-degree N of the odd expansions (degree 2N + 1).
 */
struct GibbsRow {
  FamilySpec family;
  unsigned n = 0;
  int digits = 0;
  RootEnclosure x_plus;
  std::optional<RootEnclosure> x_minus{};
  std::optional<RealMP> u_plus{}, u_minus{};
  RealMP value_plus = RealMP(digits > 0 ? digits : 30);
  std::optional<RealMP> value_minus{};
  std::optional<RealMP> overshoot{};
  std::optional<RealMP> gamma_error{};
};

/// Critical points flanking the jump for one family: x_+ then x_- for
/// Laguerre (x_- omitted when it does not exist), the least positive one
/// for Hermite and Gegenbauer. @p n as in GibbsRow.
std::vector<RootEnclosure> critical_points(const FamilySpec& spec, unsigned n, int digits);

/// Requires n >= 3; smaller n throws a degenerate error.
GibbsRow laguerre_overshoot(const Rational& alpha, unsigned n, int digits);
GibbsRow hermite_overshoot(unsigned half_degree, int digits);
GibbsRow gegenbauer_overshoot(const Rational& lambda, unsigned half_degree, int digits);

enum class ConjecturePath { direct_sum, carlitz };
const char* to_string(ConjecturePath path);

struct ConjectureRow {
  Rational alpha;
  unsigned n = 0;
  int digits = 0;
  ConjecturePath via = ConjecturePath::direct_sum;
  RealMP value_at_1;
};

/// Partial sum of the step expansion at the jump, x = 1.
ConjectureRow conjecture_at_1(const Rational& alpha, unsigned n, int digits, ConjecturePath via);

/// sum_{j=1}^{J} 4^-j / j sum_{r=1}^{j} binom(2r, r) binom(2j-2r, j-r) L_{2r-1}^(1)(2),
/// which tends to 1 - e/2.
RealMP triple_sum_partial(unsigned J, int digits);
/// The inner double sum for one j, exactly (without the 4^-j / j factor).
Rational triple_sum_inner(unsigned j);

enum class AsymptoticKind { glp_sine, hermite_sine, dn_alpha, final_derivative };
const char* to_string(AsymptoticKind kind);
AsymptoticKind parse_asymptotic_kind(std::string_view name);

struct AsymptoticParams {
  Rational alpha = 0;
  unsigned n = 1;  // half-degree N for hermite_sine
  Rational x = 1;
};

struct AsymptoticReport {
  AsymptoticKind what;
  AsymptoticParams params;
  int digits = 0;
  RealMP exact;
  RealMP asymptotic;
  RealMP relative_error;
};

/// @throws Error(ill_conditioned) when |exact| < 10^(-digits/2).
AsymptoticReport asymptotic_compare(AsymptoticKind what, const AsymptoticParams& params, int digits);

}  // namespace gibbs

#endif  // GIBBS_GIBBS_RUN_HPP_
