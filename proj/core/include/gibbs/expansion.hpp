#ifndef GIBBS_EXPANSION_HPP_
#define GIBBS_EXPANSION_HPP_

#include <vector>

#include "gibbs/families.hpp"
#include "gibbs/poly.hpp"
#include "gibbs/special.hpp"

namespace gibbs {

/// The two jump functions: the unit step at x = 1 on [0, inf) and sgn on R.
enum class JumpKind { step_at_one, sign };

const char* to_string(JumpKind kind);

/**
 * @brief Truncated orthogonal expansion of a jump function.
 *
 * coeffs[j] multiplies p_j, the j-th polynomial of @c spec; there are
 * degree + 1 entries. For the sign function only odd indices are nonzero.
 */
struct ExpansionSeries {
  FamilySpec spec;
  JumpKind kind;
  unsigned degree;
  std::vector<ExactScalar> coeffs;
};

/// Step function at 1 in L^(alpha), truncated at degree n.
ExpansionSeries laguerre_coefficients(const Rational& alpha, unsigned n);
/// sgn in Hermite polynomials, truncated at degree 2N + 1.
ExpansionSeries hermite_coefficients(unsigned half_degree);
/// sgn on [-1, 1] in C^(lambda), truncated at degree 2n + 1. lambda != 0.
ExpansionSeries gegenbauer_coefficients(const Rational& lambda, unsigned half_degree);

/**
 * @brief Christoffel-Darboux form of the derivative of a partial sum.
 *
 * d/dx partial_sum(x) == constant * quotient(x), where quotient is
 * numerator / (x - pivot) computed by exact division.
 *
 * For the step function (Laguerre, p = L^(alpha+1)):
 *   numerator = p_{n-1}(1) p_n(x) - p_{n-1}(x) p_n(1),  pivot = 1,
 *   constant  = -n! / (e Gamma(n + alpha + 1)).
 * For sgn, numerator is the next odd polynomial of the derivative family
 * (H_{2N+1}, or C_{2n+1}^(lambda+1)) and pivot = 0.
 */
struct CDForm {
  Poly numerator;
  Rational pivot;
  Poly quotient;
  ExactScalar constant;
};

/// @p n is the truncation degree for Laguerre and the half-degree otherwise.
CDForm cd_derivative(const FamilySpec& spec, JumpKind kind, unsigned n);

/// Partial sum at a floating point, by the three-term recurrence with
/// 30 guard digits.
RealMP partial_sum_eval(const ExpansionSeries& series, const RealMP& x, int digits);
/// Partial sum at a rational point: each transcendental group is summed
/// exactly and only the final combination is rounded.
RealMP partial_sum_eval(const ExpansionSeries& series, const Rational& x, int digits);

/// Sum of r_j p_j over the coefficients whose factor equals @p factor.
Poly partial_sum_poly(const ExpansionSeries& series, const Transcendental& factor);

/// Distinct transcendental factors appearing in the series, in order of
/// first appearance.
std::vector<Transcendental> factors_of(const ExpansionSeries& series);

}  // namespace gibbs

#endif  // GIBBS_EXPANSION_HPP_
