#ifndef GIBBS_CRITPOINTS_HPP_
#define GIBBS_CRITPOINTS_HPP_

#include <vector>

#include "gibbs/poly.hpp"
#include "gibbs/rational.hpp"
#include "gibbs/real_mp.hpp"

namespace gibbs {

enum class Direction { up, down };
enum class Side { above_jump, below_jump, positive };

const char* to_string(Side side);

/// Closed interval [low, high] holding exactly one root of some polynomial.
/// low == high means the root is exactly that rational.
struct Bracket {
  Rational low;
  Rational high;
};

struct RootEnclosure {
  Rational low;
  Rational high;
  RealMP refined;
  int poly_degree = 0;
  Side side = Side::positive;
};

/// Sturm sequence P, P', -rem(...), ... of a squarefree-or-not polynomial.
std::vector<Poly> sturm_sequence(const Poly& p);
/// Distinct roots in (a, b]; both endpoints should be non-roots.
int sturm_count(const std::vector<Poly>& sequence, const Rational& a, const Rational& b);
int sturm_count(const Poly& p, const Rational& a, const Rational& b);

/**
 * @brief Descartes bound on the number of roots of @p p in (a, b).
 *
 * Counts sign variations of (1+t)^d p((a + b t) / (1 + t)). The count is an
 * upper bound in general, exact when it is 0 or 1, and exact for every
 * polynomial whose roots are all real.
 */
int descartes_count(const IntegerPoly& p, const Rational& a, const Rational& b);

/// Roots in (a, b): Sturm for small degree, Descartes otherwise.
int count_roots(const Poly& p, const Rational& a, const Rational& b);

/**
 * @brief Certified bracket around the first root of @p q strictly beyond
 * @p from in @p direction.
 *
 * Samples on a grid of step window_hint / 64 out to 8 * window_hint with
 * exact signs. The returned bracket is certified to contain one root, and
 * the stretch between @p from and the bracket is certified root-free; the
 * grid is refined until both hold.
 *
 * @throws Error(no_root_found) when no sign change occurs in range.
 * @throws Error(multiple_roots) when refinement cannot isolate the root.
 */
Bracket bracket_first_root(const Poly& q, const Rational& from, Direction direction,
                           const Rational& window_hint);

/**
 * @brief Refines a certified bracket to width 10^-(digits-10).
 *
 * Exact bisection down to 1e-12, Newton in MPFR with guard digits sized by
 * the cancellation in Q near the root, then an exact sign check on a
 * rational enclosure of the Newton result.
 *
 * @throws Error(precision_exhausted) if the Newton result cannot be
 * certified after raising the guard digits.
 */
RootEnclosure refine_root(const Poly& q, const Bracket& bracket, int digits,
                          Side side = Side::positive);

struct ZeroWindow {
  RealMP lower;
  RealMP upper;
};

/// Szego bounds on the least positive zero of H_{2N+1}. N >= 1.
ZeroWindow hermite_zero_window(unsigned half_degree, int digits);

/// u = 2 sqrt(n) (sqrt(x) - 1).
RealMP u_map(const RealMP& x, unsigned n);

/// Distance from 1 to the first Laguerre critical point, about pi / sqrt(n),
/// rounded up to a short decimal.
Rational laguerre_window_hint(unsigned n);
/// Upper Szego bound rounded up to a short decimal.
Rational hermite_window_hint(unsigned half_degree);
/// About 4 / (2n + 2 + lambda): above the first positive zero of C_{2n+1}^(lambda+1).
Rational gegenbauer_window_hint(unsigned half_degree, const Rational& lambda);

}  // namespace gibbs

#endif  // GIBBS_CRITPOINTS_HPP_
