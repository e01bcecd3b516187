#ifndef GIBBS_SPECIAL_HPP_
#define GIBBS_SPECIAL_HPP_

#include "gibbs/rational.hpp"
#include "gibbs/real_mp.hpp"

namespace gibbs {

// Constants are computed once per precision and cached; the cache is
// guarded by a shared mutex so concurrent readers never block each other.
RealMP pi(int digits);
RealMP euler_e(int digits);
RealMP sqrt_pi(int digits);

/// Gamma(a) for rational a that is not 0, -1, -2, ...
///
/// Positive integers go through the exact factorial, half-integers through
/// the closed form (rational) * sqrt(pi). Anything else is evaluated by MPFR
/// with 20 guard digits.
RealMP gamma(const Rational& a, int digits);

/// Gamma(a, 1) = int_1^inf x^(a-1) e^(-x) dx for rational a > 0.
RealMP upper_incomplete_gamma_at_1(const Rational& a, int digits);

/// (2/pi) int_0^pi sin(t)/t dt = 1.17897974447216727...
RealMP gibbs_constant(int digits);

/**
 * @brief Symbolic transcendental factor attached to an exact rational.
 *
 * Expansion coefficients, norms and Christoffel-Darboux constants are all of
 * the form (rational) * (one of these factors). Keeping the factor symbolic
 * lets identities be checked exactly and defers rounding to the last step.
 */
class Transcendental {
 public:
  enum class Kind {
    one,
    pi,                      // pi
    sqrt_pi,                 // sqrt(pi)
    inv_sqrt_pi,             // 1 / sqrt(pi)
    gamma,                   // Gamma(param)
    inv_e_gamma,             // 1 / (e Gamma(param))
    incomplete_gamma_ratio,  // Gamma(param, 1) / Gamma(param)
    gegenbauer_weight,       // Gamma(param) / (sqrt(pi) Gamma(param + 1/2))
    gegenbauer_norm,         // sqrt(pi) Gamma(param + 1/2) / Gamma(param)
  };

  Transcendental() = default;
  Transcendental(Kind kind, Rational param = 0) : kind_(kind), param_(std::move(param)) {}

  static Transcendental one() { return {}; }

  Kind kind() const noexcept { return kind_; }
  const Rational& param() const noexcept { return param_; }

  RealMP evaluate(int digits) const;
  std::string describe() const;

  friend bool operator==(const Transcendental& a, const Transcendental& b) {
    return a.kind_ == b.kind_ && a.param_ == b.param_;
  }

 private:
  Kind kind_ = Kind::one;
  Rational param_ = 0;
};

/// rational * factor.
struct ExactScalar {
  Rational rational;
  Transcendental factor;

  RealMP evaluate(int digits) const;
};

}  // namespace gibbs

#endif  // GIBBS_SPECIAL_HPP_
