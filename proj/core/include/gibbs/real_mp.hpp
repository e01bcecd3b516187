#ifndef GIBBS_REAL_MP_HPP_
#define GIBBS_REAL_MP_HPP_

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "gibbs/rational.hpp"

namespace gibbs {

/// Binary precision used to carry `digits` significant decimal digits.
mpfr_prec_t bits_for_digits(int digits);

/**
 * @brief Arbitrary-precision real tagged with its working precision in
 * decimal digits.
 *
 * Owns an mpfr_t. Binary operations round to the larger of the two operand
 * precisions; there is no global precision state anywhere in the library.
 */
class RealMP {
 public:
  explicit RealMP(int digits = 30);
  RealMP(long value, int digits);
  RealMP(const Rational& value, int digits);
  RealMP(const BigInt& value, int digits);

  /// Parses a decimal string ("1.2345e-7").
  static RealMP parse(std::string_view text, int digits);

  RealMP(const RealMP& other);
  RealMP(RealMP&& other) noexcept;
  RealMP& operator=(const RealMP& other);
  RealMP& operator=(RealMP&& other) noexcept;
  ~RealMP();

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }

  /// Copy rounded (or widened) to a different precision.
  RealMP with_digits(int digits) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1 (meaningless for zero).
  long exponent2() const noexcept { return mpfr_get_exp(value_); }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Exact value of the stored binary float as a rational number.
  Rational to_rational() const;

  /// `significant` digits; plain decimal when 1e-6 <= |x| < 1e6, otherwise
  /// scientific notation.
  std::string to_string(int significant) const;
  std::string to_string() const { return to_string(digits_); }

  RealMP& operator+=(const RealMP& rhs);
  RealMP& operator-=(const RealMP& rhs);
  RealMP& operator*=(const RealMP& rhs);
  RealMP& operator/=(const RealMP& rhs);

  friend RealMP operator+(RealMP lhs, const RealMP& rhs) { return lhs += rhs; }
  friend RealMP operator-(RealMP lhs, const RealMP& rhs) { return lhs -= rhs; }
  friend RealMP operator*(RealMP lhs, const RealMP& rhs) { return lhs *= rhs; }
  friend RealMP operator/(RealMP lhs, const RealMP& rhs) { return lhs /= rhs; }
  RealMP operator-() const;

  friend bool operator==(const RealMP& a, const RealMP& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const RealMP& a, const RealMP& b);

 private:
  void widen_to(const RealMP& other);

  mpfr_t value_;
  int digits_;
};

RealMP abs(const RealMP& x);
RealMP sqrt(const RealMP& x);
RealMP exp(const RealMP& x);
RealMP log(const RealMP& x);
RealMP sin(const RealMP& x);
RealMP cos(const RealMP& x);
RealMP pow(const RealMP& base, const RealMP& exponent);
RealMP ldexp(const RealMP& x, long e);  // x * 2^e

/// Number of leading decimal digits on which a and b agree, measured as
/// -log10(|a - b| / |a|); capped at the smaller precision.
double agreeing_digits(const RealMP& a, const RealMP& b);

}  // namespace gibbs

#endif  // GIBBS_REAL_MP_HPP_
