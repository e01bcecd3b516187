#ifndef GIBBS_POLY_HPP_
#define GIBBS_POLY_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gibbs/rational.hpp"
#include "gibbs/real_mp.hpp"

namespace gibbs {

/**
 * @brief Dense univariate polynomial with exact rational coefficients.
 *
 * coeffs()[i] is the coefficient of x^i. The highest stored coefficient is
 * never zero; the zero polynomial stores nothing and has degree -1.
 */
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);
  static Poly x() { return monomial(1, 1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly scale(const Poly& p, const Rational& c);
Poly differentiate(const Poly& p);
/// Antiderivative with zero constant term.
Poly antiderivative(const Poly& p);
/// Q with Q (x - root) = P. Throws not_divisible unless P(root) == 0.
Poly divide_exact(const Poly& p, const Rational& root);
/// Euclidean division: p = q * d + r with deg r < deg d.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d);
/// P(c x).
Poly scale_argument(const Poly& p, const Rational& c);
/// P(x^2).
Poly substitute_square(const Poly& p);
/// P(x + s).
Poly taylor_shift(const Poly& p, const Rational& s);

Rational eval_rational(const Poly& p, const Rational& x);

/// P(x) to x.digits() significant digits. Horner runs with guard digits and
/// the working precision is raised until the observed cancellation is
/// covered; at an exact zero the result is accurate in the absolute sense
/// (relative to sum |c_i| |x|^i).
RealMP eval_mp(const Poly& p, const RealMP& x);

/// Plain Horner at a fixed working precision, no error control.
RealMP horner_mp(const Poly& p, const RealMP& x, int digits);

/// sum |c_i| |x|^i, the scale of the Horner rounding error.
RealMP abs_sum_mp(const Poly& p, const RealMP& x);

/**
 * @brief Integer multiple of a Poly for fast exact sign evaluation.
 *
 * Coefficients are those of P scaled by a positive rational so that they are
 * coprime integers; sign(P(x)) == sign(IntegerPoly(P)(x)) everywhere.
 */
class IntegerPoly {
 public:
  IntegerPoly() = default;
  explicit IntegerPoly(const Poly& p);
  explicit IntegerPoly(std::vector<BigInt> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  /// den^deg * P(num/den) for den > 0.
  BigInt eval_homogeneous(const BigInt& num, const BigInt& den) const;
  int sign_at(const Rational& x) const;

 private:
  std::vector<BigInt> coeffs_;
};

}  // namespace gibbs

#endif  // GIBBS_POLY_HPP_
