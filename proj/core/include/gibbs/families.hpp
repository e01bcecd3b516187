#ifndef GIBBS_FAMILIES_HPP_
#define GIBBS_FAMILIES_HPP_

#include <string>
#include <vector>

#include "gibbs/poly.hpp"
#include "gibbs/rational.hpp"
#include "gibbs/real_mp.hpp"
#include "gibbs/special.hpp"

namespace gibbs {

enum class Family { laguerre, hermite, gegenbauer, jacobi, legendre, chebyshev_t, chebyshev_u };

/// Three-term recurrence p_{k+1}(x) = (a x + b) p_k(x) - c p_{k-1}(x).
struct RecurrenceStep {
  Rational a, b, c;
};

/**
 * @brief A classical family together with its (rational) parameters.
 *
 * Domains: Laguerre alpha > -1, Gegenbauer lambda > -1/2, Jacobi
 * alpha, beta > -1. Construction outside the domain throws a domain error
 * naming the parameter.
 */
class FamilySpec {
 public:
  static FamilySpec laguerre(const Rational& alpha);
  static FamilySpec hermite();
  static FamilySpec gegenbauer(const Rational& lambda);
  static FamilySpec jacobi(const Rational& alpha, const Rational& beta);
  static FamilySpec legendre();
  static FamilySpec chebyshev_t();
  static FamilySpec chebyshev_u();

  Family family() const noexcept { return family_; }
  const std::vector<Rational>& params() const noexcept { return params_; }
  /// First parameter (alpha for Laguerre/Jacobi, lambda for Gegenbauer).
  const Rational& param(std::size_t i = 0) const;

  std::string name() const;
  /// "alpha=-1/2", "lambda=1", "alpha=0;beta=1", or "" for parameter-free families.
  std::string param_string() const;

  Poly polynomial(unsigned n) const;
  RecurrenceStep recurrence(unsigned k) const;
  /// Leading coefficient of p_n.
  Rational leading_coefficient(unsigned n) const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  FamilySpec(Family family, std::vector<Rational> params)
      : family_(family), params_(std::move(params)) {}

  Family family_;
  std::vector<Rational> params_;
};

/// Generalized Laguerre L_n^(alpha) from its defining sum.
Poly laguerre(unsigned n, const Rational& alpha);
/// Physicists' Hermite H_n, built from the Laguerre specialisations.
Poly hermite(unsigned n);
/// Gegenbauer C_n^(lambda) in the standard normalisation (C_1 = 2 lambda x).
Poly gegenbauer(unsigned n, const Rational& lambda);
/// Jacobi P_n^(alpha,beta) from its explicit binomial sum.
Poly jacobi(unsigned n, const Rational& alpha, const Rational& beta);
Poly legendre(unsigned n);
Poly chebyshev_t(unsigned n);
Poly chebyshev_u(unsigned n);

/// p_0(x), ..., p_{n_max}(x) by the three-term recurrence, exactly.
std::vector<Rational> values_at(const FamilySpec& spec, unsigned n_max, const Rational& x);
/// Same at a floating point; runs at x.digits() precision.
std::vector<RealMP> values_at(const FamilySpec& spec, unsigned n_max, const RealMP& x);

/// Weighted L2 norm squared as rational * transcendental. Jacobi has no
/// such closed form in general; see norm_squared.
ExactScalar norm_squared_exact(const FamilySpec& spec, unsigned n);
RealMP norm_squared(const FamilySpec& spec, unsigned n, int digits);

/// Both sides of Carlitz's product formula
/// L_n^(a) L_{n-1}^(a+1) = Gamma(1+a+n)/(2^(2n) n!) sum_r (2r)!(2n-2r)! /
///   (r! ((n-r)!)^2 Gamma(1+a+r)) L_{2r-1}^(2a+1)(2x),  with L_{-1} = 0.
struct CarlitzSides {
  Poly product;
  Poly expansion;
};
CarlitzSides carlitz_product(unsigned n, const Rational& alpha);

}  // namespace gibbs

#endif  // GIBBS_FAMILIES_HPP_
