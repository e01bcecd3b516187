#include "gibbs/families.hpp"

#include "gibbs/error.hpp"

namespace gibbs {

namespace {

void require_greater(const Rational& value, const Rational& bound, const char* name) {
  if (value <= bound)
    throw Error(ErrorKind::domain, std::string(name) + " must exceed " + to_string(bound) +
                                       ", got " + name + " = " + to_string(value));
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

FamilySpec FamilySpec::laguerre(const Rational& alpha) {
  require_greater(alpha, -1, "alpha");
  return FamilySpec(Family::laguerre, {alpha});
}

FamilySpec FamilySpec::hermite() { return FamilySpec(Family::hermite, {}); }

FamilySpec FamilySpec::gegenbauer(const Rational& lambda) {
  require_greater(lambda, Rational(-1, 2), "lambda");
  return FamilySpec(Family::gegenbauer, {lambda});
}

FamilySpec FamilySpec::jacobi(const Rational& alpha, const Rational& beta) {
  require_greater(alpha, -1, "alpha");
  require_greater(beta, -1, "beta");
  return FamilySpec(Family::jacobi, {alpha, beta});
}

FamilySpec FamilySpec::legendre() { return FamilySpec(Family::legendre, {}); }
FamilySpec FamilySpec::chebyshev_t() { return FamilySpec(Family::chebyshev_t, {}); }
FamilySpec FamilySpec::chebyshev_u() { return FamilySpec(Family::chebyshev_u, {}); }

const Rational& FamilySpec::param(std::size_t i) const {
  if (i >= params_.size())
    throw Error(ErrorKind::domain, name() + " has no parameter #" + std::to_string(i));
  return params_[i];
}

std::string FamilySpec::name() const {
  switch (family_) {
    case Family::laguerre: return "laguerre";
    case Family::hermite: return "hermite";
    case Family::gegenbauer: return "gegenbauer";
    case Family::jacobi: return "jacobi";
    case Family::legendre: return "legendre";
    case Family::chebyshev_t: return "chebyshev_t";
    case Family::chebyshev_u: return "chebyshev_u";
  }
  return "?";
}

std::string FamilySpec::param_string() const {
  switch (family_) {
    case Family::laguerre: return "alpha=" + to_string(params_[0]);
    case Family::gegenbauer: return "lambda=" + to_string(params_[0]);
    case Family::jacobi:
      return "alpha=" + to_string(params_[0]) + ";beta=" + to_string(params_[1]);
    default: return "";
  }
}

Poly FamilySpec::polynomial(unsigned n) const {
  switch (family_) {
    case Family::laguerre: return gibbs::laguerre(n, params_[0]);
    case Family::hermite: return gibbs::hermite(n);
    case Family::gegenbauer: return gibbs::gegenbauer(n, params_[0]);
    case Family::jacobi: return gibbs::jacobi(n, params_[0], params_[1]);
    case Family::legendre: return gibbs::legendre(n);
    case Family::chebyshev_t: return gibbs::chebyshev_t(n);
    case Family::chebyshev_u: return gibbs::chebyshev_u(n);
  }
  return {};
}

RecurrenceStep FamilySpec::recurrence(unsigned k) const {
  const Rational kk(k);
  const Rational k1(k + 1);
  switch (family_) {
    case Family::laguerre: {
      const Rational& alpha = params_[0];
      return {Rational(-1) / k1, (2 * kk + 1 + alpha) / k1, (kk + alpha) / k1};
    }
    case Family::hermite: return {2, 0, 2 * kk};
    case Family::gegenbauer: {
      const Rational& lambda = params_[0];
      return {2 * (kk + lambda) / k1, 0, (kk + 2 * lambda - 1) / k1};
    }
    case Family::legendre: return {(2 * kk + 1) / k1, 0, kk / k1};
    case Family::chebyshev_t: return {k == 0 ? 1 : 2, 0, 1};
    case Family::chebyshev_u: return {2, 0, 1};
    case Family::jacobi: {
      const Rational& a = params_[0];
      const Rational& b = params_[1];
      if (k == 0) return {(a + b + 2) / 2, (a - b) / 2, 0};
      const Rational s = 2 * kk + a + b;
      const Rational den = 2 * k1 * (kk + a + b + 1) * s;
      return {(s + 1) * (s + 2) * s / den, (s + 1) * (a * a - b * b) / den,
              2 * (kk + a) * (kk + b) * (s + 2) / den};
    }
  }
  return {};
}

Rational FamilySpec::leading_coefficient(unsigned n) const {
  Rational k = 1;
  for (unsigned i = 0; i < n; ++i) k *= recurrence(i).a;
  return k;
}

Poly laguerre(unsigned n, const Rational& alpha) {
  require_greater(alpha, -1, "alpha");
  // c_j = binom(n+alpha, n-j) (-1)^j / j!, walked by the ratio
  // c_{j+1} / c_j = -(n-j) / ((alpha+j+1)(j+1)).
  std::vector<Rational> c(n + 1);
  c[0] = pochhammer(alpha + 1, n) / Rational(factorial(n));
  for (unsigned j = 0; j < n; ++j)
    c[j + 1] = c[j] * Rational(-static_cast<long>(n - j)) / ((alpha + j + 1) * (j + 1));
  return Poly(std::move(c));
}

Poly hermite(unsigned n) {
  // H_2m = (-1)^m 2^2m m! L_m^(-1/2)(x^2),  H_2m+1 = (-1)^m 2^(2m+1) m! x L_m^(1/2)(x^2)
  const unsigned m = n / 2;
  const bool odd = n % 2 == 1;
  Rational factor(pow2(odd ? 2 * m + 1 : 2 * m) * factorial(m));
  if (m % 2 == 1) factor = -factor;
  Poly base = substitute_square(laguerre(m, odd ? Rational(1, 2) : Rational(-1, 2)));
  if (odd) base = base * Poly::x();
  return base * factor;
}

Poly gegenbauer(unsigned n, const Rational& lambda) {
  require_greater(lambda, Rational(-1, 2), "lambda");
  // C_n^(lambda) = sum_k (-1)^k (lambda)_{n-k} / (k! (n-2k)!) (2x)^(n-2k)
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    const unsigned p = n - 2 * k;
    Rational v = pochhammer(lambda, n - k) * Rational(pow2(p)) /
                 Rational(factorial(k) * factorial(p));
    c[p] = (k % 2 == 1) ? Rational(-v) : v;
  }
  return Poly(std::move(c));
}

Poly jacobi(unsigned n, const Rational& alpha, const Rational& beta) {
  // sum_j binom(n+alpha, n-j) binom(n+beta, j) ((x-1)/2)^j ((x+1)/2)^(n-j)
  const Poly minus = Poly{Rational(-1, 2), Rational(1, 2)};
  const Poly plus = Poly{Rational(1, 2), Rational(1, 2)};
  std::vector<Poly> minus_pow{Poly::constant(1)}, plus_pow{Poly::constant(1)};
  for (unsigned j = 1; j <= n; ++j) {
    minus_pow.push_back(minus_pow.back() * minus);
    plus_pow.push_back(plus_pow.back() * plus);
  }
  Poly sum;
  for (unsigned j = 0; j <= n; ++j) {
    Rational w = binomial(n + alpha, n - j) * binomial(n + beta, j);
    if (w == 0) continue;
    sum += (minus_pow[j] * plus_pow[n - j]) * w;
  }
  return sum;
}

Poly legendre(unsigned n) { return jacobi(n, 0, 0); }

Poly chebyshev_t(unsigned n) {
  // T_n = P_n^(-1/2,-1/2) / P_n^(-1/2,-1/2)(1), with P_n^(a,b)(1) = binom(n+a, n).
  const Rational half(-1, 2);
  return jacobi(n, half, half) * (Rational(1) / binomial(n + half, n));
}

Poly chebyshev_u(unsigned n) {
  // U_n = (n+1) P_n^(1/2,1/2) / P_n^(1/2,1/2)(1)
  const Rational half(1, 2);
  return jacobi(n, half, half) * (Rational(n + 1) / binomial(n + half, n));
}

std::vector<Rational> values_at(const FamilySpec& spec, unsigned n_max, const Rational& x) {
  std::vector<Rational> v;
  v.reserve(n_max + 1);
  v.emplace_back(1);
  Rational prev = 0;
  for (unsigned k = 0; k < n_max; ++k) {
    const RecurrenceStep s = spec.recurrence(k);
    Rational next = (s.a * x + s.b) * v[k];
    if (k > 0) next -= s.c * prev;
    prev = v[k];
    v.push_back(std::move(next));
  }
  return v;
}

std::vector<RealMP> values_at(const FamilySpec& spec, unsigned n_max, const RealMP& x) {
  const int w = x.digits();
  std::vector<RealMP> v;
  v.reserve(n_max + 1);
  v.emplace_back(1L, w);
  for (unsigned k = 0; k < n_max; ++k) {
    const RecurrenceStep s = spec.recurrence(k);
    RealMP next = (RealMP(s.a, w) * x + RealMP(s.b, w)) * v[k];
    if (k > 0) next -= RealMP(s.c, w) * v[k - 1];
    v.push_back(std::move(next));
  }
  return v;
}

ExactScalar norm_squared_exact(const FamilySpec& spec, unsigned n) {
  using Kind = Transcendental::Kind;
  switch (spec.family()) {
    case Family::laguerre: {
      // Gamma(n+alpha+1)/n! = Gamma(alpha+1) (alpha+1)_n / n!
      const Rational& alpha = spec.param();
      Rational r = pochhammer(alpha + 1, n) / Rational(factorial(n));
      if (is_integer(alpha)) return {r * Rational(factorial(alpha.get_num().get_ui())), {}};
      return {r, Transcendental(Kind::gamma, alpha + 1)};
    }
    case Family::hermite:
      return {Rational(pow2(n) * factorial(n)), Transcendental(Kind::sqrt_pi)};
    case Family::gegenbauer: {
      // sqrt(pi) Gamma(lambda+1/2)/Gamma(lambda) * (2 lambda)_n / (n! (n+lambda))
      const Rational& lambda = spec.param();
      if (lambda == 0)
        throw Error(ErrorKind::domain, "Gegenbauer norm undefined at lambda = 0");
      Rational r = pochhammer(2 * lambda, n) / (Rational(factorial(n)) * (n + lambda));
      return {r, Transcendental(Kind::gegenbauer_norm, lambda)};
    }
    case Family::legendre: return {Rational(2, 2 * n + 1), {}};
    case Family::chebyshev_t: return {n == 0 ? Rational(1) : Rational(1, 2), Transcendental(Kind::pi)};
    case Family::chebyshev_u: return {Rational(1, 2), Transcendental(Kind::pi)};
    case Family::jacobi: break;
  }
  throw Error(ErrorKind::domain, "no exact norm form for the Jacobi family");
}

RealMP norm_squared(const FamilySpec& spec, unsigned n, int digits) {
  if (spec.family() != Family::jacobi) return norm_squared_exact(spec, n).evaluate(digits);
  const int w = digits + 10;
  const Rational& a = spec.param(0);
  const Rational& b = spec.param(1);
  RealMP two_pow = pow(RealMP(2L, w), RealMP(a + b + 1, w));
  RealMP num = two_pow * gamma(a + n + 1, w) * gamma(b + n + 1, w);
  RealMP den(w);
  if (n == 0)
    den = gamma(a + b + 2, w);
  else
    den = RealMP(2 * Rational(n) + a + b + 1, w) * gamma(a + b + n + 1, w) *
          RealMP(factorial(n), w);
  return (num / den).with_digits(digits);
}

CarlitzSides carlitz_product(unsigned n, const Rational& alpha) {
  if (n < 1) throw Error(ErrorKind::domain, "Carlitz product needs n >= 1");
  require_greater(alpha, -1, "alpha");
  CarlitzSides sides;
  sides.product = laguerre(n, alpha) * laguerre(n - 1, alpha + 1);

  // Gamma(1+a+n)/Gamma(1+a+r) = (1+a+r)_{n-r}
  const Rational prefactor = Rational(1) / Rational(pow2(2 * n) * factorial(n));
  for (unsigned r = 1; r <= n; ++r) {
    Rational w = Rational(factorial(2 * r) * factorial(2 * (n - r))) /
                 Rational(factorial(r) * factorial(n - r) * factorial(n - r));
    w *= pochhammer(1 + alpha + r, n - r) * prefactor;
    sides.expansion += scale_argument(laguerre(2 * r - 1, 2 * alpha + 1), 2) * w;
  }
  return sides;
}

}  // namespace gibbs
