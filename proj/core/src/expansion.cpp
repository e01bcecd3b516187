#include "gibbs/expansion.hpp"

#include <algorithm>

#include "gibbs/error.hpp"

namespace gibbs {

namespace {

using Kind = Transcendental::Kind;

// 1 / (e Gamma(a)) with the Gamma folded into the rational when a is a
// positive integer, so integer alpha leaves a bare 1/e.
ExactScalar inv_e_gamma_scalar(Rational r, const Rational& a) {
  if (is_integer(a)) {
    r /= Rational(factorial(a.get_num().get_ui() - 1));
    return {r, Transcendental(Kind::inv_e_gamma, 1)};
  }
  return {r, Transcendental(Kind::inv_e_gamma, a)};
}

// (2 mu)_m / (m! (m + mu)): the rational part of ||C_m^(mu)||^2.
Rational gegenbauer_norm_rational(const Rational& mu, unsigned m) {
  return pochhammer(2 * mu, m) / (Rational(factorial(m)) * (m + mu));
}

void require_nonzero_lambda(const Rational& lambda) {
  if (lambda == 0)
    throw Error(ErrorKind::domain, "lambda must be nonzero for the sgn expansion, got lambda = 0");
}

}  // namespace

const char* to_string(JumpKind kind) {
  return kind == JumpKind::step_at_one ? "step_at_one" : "sign";
}

ExpansionSeries laguerre_coefficients(const Rational& alpha, unsigned n) {
  ExpansionSeries s{FamilySpec::laguerre(alpha), JumpKind::step_at_one, n, {}};
  s.coeffs.reserve(n + 1);

  if (is_integer(alpha)) {
    // Gamma(m+1, 1) / m! = e^-1 sum_{k<=m} 1/k!
    const unsigned long m = alpha.get_num().get_ui();
    Rational sum = 0, inv_fact = 1;
    for (unsigned long k = 0; k <= m; ++k) {
      sum += inv_fact;
      inv_fact /= k + 1;
    }
    s.coeffs.push_back({sum, Transcendental(Kind::inv_e_gamma, 1)});
  } else {
    s.coeffs.push_back({1, Transcendental(Kind::incomplete_gamma_ratio, alpha + 1)});
  }
  if (n == 0) return s;

  // s_j = -(1/e) L_{j-1}^(alpha+1)(1) (j-1)! / (Gamma(alpha+2) (alpha+2)_{j-1})
  const std::vector<Rational> at_one =
      values_at(FamilySpec::laguerre(alpha + 1), n - 1, Rational(1));
  Rational ratio = 1;  // (j-1)! / (alpha+2)_{j-1}
  for (unsigned j = 1; j <= n; ++j) {
    if (j > 1) ratio *= Rational(j - 1) / (alpha + j);
    s.coeffs.push_back(inv_e_gamma_scalar(-at_one[j - 1] * ratio, alpha + 2));
  }
  return s;
}

ExpansionSeries hermite_coefficients(unsigned half_degree) {
  const unsigned degree = 2 * half_degree + 1;
  ExpansionSeries s{FamilySpec::hermite(), JumpKind::sign, degree, {}};
  s.coeffs.reserve(degree + 1);
  // s_j = 2 H_{j-1}(0) / (2^j j!) / sqrt(pi) for odd j
  const std::vector<Rational> at_zero = values_at(s.spec, degree, Rational(0));
  const Transcendental factor(Kind::inv_sqrt_pi);
  Rational inv_norm = 1;  // 1 / (2^j j!)
  for (unsigned j = 0; j <= degree; ++j) {
    if (j > 0) inv_norm /= 2 * j;
    if (j % 2 == 0)
      s.coeffs.push_back({0, factor});
    else
      s.coeffs.push_back({2 * at_zero[j - 1] * inv_norm, factor});
  }
  return s;
}

ExpansionSeries gegenbauer_coefficients(const Rational& lambda, unsigned half_degree) {
  require_nonzero_lambda(lambda);
  const unsigned degree = 2 * half_degree + 1;
  ExpansionSeries s{FamilySpec::gegenbauer(lambda), JumpKind::sign, degree, {}};
  s.coeffs.reserve(degree + 1);
  // s_{2k+1} = (1/lambda) C_{2k}^(mu)(0) / ||C_{2k}^(mu)||^2, mu = lambda + 1
  const Rational mu = lambda + 1;
  const std::vector<Rational> at_zero =
      values_at(FamilySpec::gegenbauer(mu), degree - 1, Rational(0));
  const Transcendental factor(Kind::gegenbauer_weight, mu);
  for (unsigned j = 0; j <= degree; ++j) {
    if (j % 2 == 0) {
      s.coeffs.push_back({0, factor});
      continue;
    }
    const unsigned m = j - 1;
    s.coeffs.push_back({at_zero[m] / (lambda * gegenbauer_norm_rational(mu, m)), factor});
  }
  return s;
}

CDForm cd_derivative(const FamilySpec& spec, JumpKind kind, unsigned n) {
  const bool step = kind == JumpKind::step_at_one;
  if (step != (spec.family() == Family::laguerre) ||
      (!step && spec.family() != Family::hermite && spec.family() != Family::gegenbauer))
    throw Error(ErrorKind::domain, std::string("jump function ") + to_string(kind) +
                                       " cannot be expanded in the " + spec.name() + " family");
  CDForm f;
  switch (spec.family()) {
    case Family::laguerre: {
      if (n < 1) throw Error(ErrorKind::domain, "Christoffel-Darboux form needs n >= 1, got n = 0");
      const Rational& alpha = spec.param();
      const Rational a1 = alpha + 1;
      const Poly p_prev = laguerre(n - 1, a1);
      const Poly p_n = laguerre(n, a1);
      const Rational prev_at_1 = eval_rational(p_prev, 1);
      const Rational n_at_1 = eval_rational(p_n, 1);
      f.numerator = p_n * prev_at_1 - p_prev * n_at_1;
      f.pivot = 1;
      // n! / Gamma(n+alpha+1) = n! / ((alpha+2)_{n-1} Gamma(alpha+2))
      const Rational r = Rational(factorial(n)) / pochhammer(alpha + 2, n - 1);
      f.constant = inv_e_gamma_scalar(-r, alpha + 2);
      break;
    }
    case Family::hermite: {
      f.numerator = hermite(2 * n + 1);
      f.pivot = 0;
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), 2, 2 * n);
      den *= factorial(n);
      f.constant = {make_rational(n % 2 == 0 ? 1 : -1, den), Transcendental(Kind::inv_sqrt_pi)};
      break;
    }
    case Family::gegenbauer: {
      const Rational& lambda = spec.param();
      require_nonzero_lambda(lambda);
      const Rational mu = lambda + 1;
      const FamilySpec deriv = FamilySpec::gegenbauer(mu);
      f.numerator = gegenbauer(2 * n + 1, mu);
      f.pivot = 0;
      // F' = 2 K_{2n}(x, 0) for the kernel of C^(mu); only p_{2n}(0) survives.
      const Rational p_at_0 = values_at(deriv, 2 * n, Rational(0)).back();
      const Rational k_ratio = deriv.leading_coefficient(2 * n) / deriv.leading_coefficient(2 * n + 1);
      f.constant = {2 * k_ratio * p_at_0 / gegenbauer_norm_rational(mu, 2 * n),
                    Transcendental(Kind::gegenbauer_weight, mu)};
      break;
    }
    default: break;
  }
  f.quotient = divide_exact(f.numerator, f.pivot);
  return f;
}

std::vector<Transcendental> factors_of(const ExpansionSeries& series) {
  std::vector<Transcendental> out;
  for (const auto& c : series.coeffs)
    if (std::find(out.begin(), out.end(), c.factor) == out.end()) out.push_back(c.factor);
  return out;
}

RealMP partial_sum_eval(const ExpansionSeries& series, const RealMP& x, int digits) {
  const int w = digits + 30;
  const std::vector<RealMP> values = values_at(series.spec, series.degree, x.with_digits(w));
  const std::vector<Transcendental> factors = factors_of(series);
  RealMP total(w);
  for (const auto& factor : factors) {
    RealMP group(w);
    for (unsigned j = 0; j <= series.degree; ++j) {
      const ExactScalar& c = series.coeffs[j];
      if (c.rational == 0 || !(c.factor == factor)) continue;
      group += RealMP(c.rational, w) * values[j];
    }
    total += group * factor.evaluate(w);
  }
  return total.with_digits(digits);
}

RealMP partial_sum_eval(const ExpansionSeries& series, const Rational& x, int digits) {
  const int w = digits + 10;
  const std::vector<Rational> values = values_at(series.spec, series.degree, x);
  RealMP total(w);
  for (const auto& factor : factors_of(series)) {
    Rational group = 0;
    for (unsigned j = 0; j <= series.degree; ++j) {
      const ExactScalar& c = series.coeffs[j];
      if (c.rational != 0 && c.factor == factor) group += c.rational * values[j];
    }
    total += ExactScalar{group, factor}.evaluate(w);
  }
  return total.with_digits(digits);
}

Poly partial_sum_poly(const ExpansionSeries& series, const Transcendental& factor) {
  Poly sum, prev, cur = Poly::constant(1);
  for (unsigned j = 0; j <= series.degree; ++j) {
    const ExactScalar& c = series.coeffs[j];
    if (c.rational != 0 && c.factor == factor) sum += cur * c.rational;
    if (j == series.degree) break;
    const RecurrenceStep st = series.spec.recurrence(j);
    Poly next = cur * Poly{st.b, st.a};
    if (j > 0) next -= prev * st.c;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sum;
}

}  // namespace gibbs
