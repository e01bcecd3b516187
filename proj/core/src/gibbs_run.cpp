#include "gibbs/gibbs_run.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <optional>

#include "gibbs/error.hpp"
#include "gibbs/special.hpp"

namespace gibbs {

namespace {

constexpr int kGuard = 10;

RealMP value_at(const ExactScalar& constant, const Poly& antideriv, const RealMP& x, int w) {
  return constant.evaluate(w) * eval_mp(antideriv, x.with_digits(w));
}

// First critical point below the jump, restricted to the support x > 0.
std::optional<Bracket> laguerre_below_bracket(const Poly& q, const Rational& window) {
  Bracket b;
  try {
    b = bracket_first_root(q, 1, Direction::down, window);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::no_root_found) throw;
    return std::nullopt;
  }
  if (b.high <= 0) return std::nullopt;
  if (b.low < 0) {
    // One root in [low, high]: it is positive only if Q changes sign on [0, high].
    const IntegerPoly ip(q);
    const int s0 = ip.sign_at(Rational(0));
    if (s0 == 0 || s0 == ip.sign_at(b.high)) return std::nullopt;
    b.low = 0;
  }
  return b;
}

void finish(GibbsRow& row, int w) {
  const RealMP g = gibbs_constant(w);
  if (row.overshoot) row.gamma_error = abs(*row.overshoot - g).with_digits(row.digits);
}

// One-sided pipeline shared by Hermite and Gegenbauer: the partial sum is
// constant * integral_0^x quotient, with value 0 at x = 0.
GibbsRow odd_overshoot(const FamilySpec& spec, unsigned half_degree, int digits,
                       const Rational& window) {
  const int w = digits + kGuard;
  const CDForm cd = cd_derivative(spec, JumpKind::sign, half_degree);
  const Poly antideriv = antiderivative(cd.quotient);
  const Bracket b = bracket_first_root(cd.quotient, 0, Direction::up, window);

  GibbsRow row{.family = spec,
               .n = half_degree,
               .digits = digits,
               .x_plus = refine_root(cd.quotient, b, digits, Side::positive)};
  row.value_plus = value_at(cd.constant, antideriv, row.x_plus.refined, w).with_digits(digits);
  row.overshoot = row.value_plus;
  finish(row, w);
  return row;
}

// B_m = binom(2m, m) for m = 0..n.
std::vector<BigInt> central_binomials(unsigned n) {
  std::vector<BigInt> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    b[m] = b[m - 1] * (4 * m - 2);
    mpz_divexact_ui(b[m].get_mpz_t(), b[m].get_mpz_t(), m);
  }
  return b;
}

RealMP conjecture_direct(const Rational& alpha, unsigned n, int digits) {
  return partial_sum_eval(laguerre_coefficients(alpha, n), Rational(1), digits);
}

// s_0 - 1/(e Gamma(1+alpha)) sum_j 4^-j/j sum_r B_r B_{j-r} r!/(1+alpha)_r L_{2r-1}^(2alpha+1)(2)
RealMP conjecture_carlitz(const Rational& alpha, unsigned n, int digits) {
  const ExpansionSeries head = laguerre_coefficients(alpha, 0);
  if (n == 0) return head.coeffs[0].evaluate(digits);

  const std::vector<BigInt> binoms = central_binomials(n);
  const std::vector<Rational> l2 =
      values_at(FamilySpec::laguerre(2 * alpha + 1), 2 * n - 1, Rational(2));
  std::vector<Rational> m(n + 1);
  Rational ratio = 1;  // r! / (1+alpha)_r
  for (unsigned r = 1; r <= n; ++r) {
    ratio *= Rational(r) / (alpha + r);
    m[r] = ratio * l2[2 * r - 1];
  }

  int extra = 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const int w = digits + 30 + extra;
    std::vector<RealMP> bf, p(n + 1, RealMP(w));
    bf.reserve(n + 1);
    for (const auto& b : binoms) bf.emplace_back(b, w);
    for (unsigned r = 1; r <= n; ++r) p[r] = bf[r] * RealMP(m[r], w);

    long worst = 0;  // bits lost to cancellation in the inner sums
    RealMP total(w), four_pow(1L, w);
    for (unsigned j = 1; j <= n; ++j) {
      four_pow = ldexp(four_pow, 2);
      RealMP inner(w);
      long top = LONG_MIN;
      for (unsigned r = 1; r <= j; ++r) {
        RealMP t = bf[j - r] * p[r];
        if (!t.is_zero()) top = std::max(top, t.exponent2());
        inner += t;
      }
      if (!inner.is_zero() && top != LONG_MIN) worst = std::max(worst, top - inner.exponent2());
      total += inner / (four_pow * RealMP(static_cast<long>(j), w));
    }
    const int lost = static_cast<int>(std::ceil(worst * 0.30103));
    if (lost <= 20 + extra) {
      const ExactScalar scale{-1, Transcendental(Transcendental::Kind::inv_e_gamma, alpha + 1)};
      const RealMP v = head.coeffs[0].evaluate(w) + scale.evaluate(w) * total;
      return v.with_digits(digits);
    }
    extra = lost + 10;
  }
  throw Error(ErrorKind::precision_exhausted, "Carlitz sum lost too many digits at n = " +
                                                  std::to_string(n));
}

RealMP pow_rational(const RealMP& base, const Rational& e) {
  return pow(base, RealMP(e, base.digits()));
}

}  // namespace

GibbsRow laguerre_overshoot(const Rational& alpha, unsigned n, int digits) {
  if (n < 3)
    throw Error(ErrorKind::degenerate,
                "the Laguerre overshoot needs n >= 3, got n = " + std::to_string(n));
  const FamilySpec spec = FamilySpec::laguerre(alpha);
  const int w = digits + kGuard;
  const CDForm cd = cd_derivative(spec, JumpKind::step_at_one, n);
  // Antiderivative normalised to vanish at the jump, so the partial sum is
  // Pi(1) + constant * B(x).
  Poly antideriv = antiderivative(cd.quotient);
  antideriv -= Poly::constant(eval_rational(antideriv, 1));
  const RealMP at_jump = partial_sum_eval(laguerre_coefficients(alpha, n), Rational(1), w);

  const Rational window = laguerre_window_hint(n);
  const Bracket above = bracket_first_root(cd.quotient, 1, Direction::up, window);
  GibbsRow row{.family = spec,
               .n = n,
               .digits = digits,
               .x_plus = refine_root(cd.quotient, above, digits, Side::above_jump)};
  row.value_plus =
      (at_jump + value_at(cd.constant, antideriv, row.x_plus.refined, w)).with_digits(digits);
  row.u_plus = u_map(row.x_plus.refined, n);

  if (const auto below = laguerre_below_bracket(cd.quotient, window))
    row.x_minus = refine_root(cd.quotient, *below, digits, Side::below_jump);
  if (row.x_minus) {
    row.value_minus =
        (at_jump + value_at(cd.constant, antideriv, row.x_minus->refined, w)).with_digits(digits);
    row.u_minus = u_map(row.x_minus->refined, n);
    row.overshoot = (row.value_plus - *row.value_minus).with_digits(digits);
  }
  finish(row, w);
  return row;
}

GibbsRow hermite_overshoot(unsigned half_degree, int digits) {
  if (half_degree < 1)
    throw Error(ErrorKind::degenerate, "the Hermite overshoot needs N >= 1, got N = 0");
  GibbsRow row =
      odd_overshoot(FamilySpec::hermite(), half_degree, digits, hermite_window_hint(half_degree));
  const int w = row.x_plus.refined.digits();
  row.u_plus = row.x_plus.refined * sqrt(RealMP(static_cast<long>(4 * half_degree + 2), w));
  return row;
}

GibbsRow gegenbauer_overshoot(const Rational& lambda, unsigned half_degree, int digits) {
  if (half_degree < 1)
    throw Error(ErrorKind::degenerate, "the Gegenbauer overshoot needs n >= 1, got n = 0");
  return odd_overshoot(FamilySpec::gegenbauer(lambda), half_degree, digits,
                       gegenbauer_window_hint(half_degree, lambda));
}

std::vector<RootEnclosure> critical_points(const FamilySpec& spec, unsigned n, int digits) {
  std::vector<RootEnclosure> out;
  switch (spec.family()) {
    case Family::laguerre: {
      if (n < 1) throw Error(ErrorKind::degenerate, "Laguerre critical points need n >= 1");
      const Poly q = cd_derivative(spec, JumpKind::step_at_one, n).quotient;
      const Rational window = laguerre_window_hint(n);
      out.push_back(refine_root(q, bracket_first_root(q, 1, Direction::up, window), digits,
                                Side::above_jump));
      if (const auto below = laguerre_below_bracket(q, window))
        out.push_back(refine_root(q, *below, digits, Side::below_jump));
      return out;
    }
    case Family::hermite:
    case Family::gegenbauer: {
      if (n < 1) throw Error(ErrorKind::degenerate, "critical points of sgn expansions need n >= 1");
      const Poly q = cd_derivative(spec, JumpKind::sign, n).quotient;
      const Rational window = spec.family() == Family::hermite
                                  ? hermite_window_hint(n)
                                  : gegenbauer_window_hint(n, spec.param());
      out.push_back(
          refine_root(q, bracket_first_root(q, 0, Direction::up, window), digits, Side::positive));
      return out;
    }
    default: break;
  }
  throw Error(ErrorKind::domain, "no jump expansion for the " + spec.name() + " family");
}

const char* to_string(ConjecturePath path) {
  return path == ConjecturePath::direct_sum ? "direct_sum" : "carlitz";
}

ConjectureRow conjecture_at_1(const Rational& alpha, unsigned n, int digits, ConjecturePath via) {
  FamilySpec::laguerre(alpha);  // domain check
  ConjectureRow row{alpha, n, digits, via, RealMP(digits)};
  row.value_at_1 = via == ConjecturePath::direct_sum ? conjecture_direct(alpha, n, digits)
                                                     : conjecture_carlitz(alpha, n, digits);
  return row;
}

Rational triple_sum_inner(unsigned j) {
  const std::vector<BigInt> binoms = central_binomials(j);
  const std::vector<Rational> l2 = values_at(FamilySpec::laguerre(1), 2 * j, Rational(2));
  Rational sum = 0;
  for (unsigned r = 1; r <= j; ++r) sum += Rational(binoms[r] * binoms[j - r]) * l2[2 * r - 1];
  return sum;
}

RealMP triple_sum_partial(unsigned J, int digits) {
  if (J < 1) throw Error(ErrorKind::domain, "triple sum needs J >= 1, got J = 0");
  const int w = digits + 20;
  const std::vector<BigInt> binoms = central_binomials(J);
  const std::vector<Rational> l2 = values_at(FamilySpec::laguerre(1), 2 * J - 1, Rational(2));

  // L_{2r-1}^(1)(2) has denominator dividing (2r-1)!, so (2J-1)! clears all
  // of them and each inner sum becomes an integer convolution.
  const BigInt den = factorial(2 * J - 1);
  std::vector<BigInt> p(J + 1);
  for (unsigned r = 1; r <= J; ++r) {
    const Rational& v = l2[2 * r - 1];
    BigInt num = v.get_num() * den;
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), v.get_den_mpz_t());
    p[r] = binoms[r] * num;
  }

  RealMP total(w);
  const RealMP den_mp(den, w);
  RealMP four_pow(1L, w);
  BigInt inner;
  for (unsigned j = 1; j <= J; ++j) {
    inner = 0;
    for (unsigned r = 1; r <= j; ++r)
      mpz_addmul(inner.get_mpz_t(), binoms[j - r].get_mpz_t(), p[r].get_mpz_t());
    four_pow = ldexp(four_pow, 2);
    total += RealMP(inner, w) / (den_mp * four_pow * RealMP(static_cast<long>(j), w));
  }
  return total.with_digits(digits);
}

const char* to_string(AsymptoticKind kind) {
  switch (kind) {
    case AsymptoticKind::glp_sine: return "glp_sine";
    case AsymptoticKind::hermite_sine: return "hermite_sine";
    case AsymptoticKind::dn_alpha: return "dn_alpha";
    case AsymptoticKind::final_derivative: return "final_derivative";
  }
  return "?";
}

AsymptoticKind parse_asymptotic_kind(std::string_view name) {
  for (auto k : {AsymptoticKind::glp_sine, AsymptoticKind::hermite_sine, AsymptoticKind::dn_alpha,
                 AsymptoticKind::final_derivative})
    if (name == to_string(k)) return k;
  throw Error(ErrorKind::domain, "unknown asymptotic comparison '" + std::string(name) + "'");
}

AsymptoticReport asymptotic_compare(AsymptoticKind what, const AsymptoticParams& params,
                                    int digits) {
  if (digits < 10)
    throw Error(ErrorKind::domain, "precision must be at least 10 digits, got " +
                                       std::to_string(digits));
  const int w = digits + kGuard;
  const Rational& alpha = params.alpha;
  const unsigned n = params.n;
  const RealMP one(1L, w), two(2L, w), half(Rational(1, 2), w);
  const RealMP x(params.x, w);
  const RealMP nr(static_cast<long>(n), w);
  const RealMP p = pi(w);
  RealMP exact(w), approx(w);

  switch (what) {
    case AsymptoticKind::glp_sine: {
      FamilySpec::laguerre(alpha);
      if (params.x <= 0) throw Error(ErrorKind::domain, "glp_sine needs x > 0");
      exact = RealMP(values_at(FamilySpec::laguerre(alpha), n, params.x).back(), w);
      const RealMP phase = two * sqrt(nr * x) - RealMP(alpha, w) * p / two + p / RealMP(4L, w);
      approx = pow_rational(nr, alpha / 2 - Rational(1, 4)) *
               pow_rational(x, -alpha / 2 - Rational(1, 4)) * exp(x / two) * sin(phase) /
               sqrt_pi(w);
      break;
    }
    case AsymptoticKind::hermite_sine: {
      // H_{2N+1}(x) ~ (-1)^N N! 2^(2N+1) e^(x^2/2) sin(x sqrt(4N+2)) / sqrt(pi)
      exact = RealMP(values_at(FamilySpec::hermite(), 2 * n + 1, params.x).back(), w);
      BigInt scale = factorial(n);
      mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 2 * n + 1);
      if (n % 2 == 1) scale = -scale;
      approx = RealMP(scale, w) * exp(x * x / two) *
               sin(x * sqrt(RealMP(static_cast<long>(4 * n + 2), w))) / sqrt_pi(w);
      break;
    }
    case AsymptoticKind::dn_alpha: {
      // d_n e n^alpha = n! n^alpha / Gamma(n + alpha + 1)
      FamilySpec::laguerre(alpha);
      if (n < 1) throw Error(ErrorKind::domain, "dn_alpha needs n >= 1");
      exact = RealMP(factorial(n), w) * pow_rational(nr, alpha) / gamma(alpha + n + 1, w);
      approx = one;
      break;
    }
    case AsymptoticKind::final_derivative: {
      FamilySpec::laguerre(alpha);
      if (params.x <= 0 || params.x == 1)
        throw Error(ErrorKind::domain, "final_derivative needs x > 0 and x != 1");
      const CDForm cd = cd_derivative(FamilySpec::laguerre(alpha), JumpKind::step_at_one, n);
      exact = cd.constant.evaluate(w) * RealMP(eval_rational(cd.quotient, params.x), w);
      const RealMP a = p / two * (RealMP(alpha, w) - half);
      const RealMP sx = sqrt(x);
      const RealMP sn = sqrt(nr);
      const RealMP bracket = sin(two * sn * (sx - one)) -
                             (sx - one) * cos(two * sqrt(nr * x) - a) * sin(two * sn - a);
      const RealMP prefactor = pow_rational(one - one / nr, (1 + 2 * alpha) / 4) *
                               exp((x - one) / two) /
                               (p * pow_rational(x, (2 * alpha + 3) / 4) * (x - one));
      approx = prefactor * bracket;
      break;
    }
  }

  const RealMP threshold = pow(RealMP(10L, w), RealMP(-static_cast<long>(digits / 2), w));
  if (abs(exact) < threshold)
    throw Error(ErrorKind::ill_conditioned,
                std::string(to_string(what)) + ": exact value is below 1e-" +
                    std::to_string(digits / 2) + ", relative error is meaningless there");
  const RealMP rel = abs(exact - approx) / abs(exact);
  return {what, params, digits, exact.with_digits(digits), approx.with_digits(digits),
          rel.with_digits(digits)};
}

}  // namespace gibbs
