#include "gibbs/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "gibbs/error.hpp"

namespace gibbs {

namespace {

constexpr int kGuardDigits = 20;

void require_precision(int digits) {
  if (digits < 10)
    throw Error(ErrorKind::domain, "precision must be at least 10 digits, got " +
                                       std::to_string(digits));
}

class ConstantCache {
 public:
  template <class Compute>
  RealMP get(int digits, Compute compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(digits); it != values_.end()) return it->second;
    }
    RealMP value = compute(digits);
    std::unique_lock lock(mutex_);
    return values_.try_emplace(digits, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, RealMP> values_;
};

ConstantCache& pi_cache() {
  static ConstantCache cache;
  return cache;
}
ConstantCache& e_cache() {
  static ConstantCache cache;
  return cache;
}
ConstantCache& sqrt_pi_cache() {
  static ConstantCache cache;
  return cache;
}

// Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)  for k >= 0,
// Gamma(1/2 - m) = (-4)^m m! / (2m)! sqrt(pi)  for m >= 1.
Rational half_integer_gamma_over_sqrt_pi(const Rational& a) {
  Rational k = a - Rational(1, 2);
  const BigInt& kz = k.get_num();
  if (kz >= 0) {
    unsigned long kk = kz.get_ui();
    BigInt four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, kk);
    return make_rational(factorial(2 * kk), four_k * factorial(kk));
  }
  unsigned long m = BigInt(-kz).get_ui();
  BigInt four_m;
  mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
  Rational r = make_rational(four_m * factorial(m), factorial(2 * m));
  return (m % 2 == 1) ? Rational(-r) : r;
}

}  // namespace

RealMP pi(int digits) {
  return pi_cache().get(digits, [](int d) {
    RealMP r(d);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
  });
}

RealMP euler_e(int digits) {
  return e_cache().get(digits, [](int d) {
    RealMP one(1L, d);
    return exp(one);
  });
}

RealMP sqrt_pi(int digits) {
  return sqrt_pi_cache().get(digits, [](int d) { return sqrt(pi(d)); });
}

RealMP gamma(const Rational& a, int digits) {
  require_precision(digits);
  if (is_integer(a)) {
    if (a <= 0) throw Error(ErrorKind::pole, "Gamma has a pole at " + to_string(a));
    return RealMP(factorial(a.get_num().get_ui() - 1), digits);
  }
  if (is_half_integer(a)) {
    const int w = digits + kGuardDigits;
    RealMP r = RealMP(half_integer_gamma_over_sqrt_pi(a), w) * sqrt_pi(w);
    return r.with_digits(digits);
  }
  const int w = digits + kGuardDigits;
  RealMP x(a, w);
  RealMP r(w);
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r.with_digits(digits);
}

RealMP upper_incomplete_gamma_at_1(const Rational& a, int digits) {
  require_precision(digits);
  if (a <= 0)
    throw Error(ErrorKind::domain,
                "upper incomplete Gamma needs a > 0, got a = " + to_string(a));

  if (is_integer(a)) {
    // Gamma(n+1, 1) = e^-1 sum_{k=0}^{n} n!/k!, an integer over e.
    const unsigned long n = a.get_num().get_ui() - 1;
    BigInt sum = 0, term = 1;  // term = n!/k! walking k from n down to 0
    for (unsigned long k = n + 1; k-- > 0;) {
      sum += term;
      term *= k;
    }
    const int w = digits + kGuardDigits;
    return (RealMP(sum, w) / euler_e(w)).with_digits(digits);
  }

  // Gamma(a, 1) = Gamma(a) - gamma(a, 1) with
  // gamma(a, 1) = e^-1 sum_{k>=0} 1 / (a (a+1) ... (a+k)).
  int extra = 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const int w = digits + kGuardDigits + extra;
    RealMP av(a, w);
    RealMP term = RealMP(1L, w) / av;
    RealMP sum = term;
    RealMP threshold = ldexp(RealMP(1L, w), -static_cast<long>(bits_for_digits(w + 5)));
    for (long k = 1; abs(term) > threshold * abs(sum); ++k) {
      term /= av + RealMP(k, w);
      sum += term;
    }
    RealMP lower = sum / euler_e(w);
    RealMP full = gamma(a, w);
    RealMP upper = full - lower;
    // Digits lost to cancellation in the subtraction.
    const long lost_bits = std::max(full.exponent2(), lower.exponent2()) - upper.exponent2();
    const int lost = static_cast<int>(std::ceil(lost_bits * 0.30103));
    if (lost <= kGuardDigits - 5 + extra) return upper.with_digits(digits);
    extra = lost + 5;
  }
  throw Error(ErrorKind::precision_exhausted,
              "upper incomplete Gamma lost too many digits at a = " + to_string(a));
}

RealMP gibbs_constant(int digits) {
  require_precision(digits);
  const int w = digits + 10;
  const RealMP p = pi(w);
  const RealMP p2 = p * p;
  const RealMP threshold = ldexp(RealMP(1L, w), -static_cast<long>(bits_for_digits(digits + 10)));
  // Si(pi) = sum_k (-1)^k pi^(2k+1) / ((2k+1) (2k+1)!)
  RealMP power = p;  // pi^(2k+1) / (2k+1)!
  RealMP sum(w);
  for (long k = 0;; ++k) {
    RealMP term = power / RealMP(2 * k + 1, w);
    if (abs(term) < threshold) break;
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    power = power * p2 / RealMP((2 * k + 2) * (2 * k + 3), w);
  }
  RealMP two(2L, w);
  return (two * sum / p).with_digits(digits);
}

RealMP Transcendental::evaluate(int digits) const {
  const int w = std::max(digits, 10) + 10;
  RealMP r(w);
  switch (kind_) {
    case Kind::one: r = RealMP(1L, w); break;
    case Kind::pi: r = pi(w); break;
    case Kind::sqrt_pi: r = sqrt_pi(w); break;
    case Kind::inv_sqrt_pi: r = RealMP(1L, w) / sqrt_pi(w); break;
    case Kind::gamma: r = gamma(param_, w); break;
    case Kind::inv_e_gamma: r = RealMP(1L, w) / (euler_e(w) * gamma(param_, w)); break;
    case Kind::incomplete_gamma_ratio:
      r = upper_incomplete_gamma_at_1(param_, w) / gamma(param_, w);
      break;
    case Kind::gegenbauer_weight:
      r = gamma(param_, w) / (sqrt_pi(w) * gamma(param_ + Rational(1, 2), w));
      break;
    case Kind::gegenbauer_norm:
      r = sqrt_pi(w) * gamma(param_ + Rational(1, 2), w) / gamma(param_, w);
      break;
  }
  return r.with_digits(digits);
}

std::string Transcendental::describe() const {
  const std::string p = to_string(param_);
  switch (kind_) {
    case Kind::one: return "1";
    case Kind::pi: return "pi";
    case Kind::sqrt_pi: return "sqrt(pi)";
    case Kind::inv_sqrt_pi: return "1/sqrt(pi)";
    case Kind::gamma: return "Gamma(" + p + ")";
    case Kind::inv_e_gamma: return "1/(e*Gamma(" + p + "))";
    case Kind::incomplete_gamma_ratio: return "Gamma(" + p + ",1)/Gamma(" + p + ")";
    case Kind::gegenbauer_weight:
      return "Gamma(" + p + ")/(sqrt(pi)*Gamma(" + p + "+1/2))";
    case Kind::gegenbauer_norm:
      return "sqrt(pi)*Gamma(" + p + "+1/2)/Gamma(" + p + ")";
  }
  return "?";
}

RealMP ExactScalar::evaluate(int digits) const {
  const int w = digits + 10;
  return (RealMP(rational, w) * factor.evaluate(w)).with_digits(digits);
}

}  // namespace gibbs
