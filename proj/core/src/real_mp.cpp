#include "gibbs/real_mp.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "gibbs/error.hpp"

namespace gibbs {

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) digits = 1;
  // log2(10) = 3.3219...; four spare bits cover the rounding of the last digit.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 4;
}

RealMP::RealMP(int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

RealMP::RealMP(long value, int digits) : RealMP(digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

RealMP::RealMP(const Rational& value, int digits) : RealMP(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

RealMP::RealMP(const BigInt& value, int digits) : RealMP(digits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

RealMP RealMP::parse(std::string_view text, int digits) {
  RealMP r(digits);
  std::string s(text);
  if (mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw Error(ErrorKind::domain, "cannot parse real '" + s + "'");
  return r;
}

RealMP::RealMP(const RealMP& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

RealMP::RealMP(RealMP&& other) noexcept : digits_(other.digits_) {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

RealMP& RealMP::operator=(const RealMP& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

RealMP& RealMP::operator=(RealMP&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

RealMP::~RealMP() { mpfr_clear(value_); }

RealMP RealMP::with_digits(int digits) const {
  RealMP r(digits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

Rational RealMP::to_rational() const {
  if (!is_finite()) throw Error(ErrorKind::domain, "non-finite value has no rational form");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string RealMP::to_string(int significant) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  significant = std::max(significant, 2);  // mpfr_get_str wants n >= 2

  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant), value_, MPFR_RNDN),
      mpfr_free_str);
  std::string digits(raw.get());
  std::string sign_prefix;
  if (digits.front() == '-') {
    sign_prefix = "-";
    digits.erase(0, 1);
  }

  // value = 0.d1 d2 ... dS * 10^exp10
  const long n = static_cast<long>(digits.size());
  std::string body;
  if (exp10 >= -5 && exp10 <= 6) {
    if (exp10 <= 0) {
      body = "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
    } else if (exp10 < n) {
      body = digits.substr(0, static_cast<size_t>(exp10)) + "." +
             digits.substr(static_cast<size_t>(exp10));
    } else {
      body = digits + std::string(static_cast<size_t>(exp10 - n), '0');
    }
  } else {
    body = digits.substr(0, 1);
    if (n > 1) body += "." + digits.substr(1);
    body += "e" + std::to_string(static_cast<long>(exp10) - 1);
  }
  return sign_prefix + body;
}

void RealMP::widen_to(const RealMP& other) {
  if (mpfr_get_prec(other.value_) > mpfr_get_prec(value_))
    mpfr_prec_round(value_, mpfr_get_prec(other.value_), MPFR_RNDN);
  digits_ = std::max(digits_, other.digits_);
}

RealMP& RealMP::operator+=(const RealMP& rhs) {
  widen_to(rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

RealMP& RealMP::operator-=(const RealMP& rhs) {
  widen_to(rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

RealMP& RealMP::operator*=(const RealMP& rhs) {
  widen_to(rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

RealMP& RealMP::operator/=(const RealMP& rhs) {
  widen_to(rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

RealMP RealMP::operator-() const {
  RealMP r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const RealMP& a, const RealMP& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {

template <class Fn>
RealMP unary(const RealMP& x, Fn fn) {
  RealMP r(x.digits());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

RealMP abs(const RealMP& x) { return unary(x, mpfr_abs); }
RealMP sqrt(const RealMP& x) { return unary(x, mpfr_sqrt); }
RealMP exp(const RealMP& x) { return unary(x, mpfr_exp); }
RealMP log(const RealMP& x) { return unary(x, mpfr_log); }
RealMP sin(const RealMP& x) { return unary(x, mpfr_sin); }
RealMP cos(const RealMP& x) { return unary(x, mpfr_cos); }

RealMP pow(const RealMP& base, const RealMP& exponent) {
  RealMP r(std::max(base.digits(), exponent.digits()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

RealMP ldexp(const RealMP& x, long e) {
  RealMP r(x);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

double agreeing_digits(const RealMP& a, const RealMP& b) {
  const double cap = std::min(a.digits(), b.digits());
  RealMP diff = abs(a - b);
  if (diff.is_zero()) return cap;
  RealMP scale = abs(a);
  if (scale.is_zero()) scale = abs(b);
  if (scale.is_zero()) return cap;
  RealMP rel = diff / scale;
  RealMP l = log(rel);
  double d = -l.to_double() / std::log(10.0);
  return std::min(d, cap);
}

}  // namespace gibbs
