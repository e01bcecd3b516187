#include "gibbs/rational.hpp"

#include <cctype>
#include <string>

#include "gibbs/error.hpp"

namespace gibbs {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::not_divisible: return "not_divisible";
    case ErrorKind::no_root_found: return "no_root_found";
    case ErrorKind::multiple_roots: return "multiple_roots";
    case ErrorKind::precision_exhausted: return "precision_exhausted";
    case ErrorKind::ill_conditioned: return "ill_conditioned";
    case ErrorKind::degenerate: return "degenerate";
  }
  return "error";
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::domain, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error(ErrorKind::domain, "cannot parse rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_rational(text);

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    result = make_rational(BigInt(std::string(num), 10), BigInt(std::string(den), 10));
  } else {
    // Decimal with optional fraction and exponent.
    std::string_view mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mant = s.substr(0, e);
      auto ex = s.substr(e + 1);
      bool neg_exp = false;
      if (!ex.empty() && (ex.front() == '-' || ex.front() == '+')) {
        neg_exp = ex.front() == '-';
        ex.remove_prefix(1);
      }
      if (!all_digits(ex) || ex.size() > 6) bad_rational(text);
      exp10 = std::stol(std::string(ex));
      if (neg_exp) exp10 = -exp10;
    }
    std::string digits;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
      auto ip = mant.substr(0, dot);
      auto fp = mant.substr(dot + 1);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
          (ip.empty() && fp.empty()))
        bad_rational(text);
      digits = std::string(ip) + std::string(fp);
      exp10 -= static_cast<long>(fp.size());
    } else {
      if (!all_digits(mant)) bad_rational(text);
      digits = std::string(mant);
    }
    BigInt num(digits, 10);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    result = exp10 < 0 ? make_rational(num, scale) : Rational(num * scale);
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_half_integer(const Rational& q) { return q.get_den() == 2; }

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational pochhammer(const Rational& a, unsigned long k) {
  // Accumulate numerator and denominator separately; a single
  // canonicalization at the end is much cheaper than k of them.
  BigInt num = 1, den = 1;
  const BigInt& an = a.get_num();
  const BigInt& ad = a.get_den();
  for (unsigned long i = 0; i < k; ++i) {
    num *= an + ad * i;
    den *= ad;
  }
  return make_rational(num, den);
}

Rational binomial(const Rational& top, unsigned long k) {
  BigInt num = 1, den = 1;
  const BigInt& tn = top.get_num();
  const BigInt& td = top.get_den();
  for (unsigned long i = 0; i < k; ++i) {
    num *= tn - td * i;
    den *= td;
  }
  return make_rational(num, den * factorial(k));
}

BigInt central_binomial(unsigned long m) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * m, m);
  return b;
}

Rational pow(const Rational& base, unsigned long e) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r;
  mpz_swap(mpq_numref(r.get_mpq_t()), n.get_mpz_t());
  mpz_swap(mpq_denref(r.get_mpq_t()), d.get_mpz_t());
  return r;  // powers of coprime integers stay coprime
}

}  // namespace gibbs
