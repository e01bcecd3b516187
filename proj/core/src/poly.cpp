#include "gibbs/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gibbs/error.hpp"

namespace gibbs {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::domain, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational mag = abs(c);
    if (mag != 1 || i == 0) os << gibbs::to_string(mag);
    if (i > 0) os << (mag != 1 ? "*x" : "x");
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

Poly scale(const Poly& p, const Rational& c) { return p * c; }

Poly differentiate(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return Poly(std::move(out));
}

Poly antiderivative(const Poly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> out(p.coeffs().size() + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    out[i + 1] = p.coeffs()[i] / Rational(static_cast<unsigned long>(i + 1));
  return Poly(std::move(out));
}

Poly divide_exact(const Poly& p, const Rational& root) {
  if (p.is_zero()) return {};
  // Synthetic division from the top; the final carry is P(root).
  const auto& c = p.coeffs();
  const std::size_t n = c.size();
  std::vector<Rational> q(n - 1);
  Rational carry = c[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    q[i] = carry;
    carry = c[i] + carry * root;
  }
  if (carry != 0)
    throw Error(ErrorKind::not_divisible, "polynomial does not vanish at x = " +
                                              gibbs::to_string(root) + " (remainder " +
                                              gibbs::to_string(carry) + ")");
  return Poly(std::move(q));
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw Error(ErrorKind::domain, "division by the zero polynomial");
  if (p.degree() < d.degree()) return {Poly{}, p};
  std::vector<Rational> rem = p.coeffs();
  const int dd = d.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dd + 1));
  const Rational& lead = d.leading();
  for (int k = p.degree() - dd; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= f * d.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly scale_argument(const Poly& p, const Rational& c) {
  std::vector<Rational> out = p.coeffs();
  Rational power = 1;
  for (auto& a : out) {
    a *= power;
    power *= c;
  }
  return Poly(std::move(out));
}

Poly substitute_square(const Poly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> out(2 * p.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[2 * i] = p.coeffs()[i];
  return Poly(std::move(out));
}

Poly taylor_shift(const Poly& p, const Rational& s) {
  std::vector<Rational> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += s * c[j + 1];
  return Poly(std::move(c));
}

Rational eval_rational(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc *= x;
    acc += p.coeffs()[i];
  }
  return acc;
}

RealMP horner_mp(const Poly& p, const RealMP& x, int digits) {
  RealMP acc(digits);
  RealMP c(digits);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    mpfr_mul(acc.get(), acc.get(), x.get(), MPFR_RNDN);
    mpfr_set_q(c.get(), p.coeffs()[i].get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), c.get(), MPFR_RNDN);
  }
  return acc;
}

RealMP abs_sum_mp(const Poly& p, const RealMP& x) {
  constexpr int kDigits = 20;
  RealMP ax = abs(x).with_digits(kDigits);
  RealMP acc(kDigits);
  RealMP c(kDigits);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    mpfr_mul(acc.get(), acc.get(), ax.get(), MPFR_RNDU);
    mpfr_set_q(c.get(), p.coeffs()[i].get_mpq_t(), MPFR_RNDU);
    mpfr_abs(c.get(), c.get(), MPFR_RNDU);
    mpfr_add(acc.get(), acc.get(), c.get(), MPFR_RNDU);
  }
  return acc;
}

RealMP eval_mp(const Poly& p, const RealMP& x) {
  const int target = x.digits();
  if (p.is_zero()) return RealMP(target);
  const RealMP bound = abs_sum_mp(p, x);
  if (bound.is_zero()) return RealMP(target);
  // Horner's forward error is at most about 2 (d+1) u sum |c_i||x|^i.
  const int horner_digits = static_cast<int>(std::ceil(std::log10(4.0 * (p.degree() + 1))));
  int w = target + 10 + horner_digits;
  const int ceiling = 4 * target + 200;
  RealMP v(target);
  for (;;) {
    v = horner_mp(p, x, w);
    int lost = w;  // an exact zero tells us nothing about relative accuracy
    if (!v.is_zero())
      lost = static_cast<int>(std::ceil((bound.exponent2() - v.exponent2() + 1) * 0.30103));
    lost = std::max(lost, 0);
    const int needed = target + 5 + horner_digits + lost;
    if (needed <= w || w >= ceiling) break;
    w = std::min(std::max(needed + 5, w + 10), ceiling);
  }
  return v.with_digits(target);
}

IntegerPoly::IntegerPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegerPoly::IntegerPoly(const Poly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  coeffs_.reserve(p.coeffs().size());
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    coeffs_.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : coeffs_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

BigInt IntegerPoly::eval_homogeneous(const BigInt& num, const BigInt& den) const {
  if (coeffs_.empty()) return 0;
  BigInt acc = coeffs_.back();
  BigInt den_power = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    den_power *= den;
    acc *= num;
    if (coeffs_[i] != 0) acc += coeffs_[i] * den_power;
  }
  return acc;
}

int IntegerPoly::sign_at(const Rational& x) const {
  return sgn(eval_homogeneous(x.get_num(), x.get_den()));
}

}  // namespace gibbs
