#include "gibbs/critpoints.hpp"

#include <algorithm>
#include <cmath>

#include "gibbs/error.hpp"
#include "gibbs/special.hpp"

namespace gibbs {

namespace {

constexpr int kSturmMaxDegree = 32;
constexpr int kMaxGridRefinements = 60;

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

int sign_of(const Rational& q) { return sgn(q); }

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void taylor_shift(std::vector<BigInt>& c, const BigInt& s) {
  const std::size_t n = c.size();
  if (n < 2 || s == 0) return;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;)
      mpz_addmul(c[j].get_mpz_t(), c[j + 1].get_mpz_t(), s.get_mpz_t());
}

// Smallest decimal with four significant digits that is >= v.
Rational round_up_decimal(double v) {
  const int exponent = static_cast<int>(std::floor(std::log10(v))) - 3;
  BigInt scale = pow10(static_cast<unsigned long>(std::abs(exponent)));
  if (exponent < 0) {
    const double m = std::ceil(v * std::pow(10.0, -exponent));
    return make_rational(BigInt(static_cast<long>(m)), scale);
  }
  const double m = std::ceil(v / std::pow(10.0, exponent));
  return Rational(BigInt(static_cast<long>(m)) * scale);
}

std::pair<Rational, Rational> ordered(const Rational& a, const Rational& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

const char* to_string(Side side) {
  switch (side) {
    case Side::above_jump: return "above_jump";
    case Side::below_jump: return "below_jump";
    case Side::positive: return "positive";
  }
  return "?";
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Poly d = differentiate(p);
  while (!d.is_zero()) {
    d *= Rational(1) / abs(d.leading());
    seq.push_back(d);
    const std::size_t k = seq.size();
    d = -divmod(seq[k - 2], seq[k - 1]).second;
  }
  return seq;
}

int sturm_count(const std::vector<Poly>& sequence, const Rational& a, const Rational& b) {
  std::vector<int> sa, sb;
  for (const auto& s : sequence) {
    sa.push_back(sign_of(eval_rational(s, a)));
    sb.push_back(sign_of(eval_rational(s, b)));
  }
  return variations(sa) - variations(sb);
}

int sturm_count(const Poly& p, const Rational& a, const Rational& b) {
  return sturm_count(sturm_sequence(p), a, b);
}

int descartes_count(const IntegerPoly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error(ErrorKind::domain, "Descartes count needs a < b");
  if (p.degree() < 1) return 0;
  BigInt den;
  mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  const BigInt lo = a.get_num() * (den / a.get_den());
  const BigInt hi = b.get_num() * (den / b.get_den());
  const std::size_t d = static_cast<std::size_t>(p.degree());

  // den^d p(z / den), then z -> lo + (hi - lo) y maps (a, b) onto (0, 1).
  std::vector<BigInt> c = p.coeffs();
  BigInt power = 1;
  for (std::size_t i = d + 1; i-- > 0;) {
    c[i] *= power;
    power *= den;
  }
  taylor_shift(c, lo);
  const BigInt width = hi - lo;
  power = 1;
  for (auto& v : c) {
    v *= power;
    power *= width;
  }
  // y = 1 / (1 + t) maps (0, 1) onto (0, inf).
  std::reverse(c.begin(), c.end());
  taylor_shift(c, BigInt(1));

  std::vector<int> signs;
  signs.reserve(c.size());
  for (const auto& v : c) signs.push_back(sgn(v));
  return variations(signs);
}

int count_roots(const Poly& p, const Rational& a, const Rational& b) {
  if (p.degree() <= kSturmMaxDegree) {
    int n = sturm_count(p, a, b);
    if (eval_rational(p, b) == 0) --n;  // Sturm counts (a, b]
    return n;
  }
  return descartes_count(IntegerPoly(p), a, b);
}

Bracket bracket_first_root(const Poly& q, const Rational& from, Direction direction,
                           const Rational& window_hint) {
  if (window_hint <= 0)
    throw Error(ErrorKind::domain, "window hint must be positive, got " + to_string(window_hint));
  const IntegerPoly ip(q);
  const int s0 = ip.sign_at(from);
  if (s0 == 0)
    throw Error(ErrorKind::domain, "bracketing must start at a non-root, but Q(" +
                                       to_string(from) + ") = 0");
  const int dir = direction == Direction::up ? 1 : -1;

  Rational step = window_hint / 64;
  Rational reach = 8 * window_hint;
  for (int refinement = 0; refinement <= kMaxGridRefinements; ++refinement) {
    Rational prev = from;
    int prev_sign = s0;
    bool changed = false;
    for (unsigned long k = 1;; ++k) {
      const Rational dist = step * k;
      if (dist > reach) break;
      const Rational x = from + dir * dist;
      const int s = ip.sign_at(x);
      if (s == prev_sign) {
        prev = x;
        continue;
      }
      changed = true;
      const auto [elo, ehi] = ordered(from, x);
      if (s == 0) {
        if (count_roots(q, elo, ehi) == 0) return {x, x};
      } else {
        const auto [lo, hi] = ordered(prev, x);
        const auto [flo, fhi] = ordered(from, prev);
        const bool clear_before = prev == from || count_roots(q, flo, fhi) == 0;
        if (clear_before && count_roots(q, lo, hi) == 1) return {lo, hi};
      }
      reach = dist;
      break;
    }
    if (!changed)
      throw Error(ErrorKind::no_root_found,
                  "no sign change within " + to_string(8 * window_hint) + " of x = " +
                      to_string(from) + (dir > 0 ? " (upward)" : " (downward)"));
    step /= 2;
  }
  throw Error(ErrorKind::multiple_roots,
              "could not isolate a single root next to x = " + to_string(from));
}

RootEnclosure refine_root(const Poly& q, const Bracket& bracket, int digits, Side side) {
  RootEnclosure out{bracket.low, bracket.high, RealMP(digits), q.degree(), side};
  auto exact = [&](const Rational& r) {
    out.low = out.high = r;
    out.refined = RealMP(r, digits);
    return out;
  };
  if (bracket.low == bracket.high) return exact(bracket.low);

  const IntegerPoly ip(q);
  const int slo = ip.sign_at(bracket.low);
  const int shi = ip.sign_at(bracket.high);
  if (slo == 0) return exact(bracket.low);
  if (shi == 0) return exact(bracket.high);
  if (slo == shi)
    throw Error(ErrorKind::no_root_found, "bracket [" + to_string(bracket.low) + ", " +
                                              to_string(bracket.high) + "] has no sign change");

  const Rational target = make_rational(1, pow10(static_cast<unsigned long>(std::max(digits - 10, 1))));
  const Rational coarse = make_rational(1, pow10(12));
  Rational lo = bracket.low, hi = bracket.high;
  while (hi - lo > coarse) {
    const Rational mid = (lo + hi) / 2;
    const int s = ip.sign_at(mid);
    if (s == 0) return exact(mid);
    (s == slo ? lo : hi) = mid;
  }

  const Poly dq = differentiate(q);
  // Newton can get no closer than (rounding error of Q) / |Q'|.
  int guard = 5;
  {
    const RealMP x0((lo + hi) / 2, 40);
    const RealMP slope = eval_mp(dq, x0);
    const RealMP bound = abs_sum_mp(q, x0);
    if (!slope.is_zero())
      guard += std::max(0, static_cast<int>(std::ceil((bound.exponent2() - slope.exponent2()) * 0.30103)));
  }

  const Rational delta = target / 4;
  for (int attempt = 0; attempt < 3; ++attempt) {
    const int w = digits + 20 + guard;
    RealMP x((lo + hi) / 2, w);
    const RealMP tol = ldexp(RealMP(1L, w), -static_cast<long>(bits_for_digits(digits + 8)));
    for (int it = 0; it < 200; ++it) {
      const RealMP step = horner_mp(q, x, w) / horner_mp(dq, x, w);
      x -= step;
      if (!step.is_finite()) break;
      if (abs(step) <= tol * abs(x)) break;
    }
    if (x.is_finite()) {
      const Rational r = x.to_rational();
      const Rational clo = std::max(lo, Rational(r - delta));
      const Rational chi = std::min(hi, Rational(r + delta));
      if (clo < chi) {
        const int sl = ip.sign_at(clo);
        const int sh = ip.sign_at(chi);
        if (sl == 0) return exact(clo);
        if (sh == 0) return exact(chi);
        if (sl != sh) {
          out.low = clo;
          out.high = chi;
          out.refined = x.with_digits(digits);
          return out;
        }
      }
    }
    guard += digits / 2 + 10;
  }
  throw Error(ErrorKind::precision_exhausted,
              "Newton refinement could not be certified at " + std::to_string(digits) + " digits");
}

ZeroWindow hermite_zero_window(unsigned half_degree, int digits) {
  if (half_degree < 1) throw Error(ErrorKind::domain, "Szego window needs N >= 1");
  const int w = digits + 10;
  const RealMP m(static_cast<long>(4 * half_degree + 3), w);
  const RealMP p = pi(w);
  const RealMP lower = p / sqrt(m);
  const RealMP ratio = RealMP(2L, w) * p / m;
  const RealMP half(Rational(1, 2), w);
  const RealMP brace = half + half * sqrt(RealMP(1L, w) - ratio * ratio);
  const RealMP upper = lower / sqrt(brace);
  return {lower.with_digits(digits), upper.with_digits(digits)};
}

RealMP u_map(const RealMP& x, unsigned n) {
  if (x.sign() < 0) throw Error(ErrorKind::domain, "u map needs x >= 0");
  const int w = x.digits();
  return RealMP(2L, w) * sqrt(RealMP(static_cast<long>(n), w)) * (sqrt(x) - RealMP(1L, w));
}

Rational laguerre_window_hint(unsigned n) {
  if (n < 1) throw Error(ErrorKind::domain, "window hint needs n >= 1");
  const double s = M_PI / std::sqrt(static_cast<double>(n));
  return round_up_decimal(s + s * s / 4);
}

Rational hermite_window_hint(unsigned half_degree) {
  return round_up_decimal(hermite_zero_window(std::max(half_degree, 1u), 15).upper.to_double());
}

Rational gegenbauer_window_hint(unsigned half_degree, const Rational& lambda) {
  return round_up_decimal(4.0 / (2.0 * half_degree + 2.0 + lambda.get_d()));
}

}  // namespace gibbs
