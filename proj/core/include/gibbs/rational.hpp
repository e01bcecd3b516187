#ifndef GIBBS_RATIONAL_HPP_
#define GIBBS_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gibbs {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built by hand go through make_rational.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

/// Accepts "3", "-1/2", "0.25" and "-1.5e-3".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
bool is_half_integer(const Rational& q);  // q = k + 1/2 for some integer k

BigInt factorial(unsigned long n);

/// Rising factorial a (a+1) ... (a+k-1); empty product is 1.
Rational pochhammer(const Rational& a, unsigned long k);

/// Generalized binomial coefficient binom(top, k) for rational top.
Rational binomial(const Rational& top, unsigned long k);

BigInt central_binomial(unsigned long m);  // binom(2m, m)

Rational pow(const Rational& base, unsigned long e);

}  // namespace gibbs

#endif  // GIBBS_RATIONAL_HPP_
