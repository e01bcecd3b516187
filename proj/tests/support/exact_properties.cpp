#include "support/exact_properties.hpp"

#include <sstream>

#include "gibbs/error.hpp"
#include "gibbs/expansion.hpp"
#include "gibbs/families.hpp"
#include "support/oracles.hpp"

namespace gibbs::props {

namespace {

template <typename... Args>
std::string describe(const Args&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

}  // namespace

Failures laguerre_orthogonality(const std::vector<unsigned>& alphas, unsigned max_degree) {
  Failures out;
  for (unsigned alpha : alphas) {
    std::vector<Poly> ls;
    for (unsigned j = 0; j <= max_degree; ++j) ls.push_back(laguerre(j, alpha));
    for (unsigned i = 0; i <= max_degree; ++i) {
      for (unsigned j = i; j <= max_degree; ++j) {
        const Rational ip = oracle::laguerre_inner_product(ls[i], ls[j], alpha);
        const Rational want =
            i == j ? Rational(factorial(j + alpha)) / Rational(factorial(j)) : Rational(0);
        if (ip != want)
          out.push_back(describe("laguerre alpha=", alpha, " <L_", i, ", L_", j,
                                 "> = ", to_string(ip), ", expected ", to_string(want)));
      }
    }
    for (unsigned j = 0; j <= max_degree; ++j) {
      const ExactScalar norm = norm_squared_exact(FamilySpec::laguerre(alpha), j);
      const Rational want = Rational(factorial(j + alpha)) / Rational(factorial(j));
      if (norm.factor.kind() != Transcendental::Kind::one || norm.rational != want)
        out.push_back(describe("laguerre alpha=", alpha, " norm_squared(", j, ") = ",
                               to_string(norm.rational), " * ", norm.factor.describe()));
    }
  }
  return out;
}

Failures hermite_orthogonality(unsigned max_degree) {
  Failures out;
  std::vector<Poly> hs;
  for (unsigned j = 0; j <= max_degree; ++j) hs.push_back(hermite(j));
  for (unsigned i = 0; i <= max_degree; ++i) {
    for (unsigned j = i; j <= max_degree; ++j) {
      const Poly prod = hs[i] * hs[j];
      Rational ip = 0;
      for (std::size_t k = 0; k < prod.coeffs().size(); ++k)
        ip += prod.coeffs()[k] * oracle::gaussian_moment_over_sqrt_pi(static_cast<unsigned>(k));
      Rational want = 0;
      if (i == j) want = Rational(factorial(j)) * pow(Rational(2), j);
      if (ip != want)
        out.push_back(describe("hermite <H_", i, ", H_", j, "> / sqrt(pi) = ", to_string(ip)));
    }
    const ExactScalar norm = norm_squared_exact(FamilySpec::hermite(), i);
    if (norm.factor.kind() != Transcendental::Kind::sqrt_pi ||
        norm.rational != Rational(factorial(i)) * pow(Rational(2), i))
      out.push_back(describe("hermite norm_squared(", i, ") = ", to_string(norm.rational), " * ",
                             norm.factor.describe()));
  }
  return out;
}

Failures laguerre_derivative(const std::vector<Rational>& alphas, unsigned max_degree) {
  Failures out;
  for (const auto& a : alphas)
    for (unsigned n = 1; n <= max_degree; ++n)
      if (differentiate(laguerre(n, a)) != -laguerre(n - 1, a + 1))
        out.push_back(describe("(L_", n, "^(", to_string(a), "))' != -L_", n - 1, "^(",
                               to_string(Rational(a + 1)), ")"));
  return out;
}

Failures cd_divisibility(const std::vector<Rational>& alphas, unsigned max_degree) {
  Failures out;
  for (const auto& a : alphas) {
    for (unsigned n = 1; n <= max_degree; ++n) {
      try {
        const CDForm f = cd_derivative(FamilySpec::laguerre(a), JumpKind::step_at_one, n);
        if (eval_rational(f.numerator, 1) != 0)
          out.push_back(describe("CD numerator n=", n, " alpha=", to_string(a), " nonzero at 1"));
        if (f.quotient * Poly{-1, 1} != f.numerator)
          out.push_back(describe("CD quotient n=", n, " alpha=", to_string(a),
                                 " times (x-1) is not the numerator"));
      } catch (const Error& e) {
        out.push_back(describe("CD n=", n, " alpha=", to_string(a), ": ", e.what()));
      }
    }
  }
  return out;
}

Failures carlitz(const std::vector<Rational>& alphas, unsigned max_degree) {
  Failures out;
  for (const auto& a : alphas) {
    for (unsigned n = 1; n <= max_degree; ++n) {
      const CarlitzSides sides = carlitz_product(n, a);
      // Left side rebuilt here rather than trusted from carlitz_product.
      const Poly left = laguerre(n, a) * laguerre(n - 1, a + 1);
      if (sides.product != left)
        out.push_back(describe("Carlitz n=", n, " alpha=", to_string(a), ": product side wrong"));
      if (sides.expansion != left)
        out.push_back(describe("Carlitz n=", n, " alpha=", to_string(a), ": sides differ"));
    }
  }
  return out;
}

Failures hermite_recurrence(unsigned max_degree) {
  Failures out;
  for (unsigned n = 0; n <= max_degree; ++n)
    if (hermite(n) != oracle::hermite_by_recurrence(n))
      out.push_back(describe("H_", n, " differs from the recurrence"));
  return out;
}

Failures hermite_even_at_zero(unsigned max_m) {
  Failures out;
  for (unsigned m = 0; m <= max_m; ++m) {
    Rational want = Rational(factorial(2 * m)) / Rational(factorial(m));
    if (m % 2 == 1) want = -want;
    const Rational got = eval_rational(hermite(2 * m), 0);
    if (got != want)
      out.push_back(describe("H_", 2 * m, "(0) = ", to_string(got), ", expected ", to_string(want)));
  }
  return out;
}

Failures laguerre_sturm_liouville(const std::vector<Rational>& alphas, unsigned max_degree) {
  Failures out;
  for (const auto& a : alphas) {
    for (unsigned n = 0; n <= max_degree; ++n) {
      const Poly l = laguerre(n, a);
      const Poly d1 = differentiate(l);
      const Poly d2 = differentiate(d1);
      const Poly residual = Poly::x() * d2 + Poly{a + 1, -1} * d1 + l * Rational(n);
      if (!residual.is_zero())
        out.push_back(describe("Sturm-Liouville residual n=", n, " alpha=", to_string(a), ": ",
                               residual.to_string()));
    }
  }
  return out;
}

Failures gegenbauer_derivative(const std::vector<Rational>& lambdas, unsigned max_k) {
  Failures out;
  for (const auto& l : lambdas)
    for (unsigned k = 0; k <= max_k; ++k)
      if (differentiate(gegenbauer(2 * k + 1, l)) != gegenbauer(2 * k, l + 1) * (2 * l))
        out.push_back(describe("(C_", 2 * k + 1, "^(", to_string(l), "))' != 2 lambda C_", 2 * k,
                               "^(lambda+1)"));
  return out;
}

Failures laguerre_cd_equivalence(const std::vector<Rational>& alphas, unsigned max_degree) {
  Failures out;
  for (const auto& a : alphas) {
    for (unsigned n = 1; n <= max_degree; ++n) {
      const ExpansionSeries series = laguerre_coefficients(a, n);
      const CDForm f = cd_derivative(series.spec, series.kind, n);
      Poly sum;
      for (unsigned j = 1; j <= n; ++j) {
        const ExactScalar& c = series.coeffs[j];
        if (!(c.factor == f.constant.factor)) {
          out.push_back(describe("n=", n, " alpha=", to_string(a), ": coefficient ", j,
                                 " carries ", c.factor.describe(), " but the CD constant carries ",
                                 f.constant.factor.describe()));
          break;
        }
        sum += laguerre(j, a) * c.rational;
      }
      if (differentiate(sum) != f.quotient * f.constant.rational)
        out.push_back(describe("n=", n, " alpha=", to_string(a),
                               ": derivative of the partial sum is not constant * quotient"));
    }
  }
  return out;
}

}  // namespace gibbs::props
