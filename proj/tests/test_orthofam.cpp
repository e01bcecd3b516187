#include <gtest/gtest.h>

#include "gibbs/error.hpp"
#include "gibbs/families.hpp"
#include "support/exact_properties.hpp"
#include "support/gtest_helpers.hpp"
#include "support/oracles.hpp"

namespace gibbs {
namespace {

using testing_support::AgreeTo;
using testing_support::NoFailures;

const Rational kHalf(1, 2);

TEST(LaguerreTest, LowDegrees) {
  EXPECT_EQ(laguerre(0, Rational(7, 3)), Poly::constant(1));
  EXPECT_EQ(laguerre(1, 0), (Poly{1, -1}));
  EXPECT_EQ(laguerre(2, 1), (Poly{3, -3, kHalf}));
  // L_1^(1/2)(t) = 3/2 - t
  EXPECT_EQ(laguerre(1, kHalf), (Poly{Rational(3, 2), -1}));
}

TEST(LaguerreTest, LeadingCoefficient) {
  for (unsigned n : {1u, 5u, 17u}) {
    const Poly l = laguerre(n, Rational(-1, 3));
    Rational want = Rational(1) / Rational(factorial(n));
    if (n % 2 == 1) want = -want;
    EXPECT_EQ(l.leading(), want);
    EXPECT_EQ(l.degree(), static_cast<int>(n));
  }
}

TEST(LaguerreTest, DomainErrorNamesAlpha) {
  try {
    laguerre(3, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
    EXPECT_NE(std::string(e.what()).find("alpha"), std::string::npos);
  }
  EXPECT_THROW(FamilySpec::laguerre(Rational(-3, 2)), Error);
}

TEST(HermiteTest, LowDegrees) {
  EXPECT_EQ(hermite(0), Poly::constant(1));
  EXPECT_EQ(hermite(1), (Poly{0, 2}));
  EXPECT_EQ(hermite(3), (Poly{0, -12, 0, 8}));
  EXPECT_EQ(eval_rational(hermite(2), 0), -2);
}

TEST(HermiteTest, IntegerCoefficientsAndLeadingPowerOfTwo) {
  for (unsigned n = 0; n <= 25; ++n) {
    const Poly h = hermite(n);
    for (const auto& c : h.coeffs()) EXPECT_EQ(c.get_den(), 1);
    EXPECT_EQ(h.leading(), pow(Rational(2), n));
  }
}

TEST(OtherFamiliesTest, LowDegrees) {
  EXPECT_EQ(legendre(1), Poly::x());
  EXPECT_EQ(eval_rational(chebyshev_t(2), kHalf), Rational(-1, 2));
  EXPECT_EQ(chebyshev_u(2), (Poly{-1, 0, 4}));
  EXPECT_EQ(gegenbauer(1, 1), (Poly{0, 2}));
  EXPECT_EQ(gegenbauer(1, Rational(3, 4)), (Poly{0, Rational(3, 2)}));
  // P_1^(a,b) = (a + 1) + (a + b + 2)(x - 1)/2
  const Rational a(1, 2), b(2);
  EXPECT_EQ(jacobi(1, a, b), (Poly{a + 1 - (a + b + 2) / 2, (a + b + 2) / 2}));
}

TEST(OtherFamiliesTest, ChebyshevIsCosineOfMultipleAngle) {
  const int p = 40;
  const RealMP theta = pi(p) / RealMP(7L, p);
  const RealMP c = cos(theta);
  for (unsigned n = 0; n <= 12; ++n)
    EXPECT_TRUE(AgreeTo(eval_mp(chebyshev_t(n), c), cos(RealMP(static_cast<long>(n), p) * theta), 30))
        << n;
}

TEST(OtherFamiliesTest, LegendreIsJacobiZeroZero) {
  for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(legendre(n), jacobi(n, 0, 0));
}

TEST(OtherFamiliesTest, GegenbauerIsProportionalToSymmetricJacobi) {
  const Rational lambda(3, 2);
  for (unsigned n = 0; n <= 10; ++n) {
    const Poly c = gegenbauer(n, lambda);
    const Poly j = jacobi(n, lambda - kHalf, lambda - kHalf);
    EXPECT_EQ(c * (j.leading() / c.leading()), j) << n;
  }
}

TEST(OtherFamiliesTest, DomainsEnforced) {
  EXPECT_THROW(FamilySpec::gegenbauer(kHalf - 1), Error);
  EXPECT_THROW(FamilySpec::jacobi(0, -1), Error);
  EXPECT_THROW(gegenbauer(2, -1), Error);
  EXPECT_NO_THROW(FamilySpec::gegenbauer(Rational(-1, 4)));
}

TEST(FamilySpecTest, RecurrenceMatchesDefiningSums) {
  const std::vector<FamilySpec> specs = {
      FamilySpec::laguerre(Rational(-1, 2)), FamilySpec::laguerre(2),     FamilySpec::hermite(),
      FamilySpec::gegenbauer(Rational(3, 4)), FamilySpec::jacobi(kHalf, 3), FamilySpec::legendre(),
      FamilySpec::chebyshev_t(),              FamilySpec::chebyshev_u()};
  const Rational x(3, 7);
  for (const auto& spec : specs) {
    const std::vector<Rational> values = values_at(spec, 20, x);
    ASSERT_EQ(values.size(), 21u);
    for (unsigned n = 0; n <= 20; ++n) {
      EXPECT_EQ(values[n], eval_rational(spec.polynomial(n), x)) << spec.name() << " n=" << n;
      EXPECT_EQ(spec.leading_coefficient(n), spec.polynomial(n).leading()) << spec.name();
    }
    const std::vector<RealMP> fl = values_at(spec, 20, RealMP(x, 50));
    EXPECT_TRUE(AgreeTo(fl[20], RealMP(values[20], 50), 40)) << spec.name();
  }
}

TEST(NormTest, ClosedForms) {
  EXPECT_EQ(norm_squared_exact(FamilySpec::laguerre(0), 2).rational, 1);
  EXPECT_TRUE(AgreeTo(norm_squared(FamilySpec::hermite(), 1, 40), RealMP(2L, 50) * sqrt_pi(50), 39));
  const ExactScalar h6 = norm_squared_exact(FamilySpec::hermite(), 6);
  const ExactScalar h7 = norm_squared_exact(FamilySpec::hermite(), 7);
  EXPECT_TRUE(h6.factor == h7.factor);
  EXPECT_EQ(h7.rational, 2 * 7 * h6.rational);
  // alpha = 1/2: Gamma(n + 3/2) / n! carries sqrt(pi).
  EXPECT_TRUE(AgreeTo(norm_squared(FamilySpec::laguerre(kHalf), 3, 40),
                      gamma(Rational(9, 2), 50) / RealMP(6L, 50), 39));
}

TEST(NormTest, PolynomialWeightFamiliesAgainstExactIntegrals) {
  // Legendre weight 1, Gegenbauer(3/2) weight (1 - x^2).
  for (unsigned n = 0; n <= 8; ++n) {
    const Poly p = legendre(n);
    EXPECT_EQ(norm_squared_exact(FamilySpec::legendre(), n).rational,
              oracle::weighted_integral(p * p, 0, false));
    const Poly c = gegenbauer(n, Rational(3, 2));
    const Rational exact = oracle::weighted_integral(c * c, 1, false);
    EXPECT_TRUE(AgreeTo(norm_squared(FamilySpec::gegenbauer(Rational(3, 2)), n, 40), RealMP(exact, 40), 35))
        << n;
    for (unsigned m = 0; m < n; ++m) {
      EXPECT_EQ(oracle::weighted_integral(p * legendre(m), 0, false), 0);
      EXPECT_EQ(oracle::weighted_integral(c * gegenbauer(m, Rational(3, 2)), 1, false), 0);
    }
  }
}

TEST(CarlitzTest, SmallestCaseByHand) {
  const CarlitzSides s = carlitz_product(1, 0);
  EXPECT_EQ(s.product, (Poly{1, -1}));
  EXPECT_EQ(s.expansion, (Poly{1, -1}));
}

TEST(CarlitzTest, AgreesAtOneForDegreeTwenty) {
  const CarlitzSides s = carlitz_product(20, 0);
  EXPECT_EQ(eval_rational(s.product, 1), eval_rational(s.expansion, 1));
}

TEST(CarlitzTest, RejectsDegreeZero) { EXPECT_THROW(carlitz_product(0, 0), Error); }

TEST(OrthofamProperty, LaguerreOrthogonalityAndNorms) {
  EXPECT_TRUE(NoFailures(props::laguerre_orthogonality({0, 1, 2}, 10)));
}

TEST(OrthofamProperty, HermiteOrthogonalityAndNorms) {
  EXPECT_TRUE(NoFailures(props::hermite_orthogonality(12)));
}

TEST(OrthofamProperty, LaguerreDerivativeIdentity) {
  EXPECT_TRUE(NoFailures(props::laguerre_derivative({Rational(-1, 2), 0, kHalf, 1, 2}, 30)));
}

TEST(OrthofamProperty, HermiteMatchesRecurrence) {
  EXPECT_TRUE(NoFailures(props::hermite_recurrence(40)));
}

TEST(OrthofamProperty, EvenHermiteAtZero) { EXPECT_TRUE(NoFailures(props::hermite_even_at_zero(20))); }

TEST(OrthofamProperty, SturmLiouvilleResidualVanishes) {
  EXPECT_TRUE(NoFailures(props::laguerre_sturm_liouville({Rational(-1, 2), 0, Rational(7, 3), 2}, 30)));
}

TEST(OrthofamProperty, GegenbauerDerivativeIdentity) {
  EXPECT_TRUE(NoFailures(props::gegenbauer_derivative({kHalf, 1, Rational(3, 2)}, 10)));
}

TEST(OrthofamProperty, CarlitzPolynomialEquality) {
  EXPECT_TRUE(NoFailures(props::carlitz({0, 1, 2}, 8)));
  EXPECT_TRUE(NoFailures(props::carlitz({Rational(-1, 2), Rational(5, 3)}, 6)));
}

TEST(OrthofamProperty, RandomRationalAlphaDerivativeIdentity) {
  oracle::RandomRationals gen(21);
  std::vector<Rational> alphas;
  for (int i = 0; i < 10; ++i) {
    Rational a = gen.in(-1, 6, 13);
    if (a <= -1) a = Rational(-12, 13);
    alphas.push_back(a);
  }
  EXPECT_TRUE(NoFailures(props::laguerre_derivative(alphas, 12)));
  EXPECT_TRUE(NoFailures(props::laguerre_sturm_liouville(alphas, 12)));
}

}  // namespace
}  // namespace gibbs
