#ifndef GIBBS_TESTS_GTEST_HELPERS_HPP_
#define GIBBS_TESTS_GTEST_HELPERS_HPP_

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "gibbs/real_mp.hpp"

namespace gibbs::testing_support {

/// Passes when a and b agree to at least `digits` significant digits.
inline ::testing::AssertionResult AgreeTo(const RealMP& a, const RealMP& b, double digits) {
  const double got = agreeing_digits(a, b);
  if (got >= digits) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a.to_string(40) << " vs " << b.to_string(40) << " agree to "
                                       << got << " digits, wanted " << digits;
}

inline ::testing::AssertionResult NoFailures(const std::vector<std::string>& failures) {
  if (failures.empty()) return ::testing::AssertionSuccess();
  auto r = ::testing::AssertionFailure() << failures.size() << " failure(s):";
  for (std::size_t i = 0; i < failures.size() && i < 10; ++i) r << "\n  " << failures[i];
  return r;
}

}  // namespace gibbs::testing_support

#endif  // GIBBS_TESTS_GTEST_HELPERS_HPP_
