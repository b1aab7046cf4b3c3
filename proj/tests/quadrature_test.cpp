#include <gtest/gtest.h>

#include <cmath>

#include "preisach/quadrature.hpp"

using namespace preisach;

TEST(Quadrature, PolynomialIsExact) {
  const auto r = adaptive_lobatto([](double x) { return x * x * x - 2.0 * x; }, -1.0, 2.0, QuadratureConfig{});
  EXPECT_NEAR(r.value, 0.75, 1e-14);
  EXPECT_FALSE(r.depth_exceeded);
  EXPECT_EQ(r.evaluations, 18u);
}

TEST(Quadrature, SmoothFunctionsMeetTolerance) {
  for (double tol : {1e-3, 1e-6, 1e-10}) {
    QuadratureConfig q{tol, 50};
    EXPECT_NEAR(adaptive_lobatto([](double x) { return std::exp(x); }, 0.0, 3.0, q).value, std::exp(3.0) - 1.0, tol);
    EXPECT_NEAR(adaptive_lobatto([](double x) { return std::sin(10.0 * x); }, 0.0, 2.0, q).value,
                (1.0 - std::cos(20.0)) / 10.0, tol);
  }
}

TEST(Quadrature, TighterToleranceCostsMore) {
  auto f = [](double x) { return 1.0 / (1e-2 + x * x); };
  const auto loose = adaptive_lobatto(f, -1.0, 1.0, {1e-3, 50});
  const auto tight = adaptive_lobatto(f, -1.0, 1.0, {1e-9, 50});
  EXPECT_GT(tight.evaluations, loose.evaluations);
  EXPECT_NEAR(tight.value, 2.0 * std::atan(10.0) * 10.0, 1e-8);
}

TEST(Quadrature, DepthCapSetsFlagAndReturnsEstimate) {
  auto f = [](double x) { return x < 0.3 ? 0.0 : 1.0; };
  const auto r = adaptive_lobatto(f, 0.0, 1.0, {1e-14, 2});
  EXPECT_TRUE(r.depth_exceeded);
  EXPECT_NEAR(r.value, 0.7, 5e-2);
}

TEST(Quadrature, ConfigValidation) {
  EXPECT_THROW((QuadratureConfig{0.0, 50}.validate()), ContractViolation);
  EXPECT_THROW((QuadratureConfig{1e-6, 0}.validate()), ContractViolation);
  EXPECT_NO_THROW((QuadratureConfig{1e-6, 1}.validate()));
}
