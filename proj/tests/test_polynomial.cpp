#include "warpknot/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

#include "warpknot/errors.hpp"

using warpknot::errc;
using warpknot::int_polynomial;

namespace {

int_polynomial poly(std::vector<std::int64_t> c) { return int_polynomial(std::move(c)); }

int_polynomial random_poly(std::mt19937_64& gen, int max_degree, std::int64_t max_coeff) {
  std::vector<std::int64_t> c(gen() % (max_degree + 1) + 1);
  for (auto& x : c) x = static_cast<std::int64_t>(gen() % (2 * max_coeff + 1)) - max_coeff;
  return int_polynomial(std::move(c));
}

}  // namespace

TEST(Polynomial, CanonicalForm) {
  EXPECT_EQ(poly({1, 2, 0, 0}), poly({1, 2}));
  EXPECT_TRUE(poly({0, 0}).is_zero());
  EXPECT_EQ(int_polynomial::zero().degree(), -1);
  EXPECT_EQ(poly({0, 3}).degree(), 1);
  EXPECT_EQ(poly({0, 3}).lowest_exponent(), 1);
}

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(poly({1, 1}) * poly({1, 1}), poly({1, 2, 1}));
  EXPECT_EQ(poly({1, 2}) + poly({0, -2}), poly({1}));
  EXPECT_EQ(poly({1, 2}) - poly({1, 2}), int_polynomial::zero());
  EXPECT_EQ(3 * poly({1, 1}), poly({3, 3}));
  EXPECT_EQ(poly({1, 1}).shifted(2), poly({0, 0, 1, 1}));
  EXPECT_EQ(int_polynomial::one_plus_t_pow(3), poly({1, 3, 3, 1}));
  EXPECT_EQ(int_polynomial::monomial(3, 1), poly({0, 3}));
}

TEST(Polynomial, Evaluate) {
  EXPECT_EQ(poly({1, 2, 2, 1}).evaluate(1), 6);
  EXPECT_EQ(poly({1, 2, 2, 1}).coefficient_sum(), 6);
  EXPECT_EQ(poly({1, 2, 2, 1}).evaluate(-1), 0);
  EXPECT_EQ(int_polynomial::zero().evaluate(5), 0);
}

TEST(DivExactOnePlusT, TrefoilPair) {
  // W = 1 + 2t + 2t^2 + t^3 of the one-bridge trefoil divides to 1 + t + t^2.
  EXPECT_EQ(div_exact_one_plus_t(poly({1, 2, 2, 1})), poly({1, 1, 1}));
}

TEST(DivExactOnePlusT, ZeroPolynomial) {
  EXPECT_EQ(div_exact_one_plus_t(int_polynomial::zero()), int_polynomial::zero());
  EXPECT_EQ(div_exact_one_plus_t(poly({0})), poly({0}));
}

TEST(DivExactOnePlusT, ArcPolynomialIsNotDivisible) {
  // 2 + 5t + 2t^2 evaluates to -1 at t = -1, so (1+t) cannot divide it.
  try {
    div_exact_one_plus_t(poly({2, 5, 2}));
    FAIL() << "expected not_divisible";
  } catch (const warpknot::error& e) {
    EXPECT_EQ(e.code(), errc::not_divisible);
  }
}

TEST(DivExactOnePlusT, RoundTripWithMultiplication) {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 2000; ++i) {
    const auto p = random_poly(gen, 12, 50);
    EXPECT_EQ(div_exact_one_plus_t(mul_by_one_plus_t(p)), p);
  }
}

TEST(ReciprocalTransform, Examples) {
  EXPECT_EQ(reciprocal_transform(poly({1, 1, 1}), 3), poly({1, 1, 1}));
  EXPECT_EQ(reciprocal_transform(poly({3}), 3), poly({0, 0, 3}));
  EXPECT_EQ(reciprocal_transform(poly({1, 2}), 4), poly({0, 0, 2, 1}));
}

TEST(ReciprocalTransform, InvolutionAtFullDegree) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(gen() % 10) + 1;
    std::vector<std::int64_t> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = static_cast<std::int64_t>(gen() % 9);
    c.back() = 1 + static_cast<std::int64_t>(gen() % 8);  // degree exactly n-1
    const auto p = poly(c);
    EXPECT_EQ(reciprocal_transform(reciprocal_transform(p, n), n), p);
  }
}

TEST(ReciprocalTransform, DegreeTooHigh) {
  try {
    reciprocal_transform(poly({0, 0, 1}), 2);
    FAIL() << "expected degree_too_high";
  } catch (const warpknot::error& e) {
    EXPECT_EQ(e.code(), errc::degree_too_high);
  }
}

TEST(Span, Examples) {
  EXPECT_EQ(span(poly({1, 1, 1})), 2);
  EXPECT_EQ(span(poly({0, 3})), 0);
  EXPECT_EQ(span(poly({2, 0, 1})), 2);
  try {
    span(int_polynomial::zero());
    FAIL() << "expected zero_polynomial";
  } catch (const warpknot::error& e) {
    EXPECT_EQ(e.code(), errc::zero_polynomial);
  }
}

TEST(PolynomialText, ListForm) {
  EXPECT_EQ(to_list_string(poly({1, 2, 2, 1})), "[1,2,2,1]");
  EXPECT_EQ(to_list_string(int_polynomial::zero()), "[0]");
  EXPECT_EQ(warpknot::parse_polynomial("[1,2,2,1]"), poly({1, 2, 2, 1}));
  EXPECT_EQ(warpknot::parse_polynomial("[0]"), int_polynomial::zero());
  EXPECT_EQ(warpknot::parse_polynomial("[-1, 4]"), poly({-1, 4}));
}

TEST(PolynomialText, PrettyForm) {
  EXPECT_EQ(to_pretty_string(poly({1, 1, 1})), "1 + t + t^2");
  EXPECT_EQ(to_pretty_string(poly({1, 2, 2, 1})), "1 + 2t + 2t^2 + t^3");
  EXPECT_EQ(to_pretty_string(poly({0, 3})), "3t");
  EXPECT_EQ(to_pretty_string(poly({2, 0, 1})), "2 + t^2");
  EXPECT_EQ(to_pretty_string(poly({-1, 0, 2})), "-1 + 2t^2");
  EXPECT_EQ(to_pretty_string(int_polynomial::zero()), "0");
  EXPECT_EQ(warpknot::parse_polynomial("1 + t + t^2"), poly({1, 1, 1}));
  EXPECT_EQ(warpknot::parse_polynomial("3t"), poly({0, 3}));
  EXPECT_EQ(warpknot::parse_polynomial("0"), int_polynomial::zero());
  EXPECT_EQ(warpknot::parse_polynomial("2 - 3t + t^4"), poly({2, -3, 0, 0, 1}));
}

TEST(PolynomialText, RoundTrips) {
  std::mt19937_64 gen(23);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_poly(gen, 9, 20);
    EXPECT_EQ(warpknot::parse_polynomial(to_list_string(p)), p);
    EXPECT_EQ(warpknot::parse_polynomial(to_pretty_string(p)), p);
  }
}

TEST(PolynomialText, Malformed) {
  for (const char* bad : {"[1,", "[1 2]", "", "t^", "1 ++ t", "[1]x", "^2"}) {
    try {
      warpknot::parse_polynomial(bad);
      FAIL() << "expected syntax_error for: " << bad;
    } catch (const warpknot::error& e) {
      EXPECT_EQ(e.code(), errc::syntax_error) << bad;
    }
  }
}
