#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "brsym/cyclotomic.hpp"

using namespace brsym;

namespace {

RationalPoly ints(std::initializer_list<long> cs) {
  RationalPoly out;
  for (long c : cs) out.emplace_back(c);
  return out;
}

std::complex<double> root(int N, long k) { return std::polar(1.0, 2 * std::numbers::pi * k / N); }

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST(CyclotomicPolynomial, KnownSmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), ints({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(8), ints({1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), ints({1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), ints({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(15), ints({1, -1, 0, 1, -1, 1, 0, -1, 1}));
}

// x^N - 1 is the product of Phi_d over d | N.
TEST(CyclotomicPolynomial, ProductOverDivisors) {
  for (int N = 1; N <= 60; ++N) {
    RationalPoly prod = ints({1});
    for (int d = 1; d <= N; ++d) {
      if (N % d == 0) prod = detail::poly_mul(prod, cyclotomic_polynomial(d));
    }
    RationalPoly expected(N + 1, Rational(0));
    expected[0] = -1;
    expected[N] = 1;
    EXPECT_EQ(prod, expected) << "N = " << N;
  }
}

TEST(Cyclotomic, RootsOfUnityMatchComplexValues) {
  for (int N : {1, 2, 3, 4, 8, 12, 20, 24, 60}) {
    for (long k = -N; k <= 2 * N; ++k) {
      EXPECT_TRUE(close(root_of_unity(N, k).to_complex(), root(N, k))) << N << " " << k;
    }
  }
}

TEST(Cyclotomic, ImaginaryUnit) {
  const auto i = root_of_unity(4, 1);
  EXPECT_EQ(i * i, Cyclotomic(-1L));
  EXPECT_EQ(root_of_unity(12, 3), i);
  EXPECT_EQ(i.conjugate(), -i);
}

TEST(Cyclotomic, SumOfAllRootsVanishes) {
  for (int N = 2; N <= 40; ++N) {
    Cyclotomic sum(Rational(0), N);
    for (int k = 0; k < N; ++k) sum += root_of_unity(N, k);
    EXPECT_TRUE(sum.is_zero()) << N;
  }
}

TEST(Cyclotomic, TwoCosineValues) {
  // 2 cos(2 pi / 12) = sqrt 3, whose square is 3.
  const auto c = root_of_unity(12, 1) + root_of_unity(12, -1);
  EXPECT_TRUE(c.is_rational() == false);
  EXPECT_EQ(c * c, Cyclotomic(3L));
  // 2 cos(2 pi / 5) = (sqrt 5 - 1) / 2 satisfies x^2 + x - 1 = 0.
  const auto g = root_of_unity(5, 1) + root_of_unity(5, -1);
  EXPECT_TRUE((g * g + g - Cyclotomic(1L)).is_zero());
}

TEST(Cyclotomic, MixedOrdersLiftToLcm) {
  const auto a = root_of_unity(4, 1);
  const auto b = root_of_unity(6, 1);
  const auto c = a * b;
  EXPECT_EQ(c.order(), 12);
  EXPECT_EQ(c, root_of_unity(12, 5));
  EXPECT_TRUE(close((a + b).to_complex(), root(4, 1) + root(6, 1)));
}

TEST(Cyclotomic, InverseAndGalois) {
  const auto x = root_of_unity(15, 2) * Rational(3) + Cyclotomic(Rational(1, 2), 15) - root_of_unity(15, 7);
  EXPECT_EQ(x * x.inverse(), Cyclotomic(1L));
  EXPECT_TRUE(close(x.galois(2).to_complex(),
                    3.0 * root(15, 4) + 0.5 - root(15, 14)));
  EXPECT_THROW(Cyclotomic(Rational(0), 7).inverse(), std::domain_error);
}

TEST(Cyclotomic, RationalValueAndStrings) {
  const Cyclotomic q(frac(6, 4), 12);
  EXPECT_TRUE(q.is_rational());
  EXPECT_EQ(q.rational_value(), Rational(3, 2));
  EXPECT_EQ(q.to_string(), "3/2");
  EXPECT_EQ(root_of_unity(12, 3).to_string(), "1*z^3 (z=z12)");
  EXPECT_EQ(frac(-2, 4), Rational(-1, 2));
}
