#include <gtest/gtest.h>

#include <random>

#include "qhopf/error.hpp"
#include "qhopf/scalar.hpp"

using namespace qhopf;

namespace {

// Dense oracle: plain coefficient vectors, schoolbook product with truncation.
std::vector<Rational> dense_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

TruncScalar S(std::initializer_list<long> co, int order = 4) {
  std::vector<Rational> v;
  for (long c : co) v.emplace_back(c);
  v.resize(order + 1, 0);
  return TruncScalar::from_coefficients(v, order);
}

TruncScalar random_scalar(std::mt19937_64& rng, int order, bool unit = false) {
  std::vector<Rational> v(order + 1);
  for (auto& c : v) {
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = static_cast<long>(rng() % 4) + 1;
    c = Rational(num, den);
    c.canonicalize();
    if (rng() % 3 == 0) c = 0;
  }
  if (unit && v[0] == 0) v[0] = 1;
  return TruncScalar::from_coefficients(v, order);
}

}  // namespace

TEST(Scalar, DifferenceOfSquares) {
  EXPECT_EQ(scalar_arith(S({1, 1}), S({1, -1}), ScalarOp::mul), S({1, 0, -1}));
}

TEST(Scalar, AdditiveIdentity) {
  const TruncScalar a = S({3, 0, 2, -1});
  EXPECT_EQ(scalar_arith(a, TruncScalar(4), ScalarOp::add), a);
  EXPECT_EQ(scalar_arith(a, a, ScalarOp::sub), TruncScalar(4));
}

TEST(Scalar, TruncationKillsHighDegrees) {
  EXPECT_TRUE((TruncScalar::monomial(1, 2, 4) * TruncScalar::monomial(1, 3, 4)).is_zero());
  EXPECT_TRUE(TruncScalar::monomial(1, 5, 4).is_zero());
}

TEST(Scalar, GeometricSeriesInverse) {
  EXPECT_EQ(scalar_inv(S({1, -1})), S({1, 1, 1, 1, 1}));
}

TEST(Scalar, ConstantInverse) { EXPECT_EQ(scalar_inv(S({2})), TruncScalar::constant(Rational(1, 2), 4)); }

TEST(Scalar, NonUnitThrows) {
  EXPECT_THROW(scalar_inv(TruncScalar::monomial(1, 1, 4)), NotAUnit);
  EXPECT_THROW(scalar_inv(TruncScalar(4)), NotAUnit);
}

TEST(Scalar, Valuations) {
  EXPECT_EQ(scalar_valuation(S({0, 0, 1, 1})), 2);
  EXPECT_EQ(scalar_valuation(TruncScalar(4)), 5);
  EXPECT_EQ(scalar_valuation(S({3, -1})), 0);
}

TEST(Scalar, OrderMismatchThrows) {
  EXPECT_THROW(scalar_arith(S({1}, 3), S({1}, 4), ScalarOp::add), OrderMismatch);
  EXPECT_THROW(scalar_arith(S({1}, 3), S({1}, 4), ScalarOp::mul), OrderMismatch);
}

TEST(Scalar, ResultsKeepOrderAndDenseLength) {
  const TruncScalar a = S({1, 2}, 6);
  const TruncScalar p = a * a;
  EXPECT_EQ(p.order(), 6);
  EXPECT_EQ(p.coefficients().size(), 7u);
  EXPECT_EQ(a.inverse().order(), 6);
}

TEST(Scalar, CanonicalRationals) {
  TruncScalar a = TruncScalar::constant(Rational(2, 4), 3);
  EXPECT_EQ(a, TruncScalar::constant(Rational(1, 2), 3));
  EXPECT_EQ(a.coefficient(0).get_den(), 2);
}

TEST(Scalar, Rendering) {
  EXPECT_EQ(S({3}).str(), "3");
  EXPECT_EQ(TruncScalar::monomial(Rational(1, 2), 2, 4).str(), "1/2*h^2");
  EXPECT_EQ(S({1, 1, 0, -2}).str(), "(1 + h - 2*h^3)");
  EXPECT_EQ(TruncScalar(4).str(), "0");
}

TEST(Scalar, ExpSeries) {
  // exp(h) = 1 + h + h^2/2 + h^3/6 + h^4/24
  std::vector<Rational> e = {1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)};
  EXPECT_EQ(exp_series(TruncScalar::monomial(1, 1, 4)), TruncScalar::from_coefficients(e, 4));
}

TEST(ScalarProperty, MatchesDenseOracleAndRingLaws) {
  std::mt19937_64 rng(11);
  for (int order : {0, 1, 4, 7}) {
    for (int trial = 0; trial < 200; ++trial) {
      const TruncScalar a = random_scalar(rng, order), b = random_scalar(rng, order), c = random_scalar(rng, order);
      EXPECT_EQ((a * b).coefficients(), dense_mul(a.coefficients(), b.coefficients()));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      const int expected = std::min(a.valuation() + b.valuation(), order + 1);
      EXPECT_EQ((a * b).valuation(), expected);
    }
  }
}

TEST(ScalarProperty, InverseIsTwoSided) {
  std::mt19937_64 rng(12);
  for (int order : {0, 3, 6}) {
    for (int trial = 0; trial < 100; ++trial) {
      const TruncScalar a = random_scalar(rng, order, true);
      EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_TRUE((a.inverse() * a).is_one());
    }
  }
}

TEST(Scalar, WithOrderAndShift) {
  const TruncScalar a = S({0, 2, 3, 4}, 4);
  EXPECT_EQ(a.with_order(2), S({0, 2, 3}, 2));
  EXPECT_EQ(a.shifted_down(1), S({2, 3, 4}, 4));
  EXPECT_THROW(S({1, 1}).shifted_down(1), Error);
}
