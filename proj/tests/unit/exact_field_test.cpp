#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "eulerquad/errors.hpp"
#include "eulerquad/indicator.hpp"
#include "eulerquad/qsqrt2.hpp"
#include "eulerquad/rational.hpp"

namespace eulerquad {
namespace {

const QSqrt2 kZero;
const QSqrt2 kOne(Rational(1));
const QSqrt2 kSplit = QSqrt2::sqrt2_minus_1();

TEST(Rational, Arithmetic) {
  EXPECT_EQ(rat_arith(Rational(1, 2), ArithOp::Add, Rational(1, 3)), Rational(5, 6));
  EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
  EXPECT_EQ(rat_arith(Rational(7, 3), ArithOp::Mul, Rational(0)).to_string(), "0/1");
  EXPECT_EQ(rat_arith(Rational(1, 2), ArithOp::Sub, Rational(3, 4)), Rational(-1, 4));
  EXPECT_EQ(rat_arith(Rational(1, 2), ArithOp::Div, Rational(-3, 4)), Rational(-2, 3));
  EXPECT_THROW(rat_arith(Rational(1), ArithOp::Div, Rational(0)), PreconditionError);
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(0, -5).to_string(), "0/1");
  EXPECT_EQ(Rational(0).denominator(), 1);
  EXPECT_THROW(Rational(1, 0), PreconditionError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/10"),
            Rational(mpz_class("12345678901234567890123456789"), mpz_class(1)));
  EXPECT_THROW(Rational::parse("1/0"), PreconditionError);
  EXPECT_THROW(Rational::parse("a/2"), PreconditionError);
  EXPECT_THROW(Rational::parse("1/"), PreconditionError);
  EXPECT_THROW(Rational::parse(""), PreconditionError);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(QSqrt2, ConjugateProduct) {
  const QSqrt2 prod = qs2_arith(kSplit, ArithOp::Mul, QSqrt2(Rational(1), Rational(1)));
  EXPECT_EQ(prod, kOne);
  EXPECT_TRUE(prod.is_rational());
}

TEST(QSqrt2, SelfDivision) { EXPECT_EQ(qs2_arith(QSqrt2::sqrt2(), ArithOp::Div, QSqrt2::sqrt2()), kOne); }

TEST(QSqrt2, SquareOfOnePlusRootTwo) {
  const QSqrt2 u(Rational(1), Rational(1));
  const QSqrt2 sq = u * u;
  EXPECT_EQ(sq, QSqrt2(Rational(3), Rational(2)));
  EXPECT_NEAR(sq.to_double(), std::pow(1 + std::numbers::sqrt2, 2), 1e-12);
}

TEST(QSqrt2, DivisionByZero) { EXPECT_THROW(kOne / kZero, PreconditionError); }

TEST(QSqrt2, Rendering) {
  EXPECT_EQ(kSplit.to_string(), "-1/1 + 1/1*sqrt(2)");
  EXPECT_EQ((kSplit / QSqrt2(Rational(10))).to_string(), "-1/10 + 1/10*sqrt(2)");
}

TEST(QSqrt2, ExactSign) {
  EXPECT_EQ(kSplit.sign(), 1);
  EXPECT_EQ((-kSplit).sign(), -1);
  // 1.4142 < sqrt(2) < 1.4143
  EXPECT_EQ(QSqrt2(Rational(-14142, 10000), Rational(1)).sign(), 1);
  EXPECT_EQ(QSqrt2(Rational(-14143, 10000), Rational(1)).sign(), -1);
  EXPECT_EQ(kZero.sign(), 0);
  EXPECT_LT(kZero, kSplit);
  EXPECT_LT(kSplit, kOne);
}

class QSqrt2Laws : public ::testing::Test {
 protected:
  QSqrt2 random_element() {
    auto r = [&] { return Rational(dist_(rng_), 1 + (rng_() % 9)); };
    return QSqrt2(r(), r());
  }
  std::mt19937_64 rng_{123};
  std::uniform_int_distribution<std::int64_t> dist_{-9, 9};
};

TEST_F(QSqrt2Laws, FieldAxioms) {
  for (int i = 0; i < 500; ++i) {
    const QSqrt2 x = random_element(), y = random_element(), z = random_element();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x - x, kZero);
    if (!x.is_zero()) {
      EXPECT_EQ(x / x, kOne);
      EXPECT_EQ((y / x) * x, y);
    }
  }
}

TEST_F(QSqrt2Laws, RationalityIsZeroSqrt2Part) {
  for (int i = 0; i < 200; ++i) {
    const QSqrt2 x = random_element();
    EXPECT_EQ(x.is_rational(), x.sqrt2_part().is_zero());
  }
}

TEST_F(QSqrt2Laws, OrderAgreesWithFloatingPointWhenGapIsClear) {
  int compared = 0;
  for (int i = 0; i < 2000; ++i) {
    const QSqrt2 x = random_element(), y = random_element();
    const double gap = x.to_double() - y.to_double();
    if (std::abs(gap) <= 1e-9) continue;
    ++compared;
    EXPECT_EQ(x < y, gap < 0);
  }
  EXPECT_GT(compared, 1500);
}

TEST(IndicatorSum, UnitIntervalIsAllRational) {
  const auto r = indicator_euler_sum(kZero, kOne, 1000);
  EXPECT_EQ(r.rational_node_count, 1000);
  EXPECT_EQ(r.value, kOne);
}

TEST(IndicatorSum, IrrationalRightEndpoint) {
  const auto r = indicator_euler_sum(kZero, kSplit, 10);
  EXPECT_EQ(r.rational_node_count, 1);
  EXPECT_EQ(r.value, kSplit / QSqrt2(Rational(10)));
  // Hand enumeration: x_k = k(sqrt2 - 1)/10 has sqrt(2)-part k/10.
  for (std::int64_t k = 0; k < 10; ++k) {
    const QSqrt2 node = kSplit * QSqrt2(Rational(k, 10));
    EXPECT_EQ(node.sqrt2_part(), Rational(k, 10));
  }
}

TEST(IndicatorSum, IrrationalLeftEndpoint) {
  const auto r = indicator_euler_sum(kSplit, kOne, 10);
  EXPECT_EQ(r.rational_node_count, 0);
  EXPECT_EQ(r.value, kZero);
  for (std::int64_t k = 0; k <= 10; ++k) {
    const QSqrt2 node = kSplit + (kOne - kSplit) * QSqrt2(Rational(k, 10));
    EXPECT_EQ(node, QSqrt2(Rational(2 * k - 10, 10), Rational(10 - k, 10)));
    EXPECT_EQ(node.is_rational(), k == 10);
  }
}

TEST(IndicatorSum, OnlyFirstNodeRationalForEveryN) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    EXPECT_EQ(indicator_euler_sum(kZero, kSplit, n).rational_node_count, 1) << n;
  }
}

TEST(IndicatorSum, RationalEndpointsGiveWidth) {
  const QSqrt2 a(Rational(-2, 3)), b(Rational(5, 7));
  for (std::int64_t n : {1, 2, 9, 64}) EXPECT_EQ(indicator_euler_sum(a, b, n).value, b - a);
}

TEST(IndicatorSum, NumericCrossCheck) {
  for (std::int64_t n : {1, 7, 1000, 1'000'000}) {
    const QSqrt2 step = kSplit / QSqrt2(Rational(n));
    EXPECT_NEAR(step.to_double(), (std::numbers::sqrt2 - 1) / n, 1e-15);
  }
  EXPECT_NEAR(indicator_euler_sum(kZero, kSplit, 1000).value.to_double(), (std::numbers::sqrt2 - 1) / 1000, 1e-15);
}

TEST(IndicatorSum, Preconditions) {
  EXPECT_THROW(indicator_euler_sum(kOne, kZero, 3), PreconditionError);
  EXPECT_THROW(indicator_euler_sum(kZero, kZero, 3), PreconditionError);
  EXPECT_THROW(indicator_euler_sum(kZero, kOne, 0), PreconditionError);
}

TEST(AdditivityDemo, IrrationalSplit) {
  const std::vector<std::int64_t> ns{10, 100, 1000};
  const auto rep = additivity_demo(kSplit, ns);
  ASSERT_EQ(rep.rows.size(), 3u);
  for (const auto& row : rep.rows) {
    EXPECT_EQ(row.full, kOne);
    EXPECT_EQ(row.left, kSplit / QSqrt2(Rational(row.n)));
    EXPECT_EQ(row.right, kZero);
    EXPECT_EQ(row.defect, kOne - kSplit / QSqrt2(Rational(row.n)));
  }
}

TEST(AdditivityDemo, RationalSplitHasNoDefect) {
  const std::vector<std::int64_t> ns{10};
  const auto rep = additivity_demo(QSqrt2(Rational(1, 2)), ns);
  EXPECT_EQ(rep.rows[0].left, QSqrt2(Rational(1, 2)));
  EXPECT_EQ(rep.rows[0].right, QSqrt2(Rational(1, 2)));
  EXPECT_EQ(rep.rows[0].defect, kZero);
}

TEST(AdditivityDemo, SingleNode) {
  const std::vector<std::int64_t> ns{1};
  const auto rep = additivity_demo(kSplit, ns);
  EXPECT_EQ(rep.rows[0].full, kOne);
  EXPECT_EQ(rep.rows[0].left, kSplit);
  EXPECT_EQ(rep.rows[0].right, kZero);
}

TEST(AdditivityDemo, SplitMustBeInsideUnitInterval) {
  const std::vector<std::int64_t> ns{10};
  EXPECT_THROW(additivity_demo(QSqrt2(Rational(2)), ns), PreconditionError);
  EXPECT_THROW(additivity_demo(kZero, ns), PreconditionError);
  EXPECT_THROW(additivity_demo(kOne, ns), PreconditionError);
}

}  // namespace
}  // namespace eulerquad
