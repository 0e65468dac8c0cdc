#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "eulerquad/errors.hpp"
#include "eulerquad/improper.hpp"
#include "eulerquad/parse.hpp"

namespace eulerquad {
namespace {

double closed_form_root(double eps) { return 2.0 - 2.0 * std::pow(eps, 1.5); }

TEST(ImproperConfig, DefaultSequence) {
  const auto eps = ImproperConfig::default_epsilons();
  ASSERT_EQ(eps.size(), 8u);
  EXPECT_EQ(eps.front(), 0.1);
  EXPECT_DOUBLE_EQ(eps.back(), 1e-8);
}

TEST(ImproperIntegrate, ScaledRootRowsFollowClosedForm) {
  const auto r = improper_integrate(parse("3*sqrt(x)"), 0, 1, SingularEnd::Left);
  ASSERT_EQ(r.rows.size(), 8u);
  double previous = 0;
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.inner_converged);
    EXPECT_NEAR(row.value, closed_form_root(row.epsilon), 1e-4) << row.epsilon;
    EXPECT_GT(closed_form_root(row.epsilon), previous);
    previous = closed_form_root(row.epsilon);
  }
  EXPECT_NEAR(r.rows[1].value, 1.998, 1e-4);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.extrapolated, 2.0, 1e-3);
}

TEST(ImproperIntegrate, RegularIntegrand) {
  const auto r = improper_integrate(parse("x"), 0, 1, SingularEnd::Left);
  for (const auto& row : r.rows) EXPECT_NEAR(row.value, 0.5 - 0.5 * row.epsilon * row.epsilon, 1e-4);
  EXPECT_NEAR(r.extrapolated, 0.5, 1e-4);
  EXPECT_TRUE(r.converged);
}

TEST(ImproperIntegrate, AgreesWithDirectIntegrationForRegularIntegrand) {
  ImproperConfig config;
  const Expr f = parse("exp(x)*cos(x)");
  const auto direct = integrate(f, 0, 1, config.rule, config.inner_tolerance, config.n0, config.max_n);
  const auto r = improper_integrate(f, 0, 1, SingularEnd::Left, config);
  EXPECT_NEAR(r.extrapolated, direct.estimate, 2 * config.inner_tolerance);
}

TEST(ImproperIntegrate, RightSingularEnd) {
  // 1/sqrt(1 - x) has antiderivative -2 sqrt(1 - x); limit value 2.
  ImproperConfig config;
  config.epsilons = {1e-1, 1e-2, 1e-3, 1e-4};
  const auto r = improper_integrate(parse("1/sqrt(1 - x)"), 0, 1, SingularEnd::Right, config);
  EXPECT_EQ(r.singular_end, SingularEnd::Right);
  for (const auto& row : r.rows) EXPECT_NEAR(row.value, 2.0 - 2.0 * std::sqrt(row.epsilon), 1e-4);
}

TEST(ImproperIntegrate, InnerNonConvergenceIsFlagged) {
  ImproperConfig config;
  config.max_n = 1000;
  const auto r = improper_integrate(parse("1/sqrt(x)"), 0, 1, SingularEnd::Left, config);
  EXPECT_FALSE(r.converged);
  EXPECT_FALSE(r.rows.back().inner_converged);
}

TEST(ImproperIntegrate, ExtrapolationUsesLastConvergedRow) {
  const auto r = improper_integrate(parse("1/sqrt(x)"), 0, 1, SingularEnd::Left);
  EXPECT_FALSE(r.converged);
  double last_good = NAN;
  for (const auto& row : r.rows) {
    if (row.inner_converged) last_good = row.value;
  }
  EXPECT_EQ(r.extrapolated, last_good);
  EXPECT_NEAR(r.extrapolated, 2.0, 5e-3);
}

TEST(ImproperIntegrate, ConfigValidation) {
  const Expr f = parse("x");
  ImproperConfig bad;
  bad.epsilons = {0.1, 0.2};
  EXPECT_THROW(improper_integrate(f, 0, 1, SingularEnd::Left, bad), PreconditionError);
  bad.epsilons = {2.0};
  EXPECT_THROW(improper_integrate(f, 0, 1, SingularEnd::Left, bad), PreconditionError);
  bad.epsilons = {};
  EXPECT_THROW(improper_integrate(f, 0, 1, SingularEnd::Left, bad), PreconditionError);
  bad.epsilons = {0.1, -0.1};
  EXPECT_THROW(improper_integrate(f, 0, 1, SingularEnd::Left, bad), PreconditionError);
  EXPECT_THROW(improper_integrate(f, 1, 0, SingularEnd::Left), PreconditionError);
}

TEST(DirectVsImproper, ScaledRootTrail) {
  const auto r = direct_vs_improper(parse("3*sqrt(x)"), 0, 1);
  ASSERT_GE(r.direct.size(), 4u);
  const double printed[] = {1.83153, 1.98438, 1.99848, 1.99985};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(r.direct[i].n, static_cast<std::int64_t>(std::pow(10, i + 1)));
    // Six printed digits; the n = 100 entry is truncated rather than rounded.
    EXPECT_NEAR(r.direct[i].value, printed[i], 1e-5);
  }
  EXPECT_NEAR(r.improper.extrapolated, 2.0, 1e-3);
  EXPECT_LE(std::abs(r.difference), 2e-3);
  // sup |f'| does not exist on [0, 1]; no bound may be reported.
  EXPECT_FALSE(r.M.has_value());
  for (const auto& row : r.direct) EXPECT_FALSE(row.bound.has_value());
}

TEST(DirectVsImproper, ScaledRootErrorDecaysAtLeastLikeOneOverN) {
  const auto r = direct_vs_improper(parse("3*sqrt(x)"), 0, 1);
  for (std::size_t i = 1; i < r.direct.size(); ++i) {
    const double ratio = (2.0 - r.direct[i - 1].value) / (2.0 - r.direct[i].value);
    EXPECT_GE(ratio, 9.5);  // n grows by 10 per row
  }
}

TEST(DirectVsImproper, RegularIntegrandAgrees) {
  ImproperConfig config;
  config.inner_tolerance = 1e-7;
  const auto r = direct_vs_improper(parse("x"), 0, 1, config);
  EXPECT_NEAR(r.direct.back().value, 0.5, 1e-6);
  EXPECT_NEAR(r.improper.extrapolated, 0.5, 1e-6);
  EXPECT_LE(std::abs(r.difference), 1e-6);
  ASSERT_TRUE(r.M.has_value());
  EXPECT_NEAR(*r.M, 1.1, 1e-15);
  EXPECT_TRUE(r.direct.front().bound.has_value());
}

TEST(DirectVsImproper, SquareRootOnZeroToFour) {
  const auto r = direct_vs_improper(parse("sqrt(x)"), 0, 4);
  EXPECT_NEAR(r.direct.back().value, 16.0 / 3.0, 1e-3);
  EXPECT_NEAR(r.improper.extrapolated, 16.0 / 3.0, 1e-3);
}

}  // namespace
}  // namespace eulerquad
