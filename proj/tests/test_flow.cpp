#include <gtest/gtest.h>

#include <cmath>

#include "gen.hpp"

using namespace nilrs;
using nilrs::testing::Gen;

namespace {

// From (1, 1, s, 1) with s = +-1 the flow keeps f1 = f2 = u and f3 * u = s,
// so u' = s / u^2 and u^3 = 1 + 3 s t.
FlowVector exact_symmetric(double s, double t) {
  const double u = std::cbrt(1 + 3 * s * t);
  return {u, u, s / u, 1};
}

double max_error(const FlowVector& a, const FlowVector& b) {
  double e = 0;
  for (int i = 0; i < 4; ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

FlowVector final_state(const FlowVector& f0, double step, double t_end) {
  return integrate({0, f0}, {step, t_end, 1e-9, 1}).back().f;
}

}  // namespace

TEST(FlowField, SymbolicRightHandSide) {
  // Hand-derived Ricci of the diagonal Heisenberg frame metric:
  // Ric = -f3/(2 f2) w1^2 - f3/(2 f1) w2^2 + f3^2/(2 f1 f2) w3^2.
  const auto& rhs = DiagonalFlowField::instance().symbolic();
  EXPECT_EQ(rhs[0], parse_scalar("f3/f2"));
  EXPECT_EQ(rhs[1], parse_scalar("f3/f1"));
  EXPECT_EQ(rhs[2], parse_scalar("-f3^2/(f1*f2)"));
  EXPECT_EQ(rhs[3], Scalar(0));
}

TEST(FlowField, NumericValues) {
  const FlowVector v = diagonal_ricci_rhs({1, 1, 1, 1});
  EXPECT_EQ(v, (FlowVector{1, 1, -1, 0}));
  const FlowVector w = diagonal_ricci_rhs({2, 4, -1, 3});
  EXPECT_DOUBLE_EQ(w[0], -0.25);
  EXPECT_DOUBLE_EQ(w[1], -0.5);
  EXPECT_DOUBLE_EQ(w[2], -0.125);
  EXPECT_DOUBLE_EQ(w[3], 0);
  EXPECT_THROW(diagonal_ricci_rhs({1, 0, 1, 1}), DegenerateMetric);
  EXPECT_THROW(diagonal_ricci_rhs({1, 1, NAN, 1}), DegenerateMetric);
}

TEST(FlowFieldProperties, ScaleInvariantAndSignSymmetric) {
  // Ric is unchanged by g -> c g, and (f1, -f2, -f3, f4) maps the flow to itself.
  Gen gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    FlowVector f;
    for (auto& x : f) x = gen.nonzero_rational().get_d();
    const double c = gen.nonzero_rational().get_d();
    const FlowVector base = diagonal_ricci_rhs(f);
    FlowVector scaled = f, flipped = f;
    for (auto& x : scaled) x *= c;
    flipped[1] = -f[1];
    flipped[2] = -f[2];
    const FlowVector a = diagonal_ricci_rhs(scaled), b = diagonal_ricci_rhs(flipped);
    for (int i = 0; i < 4; ++i) {
      EXPECT_NEAR(a[i], base[i], 1e-12 * (1 + std::abs(base[i])));
      const double sign = (i == 1 || i == 2) ? -1 : 1;
      EXPECT_NEAR(b[i], sign * base[i], 1e-12 * (1 + std::abs(base[i])));
    }
  }
}

TEST(Flow, MatchesClosedFormSolution) {
  const FlowVector f = final_state({1, 1, 1, 1}, 1e-3, 0.1);
  EXPECT_LT(max_error(f, exact_symmetric(1, 0.1)), 1e-12);
  EXPECT_NEAR(f[0], 1.0913929, 1e-7);
  EXPECT_NEAR(f[2], 0.9162603, 1e-7);
  const FlowVector g = final_state({1, 1, -1, 1}, 1e-3, 0.2);
  EXPECT_LT(max_error(g, exact_symmetric(-1, 0.2)), 1e-10);
}

TEST(Flow, FourthOrderConvergence) {
  const FlowVector exact = exact_symmetric(1, 1.0);
  double previous = 0;
  for (double h : {0.1, 0.05, 0.025}) {
    const double err = max_error(final_state({1, 1, 1, 1}, h, 1.0), exact);
    if (previous > 0) {
      EXPECT_GT(previous / err, 12);
      EXPECT_LT(previous / err, 20);
    }
    previous = err;
  }
}

TEST(Flow, InitialSlopeIsMinusTwoRicci) {
  const double h = 1e-4;
  const auto traj = integrate({0, {1, 1, 1, 1}}, {h, 2 * h, 1e-9, 1});
  ASSERT_EQ(traj.size(), 3u);
  const FlowVector rhs = diagonal_ricci_rhs({1, 1, 1, 1});
  for (int i = 0; i < 4; ++i) {
    const double slope = (-3 * traj[0].f[i] + 4 * traj[1].f[i] - traj[2].f[i]) / (2 * h);
    EXPECT_NEAR(slope, rhs[i], 1e-6);
  }
}

TEST(Flow, F4StaysConstant) {
  for (const auto& s : integrate({0, {1, 2, 3, -4}}, {1e-3, 0.5, 1e-9, 1})) EXPECT_EQ(s.f[3], -4);
}

TEST(Flow, SamplingAndEndpoint) {
  const auto traj = integrate({0, {1, 1, 1, 1}}, {0.03, 0.1, 1e-9, 2});
  // Steps end at 0.03, 0.06, 0.09, 0.1; every second one plus the last is kept.
  ASSERT_EQ(traj.size(), 3u);
  EXPECT_DOUBLE_EQ(traj[1].t, 0.06);
  EXPECT_DOUBLE_EQ(traj[2].t, 0.1);
}

TEST(Flow, DegenerationIsReported) {
  EXPECT_THROW(integrate({0, {1, 1, 0, 1}}, {}), DegenerateMetric);
  // u^3 = 1 - 3t vanishes at t = 1/3.
  try {
    integrate({0, {1, 1, -1, 1}}, {1e-3, 1.0, 1e-9, 1});
    FAIL() << "expected degeneration";
  } catch (const DegenerateMetric& e) {
    const std::string what = e.what();
    const auto at = what.find("t = ");
    ASSERT_NE(at, std::string::npos);
    const double t = std::stod(what.substr(at + 4));
    EXPECT_GT(t, 0.3);
    EXPECT_LT(t, 1.0 / 3);
  }
}

TEST(Flow, RejectsBadConfig) {
  EXPECT_THROW(integrate({0, {1, 1, 1, 1}}, {0, 1, 1e-9, 1}), InvalidArgument);
  EXPECT_THROW(integrate({0, {1, 1, 1, 1}}, {0.1, 1, 0, 1}), InvalidArgument);
  EXPECT_THROW(integrate({0, {1, 1, 1, 1}}, {0.1, 1, 1e-9, 0}), InvalidArgument);
  EXPECT_THROW(integrate({2, {1, 1, 1, 1}}, {0.1, 1, 1e-9, 1}), InvalidArgument);
}
