#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "gen.hpp"

using namespace nilrs;
using nilrs::testing::Gen;
using nilrs::testing::sample_binding;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }

Inertia eigen_inertia(const Mat4<Rational>& m) {
  Eigen::Matrix4d a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = m[i][j].get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(a);
  Inertia in;
  for (int i = 0; i < 4; ++i) {
    const double ev = es.eigenvalues()(i);
    if (std::abs(ev) < 1e-12) ++in.zero;
    else (ev > 0 ? in.positive : in.negative) += 1;
  }
  return in;
}

}  // namespace

TEST(Group, StructureConstants) {
  const auto& h = group(GroupId::H3xR).structure;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Rational expected = 0;
        if (k == 2 && i == 0 && j == 1) expected = 1;
        if (k == 2 && i == 1 && j == 0) expected = -1;
        EXPECT_EQ(h[k][i][j], expected);
      }
  const auto& g = group(GroupId::G4).structure;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        Rational expected = 0;
        if (k == 2 && i == 0 && j == 1) expected = 1;
        if (k == 3 && i == 0 && j == 2) expected = 1;
        EXPECT_EQ(g[k][i][j], expected);
      }
}

TEST(Group, Duality) {
  for (GroupId id : {GroupId::H3xR, GroupId::G4}) {
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        EXPECT_EQ(pair_coframe(id, i, group(id).frame[j - 1]), Scalar(i == j ? 1 : 0));
  }
  // <w4, X2> on G4 = x^2/2 * 1 - x * x + 1 * x^2/2 = 0, expanded by hand.
  EXPECT_TRUE(pair_coframe(GroupId::G4, 4, VectorField::frame_field(GroupId::G4, 2)).is_zero());
  EXPECT_THROW(group_from_name("SU2"), UnknownGroup);
}

TEST(Group, Pushforward) {
  const VectorField X2 = change_basis(VectorField::frame_field(GroupId::H3xR, 2), Basis::coordinate());
  EXPECT_EQ(left_translation_pushforward(GroupId::H3xR, {1, 2, 3, 4}, X2), X2);
  Gen gen(3);
  VectorField X;
  for (auto& c : X.comp) c = Scalar(gen.poly(3, 2, false));
  EXPECT_EQ(left_translation_pushforward(GroupId::H3xR, {0, 0, 0, 0}, X), X);
  const VectorField dz = VectorField::coordinate_field(3);
  EXPECT_EQ(left_translation_pushforward(GroupId::H3xR, {1, 0, 0, 0}, dz), dz);
  EXPECT_THROW(left_translation_pushforward(GroupId::G4, {1, 0, 0, 0}, dz), NoGroupLaw);
}

TEST(Group, FrameIsLeftInvariant) {
  Gen gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Point a{gen.rational(), gen.rational(), gen.rational(), gen.rational()};
    for (int k = 1; k <= 4; ++k) {
      const VectorField Xk = change_basis(VectorField::frame_field(GroupId::H3xR, k), Basis::coordinate());
      EXPECT_EQ(left_translation_pushforward(GroupId::H3xR, a, Xk), Xk);
    }
  }
}

TEST(Catalog, FrameEntries) {
  const auto g01 = metric("g0_1").frame;
  EXPECT_EQ(g01(2, 3), Scalar(1));
  EXPECT_EQ(g01(3, 2), Scalar(1));
  EXPECT_EQ(g01(2, 2), Scalar(0));
  const auto gd = metric("general_diag").frame;
  EXPECT_EQ(gd(1, 1), S("a1"));
  EXPECT_EQ(gd(2, 2), S("a2"));
  EXPECT_EQ(gd(3, 3), S("a3"));
  EXPECT_THROW(metric("g5_lambda"), UnknownFamily);
}

TEST(Catalog, CoordinateExpressionsMatchList) {
  int checked = 0;
  for (const auto& fam : families()) {
    if (fam.coordinate_expression.empty()) continue;
    const SymTensor2 listed = parse_quadratic(fam.coordinate_expression, kCoordinateDifferentials, Basis::coordinate());
    EXPECT_EQ(metric(fam.id).g, listed) << fam.id;
    ++checked;
  }
  EXPECT_EQ(checked, 13);
  EXPECT_EQ(metric("g0_2").g,
            parse_quadratic("dx^2 - 2*x*dy^2 + dw^2 + 2*dy*dz", kCoordinateDifferentials, Basis::coordinate()));
}

TEST(Catalog, GeneralFormSpecializes) {
  for (const char* id : {"g_mu", "g_lambda_plus", "g_lambda_minus"}) {
    const MetricFamily& fam = family(id);
    const MetricInstance gen = metric("general_diag", fam.general_binding);
    const MetricInstance target = metric(id);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        EXPECT_EQ(gen.g(i, j).replace(Symbol::a2, general_form_a2(fam)), target.g(i, j)) << id;
  }
}

TEST(Catalog, ConstraintsAndSignature) {
  EXPECT_THROW(metric("g1_lambda", {{Symbol::lambda, -1}}), ConstraintViolation);
  EXPECT_THROW(metric("g_mu", {{Symbol::mu, 0}}), ConstraintViolation);
  EXPECT_THROW(metric("g0_1", {{Symbol::lambda, 1}}), ConstraintViolation);
  EXPECT_THROW(metric("gA_plus", {{Symbol::a, -1}, {Symbol::b, 0}, {Symbol::c, 1}}), SignatureNotLorentz);
  EXPECT_THROW(metric("general_diag", {{Symbol::a1, 1}, {Symbol::a2, 1}, {Symbol::a3, 1}}), SignatureNotLorentz);
  EXPECT_THROW(metric("gA", {{Symbol::a, 1}, {Symbol::b, 1}, {Symbol::c, 1}}), SingularMetric);
  // Auxiliary families accept any nonsingular signature.
  EXPECT_NO_THROW(metric("diag4", {{Symbol::f1, 1}, {Symbol::f2, 1}, {Symbol::f3, 1}, {Symbol::f4, 1}}));
  EXPECT_THROW(metric("diag4", {{Symbol::f1, 1}, {Symbol::f2, 1}, {Symbol::f3, 0}, {Symbol::f4, 1}}), SingularMetric);
}

TEST(Catalog, SignatureAtIdentityAgreesWithEigenvalues) {
  const MetricInstance g1 = metric("g1_lambda", {{Symbol::lambda, 1}});
  const auto m = evaluate_at_identity(g1.g, {});
  const Inertia exact = inertia(m), numeric = eigen_inertia(m);
  EXPECT_EQ(exact.positive, 3);
  EXPECT_EQ(exact.negative, 1);
  EXPECT_EQ(numeric.positive, 3);
  EXPECT_EQ(numeric.negative, 1);
  for (const auto& fam : families()) {
    if (!fam.lorentz) continue;
    const MetricInstance inst = metric(fam.id, sample_binding(fam));
    const Inertia in = inertia(evaluate_at_identity(inst.g, {}));
    EXPECT_EQ(in.negative, 1) << fam.id;
    EXPECT_EQ(in.positive, 3) << fam.id;
  }
}

TEST(CatalogProperties, InertiaMatchesEigenvalues) {
  Gen gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    Mat4<Rational> m;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) m[i][j] = m[j][i] = gen.uniform(0, 2) ? gen.rational(3) : Rational(0);
    const Inertia exact = inertia(m), numeric = eigen_inertia(m);
    EXPECT_EQ(exact.positive, numeric.positive);
    EXPECT_EQ(exact.negative, numeric.negative);
    EXPECT_EQ(exact.zero, numeric.zero);
  }
}

TEST(CatalogProperties, CoordinateMatrixCongruentToFrameMatrix) {
  Gen gen(6);
  for (const auto& fam : families()) {
    if (!fam.lorentz) continue;
    const MetricInstance inst = metric(fam.id, sample_binding(fam));
    for (int trial = 0; trial < 5; ++trial) {
      Binding at;
      for (Symbol s : kCoordinates) at[s] = gen.rational();
      Mat4<Rational> m;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = inst.g(i, j).eval(at);
      const Inertia in = inertia(m);
      EXPECT_EQ(in.positive, 3) << fam.id;
      EXPECT_EQ(in.negative, 1) << fam.id;
    }
  }
}
