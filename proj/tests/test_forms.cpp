#include <gtest/gtest.h>

#include "gen.hpp"

using namespace nilrs;
using nilrs::testing::Gen;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }

const Basis kCoord = Basis::coordinate();

KForm e(std::initializer_list<int> idx, Basis b = kCoord, const Scalar& c = Scalar(1)) {
  return KForm::basis_element(b, idx, c);
}

KForm random_form(Gen& gen, int degree, Basis b = kCoord) {
  KForm f(degree, b);
  for (unsigned m = 0; m < 16; ++m) {
    if (std::popcount(m) != degree || gen.uniform(0, 2) == 0) continue;
    f.add(static_cast<KForm::Mask>(m), Scalar(gen.poly(3, 3)));
  }
  return f;
}

VectorField random_field(Gen& gen, int degree = 2) {
  VectorField v;
  for (auto& c : v.comp) c = Scalar(gen.poly(3, degree, false));
  return v;
}

SymTensor2 random_tensor(Gen& gen, Basis b = kCoord) {
  SymTensor2 t(b);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) t.set(i, j, Scalar(gen.poly(3, 2)));
  return t;
}

// Gauss-Jordan inverse over the scalar ring, used as an oracle for the
// hard-coded frame matrices.
Mat4<Scalar> invert(Mat4<Scalar> a) {
  Mat4<Scalar> inv = identity4();
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (a[p][c].is_zero()) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Scalar piv = a[c][c];
    for (int j = 0; j < 4; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Scalar f = a[r][c];
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

TEST(Wedge, BasisElements) {
  const Basis fr = Basis::frame(GroupId::H3xR);
  const KForm w12 = wedge(e({1}, fr), e({2}, fr));
  EXPECT_EQ(w12, e({1, 2}, fr));
  EXPECT_EQ(wedge(e({2}, fr), e({1}, fr)), -w12);
  EXPECT_EQ(wedge(e({2}, kCoord, S("x")), e({3})), e({2, 3}, kCoord, S("x")));
}

TEST(Wedge, Errors) {
  EXPECT_THROW(wedge(e({1}), e({1}, Basis::frame(GroupId::G4))), BasisMismatch);
  EXPECT_THROW(wedge(e({1, 2, 3}), e({2, 4})), DegreeOverflow);
}

TEST(ExteriorDerivative, MaurerCartanExamples) {
  // H3xR: d(dz - x dy) = -dx^dy.
  const KForm w3 = e({3}) - e({2}, kCoord, S("x"));
  EXPECT_EQ(exterior_derivative(w3), -e({1, 2}));
  const Basis h3 = Basis::frame(GroupId::H3xR);
  EXPECT_EQ(exterior_derivative(e({3}, h3)), -e({1, 2}, h3));
  // G4: d(x^2/2 dy - x dz + dw) = -dx^(dz - x dy).
  const KForm w4 = e({2}, kCoord, S("x^2/2")) - e({3}, kCoord, S("x")) + e({4});
  EXPECT_EQ(exterior_derivative(w4), -wedge(e({1}), w3));
  const Basis g4 = Basis::frame(GroupId::G4);
  EXPECT_EQ(exterior_derivative(e({4}, g4)), -e({1, 3}, g4));
  EXPECT_EQ(exterior_derivative(e({3}, g4)), -e({1, 2}, g4));
  EXPECT_TRUE(exterior_derivative(e({1})).is_zero());
}

TEST(LieBracket, FrameBrackets) {
  using VF = VectorField;
  const VF h1 = VF::frame_field(GroupId::H3xR, 1), h2 = VF::frame_field(GroupId::H3xR, 2);
  EXPECT_EQ(change_basis(lie_bracket(h1, h2), Basis::frame(GroupId::H3xR)), VF::frame_field(GroupId::H3xR, 3));
  const VF g1 = VF::frame_field(GroupId::G4, 1), g3 = VF::frame_field(GroupId::G4, 3);
  EXPECT_EQ(change_basis(lie_bracket(g1, g3), Basis::frame(GroupId::G4)), VF::frame_field(GroupId::G4, 4));
  Gen gen(7);
  const VF X = random_field(gen);
  EXPECT_EQ(lie_bracket(X, X), VF{});
}

TEST(LieDerivative, Examples) {
  const SymTensor2 flat = parse_quadratic("dx^2 + 3*dy^2 + 2*dz*dw - a1*dw^2", kCoordinateDifferentials, kCoord);
  EXPECT_TRUE(lie_derivative_metric(VectorField::coordinate_field(1), flat).is_zero());

  VectorField X;
  X.comp[0] = S("x");
  const SymTensor2 g = parse_quadratic("dx^2 + dy^2 + y*dz^2", kCoordinateDifferentials, kCoord);
  EXPECT_EQ(lie_derivative_metric(X, g)(0, 0), Scalar(2));

  // General diagonal form: the (1,1) entry of the template is 2 P1_x.
  const auto tmpl = lie_template(GroupId::H3xR, metric("general_diag").g);
  EXPECT_EQ(tmpl[0][0], PForm::generator(PKey{1, 0}, Scalar(2)));
}

TEST(LieDerivative, TemplateAgreesWithDirectFormula) {
  Gen gen(8);
  for (const char* fam : {"general_diag", "g0_1", "g0_3", "g1_lambda", "g2_lambda"}) {
    const MetricInstance m = metric(fam);
    const auto tmpl = lie_template(m.group, m.g);
    for (int trial = 0; trial < 5; ++trial) {
      VectorField P{Basis::frame(m.group), {}};
      for (auto& c : P.comp) c = Scalar(gen.poly(4, 3, false));
      const auto direct = lie_derivative_metric(P, m.g);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          Scalar via = tmpl[i][j].constant();
          for (const auto& [key, coef] : tmpl[i][j].coefficients()) {
            const Scalar& pk = P.comp[key.k - 1];
            via += coef * (key.deriv < 0 ? pk : pk.partial(coordinate(static_cast<std::size_t>(key.deriv))));
          }
          EXPECT_EQ(via, direct(i, j)) << fam << " entry " << i << j;
        }
    }
  }
}

TEST(ChangeBasis, Coframe) {
  const KForm w3 = change_basis(e({3}, Basis::frame(GroupId::H3xR)), kCoord);
  EXPECT_EQ(w3, e({3}) - e({2}, kCoord, S("x")));
  // dw on G4 in the frame cobasis: x^2/2 w2 + x w3 + w4.
  const Basis g4 = Basis::frame(GroupId::G4);
  const KForm dw = change_basis(e({4}), g4);
  const Mat4<Scalar> inverse = invert(coframe_matrix(GroupId::G4));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(dw.component(KForm::mask_of({i + 1})), inverse[3][i]);
  EXPECT_EQ(dw.component({2}), S("x^2/2"));
  EXPECT_EQ(dw.component({3}), S("x"));
  EXPECT_EQ(dw.component({4}), S("1"));
}

TEST(ChangeBasis, FrameMatricesAreMutualInverses) {
  for (GroupId g : {GroupId::H3xR, GroupId::G4}) {
    const Mat4<Scalar> inv = invert(coframe_matrix(g));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) EXPECT_EQ(inv[i][j], frame_matrix(g)[i][j]);
  }
}

TEST(ChangeBasis, RoundTrips) {
  Gen gen(9);
  for (GroupId g : {GroupId::H3xR, GroupId::G4}) {
    const Basis fr = Basis::frame(g);
    for (int trial = 0; trial < 20; ++trial) {
      const SymTensor2 t = random_tensor(gen);
      EXPECT_EQ(change_basis(change_basis(t, fr), kCoord), t);
      const VectorField v = random_field(gen);
      EXPECT_EQ(change_basis(change_basis(v, fr), kCoord), v);
      for (int d = 0; d <= 4; ++d) {
        const KForm f = random_form(gen, d);
        EXPECT_EQ(change_basis(change_basis(f, fr), kCoord), f);
      }
    }
  }
}

TEST(FormProperties, DSquaredIsZero) {
  Gen gen(10);
  for (int trial = 0; trial < 30; ++trial) {
    for (int d = 0; d <= 2; ++d) {
      EXPECT_TRUE(exterior_derivative(exterior_derivative(random_form(gen, d))).is_zero());
      const Basis fr = Basis::frame(trial % 2 ? GroupId::G4 : GroupId::H3xR);
      EXPECT_TRUE(exterior_derivative(exterior_derivative(random_form(gen, d, fr))).is_zero());
    }
  }
}

TEST(FormProperties, WedgeAssociativeAndGradedAntisymmetric) {
  Gen gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int p = gen.uniform(0, 2), q = gen.uniform(0, 2 - (p == 2)), r = gen.uniform(0, 4 - p - q);
    const KForm a = random_form(gen, p), b = random_form(gen, q), c = random_form(gen, std::min(r, 4 - p - q));
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    const Scalar sign((p * q) % 2 == 0 ? 1 : -1);
    EXPECT_EQ(wedge(a, b), sign * wedge(b, a));
  }
}

TEST(FormProperties, LeibnizForD) {
  Gen gen(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int p = gen.uniform(0, 2);
    const KForm a = random_form(gen, p), b = random_form(gen, 1);
    const Scalar sign(p % 2 == 0 ? 1 : -1);
    EXPECT_EQ(exterior_derivative(wedge(a, b)), wedge(exterior_derivative(a), b) + sign * wedge(a, exterior_derivative(b)));
  }
}

TEST(FormProperties, MaurerCartanMatchesBrackets) {
  for (GroupId g : {GroupId::H3xR, GroupId::G4}) {
    const Basis fr = Basis::frame(g);
    for (int k = 0; k < 4; ++k) {
      KForm expected(2, fr);
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          const auto bracket = change_basis(
              lie_bracket(VectorField::frame_field(g, i + 1), VectorField::frame_field(g, j + 1)), fr);
          expected += KForm::basis_element(fr, {i + 1, j + 1}, -bracket.comp[k]);
        }
      EXPECT_EQ(exterior_derivative(KForm::basis_element(fr, {k + 1})), expected);
    }
  }
}

TEST(FormProperties, JacobiIdentity) {
  Gen gen(13);
  for (int trial = 0; trial < 20; ++trial) {
    const VectorField X = random_field(gen), Y = random_field(gen), Z = random_field(gen);
    const VectorField a = lie_bracket(X, lie_bracket(Y, Z));
    const VectorField b = lie_bracket(Y, lie_bracket(Z, X));
    const VectorField c = lie_bracket(Z, lie_bracket(X, Y));
    for (int k = 0; k < 4; ++k) EXPECT_TRUE((a.comp[k] + b.comp[k] + c.comp[k]).is_zero());
    const VectorField xy = lie_bracket(X, Y), yx = lie_bracket(Y, X);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(xy.comp[k], -yx.comp[k]);
  }
}

TEST(FormProperties, LieDerivativeIsSymmetricAndLinear) {
  Gen gen(14);
  for (int trial = 0; trial < 20; ++trial) {
    const SymTensor2 g = random_tensor(gen);
    const VectorField X = random_field(gen), Y = random_field(gen);
    VectorField sum;
    for (int k = 0; k < 4; ++k) sum.comp[k] = X.comp[k] + Y.comp[k];
    EXPECT_EQ(lie_derivative_metric(sum, g), lie_derivative_metric(X, g) + lie_derivative_metric(Y, g));
  }
}
