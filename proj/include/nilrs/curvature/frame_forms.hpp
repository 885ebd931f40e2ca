#pragma once

#include "nilrs/curvature/levi_civita.hpp"
#include "nilrs/forms/kform.hpp"

namespace nilrs {

/// omega[i][k] = omega^i_k, one-forms in the frame cobasis.
using ConnectionForms = Mat4<KForm>;
/// Omega[i][k] = Omega^i_k, two-forms in the frame cobasis.
using CurvatureForms = Mat4<KForm>;

/// Frame connection coefficients Gt^i_jk with nabla_{X_j} X_k = Gt^i_jk X_i,
/// from the coordinate Christoffels:
/// Gt^i_jk = T[i][a] (X_j(F[a][k]) + Gamma^a_bc F[b][j] F[c][k]).
inline Array3<Scalar> frame_connection_coefficients(GroupId group, const Christoffel& G) {
  const auto& F = frame_matrix(group);
  const auto& T = coframe_matrix(group);
  Array3<Scalar> out{};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      std::array<Scalar, 4> v;  // coordinate components of nabla_{X_j} X_k
      for (int a = 0; a < 4; ++a) {
        Scalar acc;
        for (int b = 0; b < 4; ++b) {
          if (F[b][j].is_zero()) continue;
          acc += F[b][j] * F[a][k].partial(coordinate(static_cast<std::size_t>(b)));
          for (int c = 0; c < 4; ++c)
            if (!G(a, b, c).is_zero() && !F[c][k].is_zero()) acc += G(a, b, c) * F[b][j] * F[c][k];
        }
        v[a] = acc;
      }
      for (int i = 0; i < 4; ++i) {
        Scalar acc;
        for (int a = 0; a < 4; ++a)
          if (!T[i][a].is_zero()) acc += T[i][a] * v[a];
        out[i][j][k] = acc;
      }
    }
  return out;
}

inline ConnectionForms frame_connection_matrix(GroupId group, const Christoffel& G) {
  const Basis fr = Basis::frame(group);
  const auto coeff = frame_connection_coefficients(group, G);
  ConnectionForms out;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      std::array<Scalar, 4> comps;
      for (int j = 0; j < 4; ++j) comps[j] = coeff[i][j][k];
      out[i][k] = KForm::one_form(fr, comps);
    }
  return out;
}

inline ConnectionForms frame_connection_matrix(const MetricInstance& g) {
  return frame_connection_matrix(g.group, christoffel(g));
}

/// Second structure equation: Omega = d omega + omega ^ omega.
inline CurvatureForms frame_curvature_matrix(const ConnectionForms& w) {
  CurvatureForms out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      KForm acc = exterior_derivative(w[i][j]);
      for (int k = 0; k < 4; ++k) {
        if (w[i][k].is_zero() || w[k][j].is_zero()) continue;
        acc += wedge(w[i][k], w[k][j]);
      }
      out[i][j] = acc;
    }
  return out;
}

/// Frame components Rf^d_abc = T[d][l] R^l_ijk F[i][a] F[j][b] F[k][c].
inline Array4<Scalar> frame_riemann(GroupId group, const Riemann& R) {
  const auto& F = frame_matrix(group);
  const auto& T = coframe_matrix(group);
  // Contract one index at a time.
  Array4<Scalar> a1{}, a2{}, a3{}, out{};
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int c = 0; c < 4; ++c) {
          Scalar acc;
          for (int k = 0; k < 4; ++k)
            if (!F[k][c].is_zero() && !R(l, i, j, k).is_zero()) acc += R(l, i, j, k) * F[k][c];
          a1[l][i][j][c] = acc;
        }
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          Scalar acc;
          for (int j = 0; j < 4; ++j)
            if (!F[j][b].is_zero() && !a1[l][i][j][c].is_zero()) acc += a1[l][i][j][c] * F[j][b];
          a2[l][i][b][c] = acc;
        }
  for (int l = 0; l < 4; ++l)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          Scalar acc;
          for (int i = 0; i < 4; ++i)
            if (!F[i][a].is_zero() && !a2[l][i][b][c].is_zero()) acc += a2[l][i][b][c] * F[i][a];
          a3[l][a][b][c] = acc;
        }
  for (int d = 0; d < 4; ++d)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          Scalar acc;
          for (int l = 0; l < 4; ++l)
            if (!T[d][l].is_zero() && !a3[l][a][b][c].is_zero()) acc += T[d][l] * a3[l][a][b][c];
          out[d][a][b][c] = acc;
        }
  return out;
}

}  // namespace nilrs
