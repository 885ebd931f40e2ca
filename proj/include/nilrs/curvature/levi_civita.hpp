#pragma once

#include <array>

#include "nilrs/catalog/metric.hpp"

namespace nilrs {

template <class T>
using Array3 = std::array<std::array<std::array<T, 4>, 4>, 4>;
template <class T>
using Array4 = std::array<Array3<T>, 4>;

inline Scalar determinant(const Mat4<Scalar>& m) {
  // Laplace expansion along the first row over 3x3 minors.
  auto det3 = [&m](int r0, int r1, int r2, int c0, int c1, int c2) {
    return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
           m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
           m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
  };
  Scalar det;
  for (int c = 0; c < 4; ++c) {
    if (m[0][c].is_zero()) continue;
    int cols[3], n = 0;
    for (int k = 0; k < 4; ++k)
      if (k != c) cols[n++] = k;
    const Scalar minor = det3(1, 2, 3, cols[0], cols[1], cols[2]);
    det += (c % 2 == 0 ? m[0][c] : -m[0][c]) * minor;
  }
  return det;
}

/// Exact inverse by adjugate over determinant. The determinant must be a
/// nonzero, coordinate-free scalar.
inline Mat4<Scalar> inverse(const Mat4<Scalar>& m) {
  const Scalar det = determinant(m);
  if (det.is_zero()) throw SingularMetric("determinant vanishes");
  if (det.has_coordinates()) throw SingularMetric("determinant depends on coordinates: " + det.to_string());
  Mat4<Scalar> adj;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mat4<Scalar> minor{};
      // Cofactor of (j, i): replace row j by the unit vector e_i.
      minor = m;
      for (int k = 0; k < 4; ++k) minor[j][k] = Scalar(k == i ? 1 : 0);
      adj[i][j] = determinant(minor);
    }
  const Scalar inv_det = Scalar(1) / det;
  for (auto& row : adj)
    for (auto& v : row) v *= inv_det;
  return adj;
}

inline Mat4<Scalar> inverse_metric(const MetricInstance& g) { return inverse(g.g.matrix()); }

/// Gamma^k_ij (first index up) in coordinates.
struct Christoffel {
  Array3<Scalar> gamma{};
  const Scalar& operator()(int k, int i, int j) const { return gamma[k][i][j]; }
};

inline Christoffel christoffel(const SymTensor2& g_in, const Mat4<Scalar>& ginv) {
  const SymTensor2 g = change_basis(g_in, Basis::coordinate());
  Array3<Scalar> dg{};  // dg[k][i][j] = d_k g_ij
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) dg[k][i][j] = g(i, j).partial(coordinate(static_cast<std::size_t>(k)));
  Christoffel out;
  const Scalar half(Rational(1, 2));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      std::array<Scalar, 4> lowered;  // Gamma_{l,ij}
      for (int l = 0; l < 4; ++l) lowered[l] = half * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
      for (int k = 0; k < 4; ++k) {
        Scalar acc;
        for (int l = 0; l < 4; ++l)
          if (!ginv[k][l].is_zero() && !lowered[l].is_zero()) acc += ginv[k][l] * lowered[l];
        out.gamma[k][i][j] = acc;
        out.gamma[k][j][i] = acc;
      }
    }
  return out;
}

inline Christoffel christoffel(const MetricInstance& g) { return christoffel(g.g, inverse_metric(g)); }

/// R^l_ijk with R(d_i, d_j) d_k = R^l_ijk d_l:
/// R^l_ijk = d_i G^l_jk - d_j G^l_ik + G^l_im G^m_jk - G^l_jm G^m_ik.
struct Riemann {
  Array4<Scalar> r{};
  const Scalar& operator()(int l, int i, int j, int k) const { return r[l][i][j][k]; }
};

inline Riemann riemann(const Christoffel& G) {
  Riemann out;
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          Scalar acc = G(l, j, k).partial(coordinate(static_cast<std::size_t>(i))) -
                       G(l, i, k).partial(coordinate(static_cast<std::size_t>(j)));
          for (int m = 0; m < 4; ++m) {
            if (!G(l, i, m).is_zero() && !G(m, j, k).is_zero()) acc += G(l, i, m) * G(m, j, k);
            if (!G(l, j, m).is_zero() && !G(m, i, k).is_zero()) acc -= G(l, j, m) * G(m, i, k);
          }
          out.r[l][i][j][k] = acc;
          out.r[l][j][i][k] = -acc;
        }
  return out;
}

/// Fully lowered R_lijk = g_lm R^m_ijk.
inline Array4<Scalar> lower(const Riemann& R, const SymTensor2& g) {
  Array4<Scalar> out{};
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          Scalar acc;
          for (int m = 0; m < 4; ++m)
            if (!g(l, m).is_zero() && !R(m, i, j, k).is_zero()) acc += g(l, m) * R(m, i, j, k);
          out[l][i][j][k] = acc;
        }
  return out;
}

struct RicciData {
  SymTensor2 ricci;        // coordinate basis
  SymTensor2 ricci_frame;  // group frame basis
  Scalar scalar;
  Mat4<Scalar> frame_operator;  // G^-1 Ric in the frame
};

inline RicciData ricci(const MetricInstance& g, const Riemann& R, const Mat4<Scalar>& ginv) {
  RicciData out;
  SymTensor2 ric(Basis::coordinate());
  for (int j = 0; j < 4; ++j)
    for (int k = j; k < 4; ++k) {
      Scalar acc;
      for (int i = 0; i < 4; ++i) acc += R(i, i, j, k);
      ric.set(j, k, acc);
    }
  out.ricci = ric;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      if (!ginv[j][k].is_zero()) out.scalar += ginv[j][k] * ric(j, k);
  out.ricci_frame = change_basis(ric, g.frame.basis());
  const Mat4<Scalar> Ginv = inverse(g.frame.matrix());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Scalar acc;
      for (int k = 0; k < 4; ++k)
        if (!Ginv[i][k].is_zero()) acc += Ginv[i][k] * out.ricci_frame(k, j);
      out.frame_operator[i][j] = acc;
    }
  return out;
}

/// Everything the curvature module derives from one metric.
struct CurvatureData {
  Mat4<Scalar> ginv;
  Christoffel gamma;
  Riemann riem;
  RicciData ric;
};

inline CurvatureData curvature(const MetricInstance& g) {
  CurvatureData out;
  out.ginv = inverse_metric(g);
  out.gamma = christoffel(g.g, out.ginv);
  out.riem = riemann(out.gamma);
  out.ric = ricci(g, out.riem, out.ginv);
  return out;
}

inline RicciData ricci(const MetricInstance& g) { return curvature(g).ric; }

}  // namespace nilrs
