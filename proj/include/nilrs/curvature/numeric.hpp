#pragma once

#include <cmath>
#include <vector>

#include "nilrs/curvature/levi_civita.hpp"

namespace nilrs {

using Vec4d = std::array<double, 4>;
using Mat4d = std::array<std::array<double, 4>, 4>;

/// Polynomial in the coordinates with double coefficients, for fast
/// repeated evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;

  /// Requires a fully bound scalar (only coordinates remain).
  explicit CompiledPoly(const Scalar& s) {
    if (!s.denominator().is_constant()) throw UnboundSymbol("parameter left in " + s.to_string());
    const double inv = 1.0 / s.denominator().constant_value().get_d();
    for (const auto& t : s.numerator().terms()) {
      if (!(t.mono.coordinate_part() == t.mono)) throw UnboundSymbol("parameter left in " + s.to_string());
      terms_.push_back({t.coef.get_d() * inv, {t.mono.exp[0], t.mono.exp[1], t.mono.exp[2], t.mono.exp[3]}});
    }
  }

  double operator()(const Vec4d& p) const {
    double total = 0;
    for (const auto& t : terms_) {
      double v = t.coef;
      for (int i = 0; i < 4; ++i)
        for (int e = 0; e < t.exp[i]; ++e) v *= p[i];
      total += v;
    }
    return total;
  }

 private:
  struct Term {
    double coef;
    std::array<int, 4> exp;
  };
  std::vector<Term> terms_;
};

inline Mat4d invert(Mat4d a) {
  Mat4d inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = 1;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (std::abs(a[p][c]) < 1e-14) throw SingularMetric("numeric metric is singular at the sample point");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const double piv = a[c][c];
    for (int j = 0; j < 4; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == c) continue;
      const double f = a[r][c];
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/// Ricci tensor at a point from finite differences of the metric alone:
/// Christoffels from central differences of g, Riemann from central
/// differences of those Christoffels, both with step h.
class NumericCurvatureOracle {
 public:
  NumericCurvatureOracle(const SymTensor2& g_coord, double h) : h_(h) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) g_[i][j] = CompiledPoly(g_coord(i, j));
  }

  Mat4d metric(const Vec4d& p) const {
    Mat4d m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[i][j] = g_[i][j](p);
    return m;
  }

  Array3<double> christoffel(const Vec4d& p) const {
    std::array<Mat4d, 4> dg;  // dg[k] = d_k g
    for (int k = 0; k < 4; ++k) {
      Vec4d plus = p, minus = p;
      plus[k] += h_;
      minus[k] -= h_;
      const Mat4d gp = metric(plus), gm = metric(minus);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) dg[k][i][j] = (gp[i][j] - gm[i][j]) / (2 * h_);
    }
    const Mat4d ginv = invert(metric(p));
    Array3<double> out{};
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          double acc = 0;
          for (int l = 0; l < 4; ++l) acc += ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
          out[k][i][j] = 0.5 * acc;
        }
    return out;
  }

  Mat4d ricci(const Vec4d& p) const {
    std::array<Array3<double>, 4> dG;  // dG[m] = d_m Gamma
    for (int m = 0; m < 4; ++m) {
      Vec4d plus = p, minus = p;
      plus[m] += h_;
      minus[m] -= h_;
      const auto gp = christoffel(plus), gm = christoffel(minus);
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) dG[m][k][i][j] = (gp[k][i][j] - gm[k][i][j]) / (2 * h_);
    }
    const auto G = christoffel(p);
    // Ric_jk = R^i_ijk = d_i G^i_jk - d_j G^i_ik + G^i_im G^m_jk - G^i_jm G^m_ik.
    Mat4d out{};
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        double acc = 0;
        for (int i = 0; i < 4; ++i) {
          acc += dG[i][i][j][k] - dG[j][i][i][k];
          for (int m = 0; m < 4; ++m) acc += G[i][i][m] * G[m][j][k] - G[i][j][m] * G[m][i][k];
        }
        out[j][k] = acc;
      }
    return out;
  }

 private:
  double h_;
  Mat4<CompiledPoly> g_;
};

inline Mat4d numeric_curvature_oracle(const MetricInstance& g, const Vec4d& point, double h = 1e-4) {
  if (!g.fully_bound()) throw UnboundSymbol("numeric oracle needs every parameter of " + std::string(g.family->id) + " bound");
  return NumericCurvatureOracle(g.g, h).ricci(point);
}

}  // namespace nilrs
