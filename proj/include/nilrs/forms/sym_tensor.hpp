#pragma once

#include <string>
#include <tuple>

#include "nilrs/forms/vector_field.hpp"
#include "nilrs/ring/linear_form.hpp"

namespace nilrs {

/// Symmetric 2-tensor with components of type S in a tagged basis.
template <class S>
class BasicSymTensor2 {
 public:
  BasicSymTensor2() = default;
  explicit BasicSymTensor2(Basis basis) : basis_(basis) {}

  /// Builds from a full matrix; throws unless it is exactly symmetric.
  BasicSymTensor2(Basis basis, const Mat4<S>& m) : basis_(basis), m_(m) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!(m_[i][j] == m_[j][i])) throw InvalidArgument("matrix is not symmetric");
  }

  const Basis& basis() const { return basis_; }
  const Mat4<S>& matrix() const { return m_; }
  const S& operator()(int i, int j) const { return m_[i][j]; }

  /// Sets (i, j) and (j, i), 0-based.
  void set(int i, int j, const S& v) {
    m_[i][j] = v;
    m_[j][i] = v;
  }

  bool is_zero() const {
    for (const auto& row : m_)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
    return true;
  }

  friend BasicSymTensor2 operator+(const BasicSymTensor2& lhs, const BasicSymTensor2& rhs) {
    if (!(lhs.basis_ == rhs.basis_)) throw BasisMismatch(lhs.basis_.to_string() + " vs " + rhs.basis_.to_string());
    BasicSymTensor2 out(lhs.basis_);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.m_[i][j] = lhs.m_[i][j] + rhs.m_[i][j];
    return out;
  }

  friend BasicSymTensor2 operator*(const Scalar& s, const BasicSymTensor2& t) {
    BasicSymTensor2 out(t.basis_);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.m_[i][j] = s * t.m_[i][j];
    return out;
  }

  friend bool operator==(const BasicSymTensor2& lhs, const BasicSymTensor2& rhs) {
    return lhs.basis_ == rhs.basis_ && lhs.m_ == rhs.m_;
  }

 private:
  Basis basis_ = Basis::coordinate();
  Mat4<S> m_{};
};

using SymTensor2 = BasicSymTensor2<Scalar>;

/// Congruence by the coframe (frame -> coordinates: g = T^t G T) or by the
/// frame matrix (coordinates -> frame: G = F^t g F).
template <class S>
BasicSymTensor2<S> change_basis(const BasicSymTensor2<S>& t, Basis to) {
  if (t.basis() == to) return t;
  if (!t.basis().is_coordinate() && !to.is_coordinate()) return change_basis(change_basis(t, Basis::coordinate()), to);
  const auto& M = to.is_coordinate() ? coframe_matrix(t.basis().group) : frame_matrix(to.group);
  // out_ab = sum_pq M[p][a] t_pq M[q][b] in both directions.
  auto at = [&](int p, int q) -> const Scalar& { return M[p][q]; };
  Mat4<S> half{};
  for (int p = 0; p < 4; ++p)
    for (int b = 0; b < 4; ++b) {
      S acc{};
      for (int q = 0; q < 4; ++q)
        if (!at(q, b).is_zero() && !t(p, q).is_zero()) acc = acc + at(q, b) * t(p, q);
      half[p][b] = acc;
    }
  Mat4<S> out{};
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      S acc{};
      for (int p = 0; p < 4; ++p)
        if (!at(p, a).is_zero() && !half[p][b].is_zero()) acc = acc + at(p, a) * half[p][b];
      out[a][b] = acc;
      out[b][a] = acc;
    }
  return BasicSymTensor2<S>(to, out);
}

/// (L_X g)_ij = X^k d_k g_ij + g_kj d_i X^k + g_ik d_j X^k in coordinates.
template <class S>
BasicSymTensor2<S> lie_derivative_metric(const BasicVectorField<S>& X_in, const SymTensor2& g_in) {
  const auto X = change_basis(X_in, Basis::coordinate());
  const auto g = change_basis(g_in, Basis::coordinate());
  std::array<std::array<S, 4>, 4> dX{};  // dX[i][k] = d_i X^k
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) dX[i][k] = X.comp[k].partial(coordinate(static_cast<std::size_t>(i)));
  BasicSymTensor2<S> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      S acc{};
      for (int k = 0; k < 4; ++k) {
        const Scalar dg = g(i, j).partial(coordinate(static_cast<std::size_t>(k)));
        if (!dg.is_zero() && !X.comp[k].is_zero()) acc = acc + dg * X.comp[k];
        if (!g(k, j).is_zero() && !dX[i][k].is_zero()) acc = acc + g(k, j) * dX[i][k];
        if (!g(i, k).is_zero() && !dX[j][k].is_zero()) acc = acc + g(i, k) * dX[j][k];
      }
      out.set(i, j, acc);
    }
  return out;
}

/// Placeholder generator for the Lie-derivative template: the frame
/// component P^k (deriv < 0) or its coordinate partial d_deriv P^k.
struct PKey {
  int k = 1;
  int deriv = -1;
  friend auto operator<=>(const PKey&, const PKey&) = default;
};

inline std::string pkey_name(const PKey& key) {
  static constexpr const char* coords[] = {"x", "y", "z", "w"};
  std::string s = "P" + std::to_string(key.k);
  if (key.deriv >= 0) s += std::string("_") + coords[key.deriv];
  return s;
}

using PForm = LinearForm<PKey>;

/// L_X g for X = sum_k P^k X_k with unknown P^k, as coordinate-indexed
/// entries linear in P^k and d_v P^k. Coefficient of P^k is
/// X_k(g_ij) + g_aj d_i F[a][k] + g_ia d_j F[a][k]; coefficient of d_v P^k is
/// g_aj F[a][k] [i = v] + g_ia F[a][k] [j = v].
inline Mat4<PForm> lie_template(GroupId group, const SymTensor2& g_in) {
  const auto g = change_basis(g_in, Basis::coordinate());
  const auto& F = frame_matrix(group);
  Mat4<PForm> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      PForm entry;
      for (int k = 0; k < 4; ++k) {
        Scalar c0;
        for (int a = 0; a < 4; ++a) {
          const Symbol va = coordinate(static_cast<std::size_t>(a));
          if (!F[a][k].is_zero()) c0 += F[a][k] * g(i, j).partial(va);
          c0 += g(a, j) * F[a][k].partial(coordinate(static_cast<std::size_t>(i)));
          c0 += g(i, a) * F[a][k].partial(coordinate(static_cast<std::size_t>(j)));
        }
        entry.add(PKey{k + 1, -1}, c0);
        for (int v = 0; v < 4; ++v) {
          Scalar c1;
          for (int a = 0; a < 4; ++a) {
            if (i == v) c1 += g(a, j) * F[a][k];
            if (j == v) c1 += g(i, a) * F[a][k];
          }
          entry.add(PKey{k + 1, v}, c1);
        }
      }
      out[i][j] = entry;
      out[j][i] = entry;
    }
  return out;
}

}  // namespace nilrs
