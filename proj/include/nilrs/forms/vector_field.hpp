#pragma once

#include <array>
#include <string>

#include "nilrs/forms/basis.hpp"

namespace nilrs {

/// Vector field with components of type S in a tagged basis. S is Scalar for
/// ordinary fields; the soliton module instantiates it with a trigonometric
/// extension. S needs + - *, S * Scalar, Scalar * S and partial(Symbol).
template <class S>
struct BasicVectorField {
  Basis basis = Basis::coordinate();
  std::array<S, 4> comp{};

  static BasicVectorField frame_field(GroupId g, int k) {
    BasicVectorField v{Basis::frame(g), {}};
    v.comp[static_cast<std::size_t>(k - 1)] = S(Scalar(1));
    return v;
  }

  static BasicVectorField coordinate_field(int a) {
    BasicVectorField v;
    v.comp[static_cast<std::size_t>(a - 1)] = S(Scalar(1));
    return v;
  }

  friend bool operator==(const BasicVectorField& lhs, const BasicVectorField& rhs) {
    return lhs.basis == rhs.basis && lhs.comp == rhs.comp;
  }
};

using VectorField = BasicVectorField<Scalar>;

template <class S>
BasicVectorField<S> change_basis(const BasicVectorField<S>& v, Basis to) {
  if (v.basis == to) return v;
  if (!v.basis.is_coordinate() && !to.is_coordinate()) return change_basis(change_basis(v, Basis::coordinate()), to);
  // Frame to coordinates uses F (V = F P); the reverse uses the coframe (P = T V).
  const auto& M = to.is_coordinate() ? frame_matrix(v.basis.group) : coframe_matrix(to.group);
  BasicVectorField<S> out{to, {}};
  for (int i = 0; i < 4; ++i) {
    S acc{};
    for (int j = 0; j < 4; ++j) {
      if (!M[i][j].is_zero() && !v.comp[j].is_zero()) acc = acc + M[i][j] * v.comp[j];
    }
    out.comp[i] = acc;
  }
  return out;
}

/// [X, Y]^k = X^i d_i Y^k - Y^i d_i X^k, returned in coordinates.
template <class S>
BasicVectorField<S> lie_bracket(const BasicVectorField<S>& X_in, const BasicVectorField<S>& Y_in) {
  const auto X = change_basis(X_in, Basis::coordinate());
  const auto Y = change_basis(Y_in, Basis::coordinate());
  BasicVectorField<S> out;
  for (int k = 0; k < 4; ++k) {
    S acc{};
    for (int i = 0; i < 4; ++i) {
      const Symbol v = coordinate(static_cast<std::size_t>(i));
      if (!X.comp[i].is_zero()) acc = acc + X.comp[i] * Y.comp[k].partial(v);
      if (!Y.comp[i].is_zero()) acc = acc - Y.comp[i] * X.comp[k].partial(v);
    }
    out.comp[k] = acc;
  }
  return out;
}

/// Pairing of a frame one-form omega_i with a coordinate-basis field.
inline Scalar pair_coframe(GroupId g, int i, const VectorField& v) {
  const auto V = change_basis(v, Basis::coordinate());
  const auto& T = coframe_matrix(g);
  Scalar acc;
  for (int a = 0; a < 4; ++a) acc += T[i - 1][a] * V.comp[a];
  return acc;
}

}  // namespace nilrs
