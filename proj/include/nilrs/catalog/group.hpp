#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "nilrs/forms/kform.hpp"
#include "nilrs/forms/sym_tensor.hpp"
#include "nilrs/forms/vector_field.hpp"

namespace nilrs {

using Point = std::array<Rational, 4>;

/// Left multiplication by a fixed element, as polynomial images of x, y, z, w.
using GroupLaw = std::function<std::array<Poly, 4>(const Point&)>;

struct GroupSpec {
  GroupId id;
  std::array<VectorField, 4> frame;  // coordinate basis
  std::array<KForm, 4> coframe;      // coordinate basis
  /// c[k][i][j] with [X_i, X_j] = sum_k c[k][i][j] X_k, 0-based.
  std::array<Mat4<Rational>, 4> structure{};
  std::optional<GroupLaw> left_multiplication;
  std::function<Point(const Point&)> inverse;
};

namespace detail {

inline Poly coord(std::size_t i) { return Poly::symbol(coordinate(i)); }

/// a . p = (a1 + x, a2 + y, a3 + z + a1*y, a4 + w). The frame X2 = d/dy + x d/dz
/// is invariant under this law.
inline std::array<Poly, 4> h3xr_left_multiplication(const Point& a) {
  return {Poly(a[0]) + coord(0), Poly(a[1]) + coord(1), Poly(a[2]) + coord(2) + coord(1).scaled(a[0]),
          Poly(a[3]) + coord(3)};
}

inline Point h3xr_inverse(const Point& a) { return {-a[0], -a[1], -a[2] + a[0] * a[1], -a[3]}; }

inline GroupSpec build_group(GroupId id) {
  GroupSpec spec;
  spec.id = id;
  const auto& F = frame_matrix(id);
  const auto& T = coframe_matrix(id);
  for (int k = 0; k < 4; ++k) {
    for (int a = 0; a < 4; ++a) spec.frame[k].comp[a] = F[a][k];
    spec.coframe[k] = KForm::one_form(Basis::coordinate(), T[k]);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Scalar pairing;
      for (int a = 0; a < 4; ++a) pairing += T[i][a] * F[a][j];
      if (!(pairing == Scalar(i == j ? 1 : 0))) throw Error("frame and coframe are not dual for " + std::string(group_name(id)));
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto bracket = change_basis(lie_bracket(spec.frame[i], spec.frame[j]), Basis::frame(id));
      for (int k = 0; k < 4; ++k) {
        if (bracket.comp[k].has_coordinates()) throw Error("frame bracket is not left-invariant");
        spec.structure[k][i][j] = bracket.comp[k].constant_value();
      }
    }
  if (id == GroupId::H3xR) {
    spec.left_multiplication = &h3xr_left_multiplication;
    spec.inverse = &h3xr_inverse;
  } else if (id == GroupId::R4) {
    spec.left_multiplication = [](const Point& a) {
      return std::array<Poly, 4>{Poly(a[0]) + coord(0), Poly(a[1]) + coord(1), Poly(a[2]) + coord(2), Poly(a[3]) + coord(3)};
    };
    spec.inverse = [](const Point& a) { return Point{-a[0], -a[1], -a[2], -a[3]}; };
  }
  return spec;
}

}  // namespace detail

/// Registered group data, verified (duality, constant structure constants)
/// on first use.
inline const GroupSpec& group(GroupId id) {
  static const GroupSpec h3 = detail::build_group(GroupId::H3xR);
  static const GroupSpec g4 = detail::build_group(GroupId::G4);
  static const GroupSpec r4 = detail::build_group(GroupId::R4);
  switch (id) {
    case GroupId::H3xR: return h3;
    case GroupId::G4: return g4;
    case GroupId::R4: return r4;
  }
  throw UnknownGroup("unregistered group id");
}

/// (L_a)_* X as a field on the group: Y(q) = J_a X(a^-1 q), where J_a is the
/// Jacobian of left multiplication. Coordinate basis in and out.
inline VectorField left_translation_pushforward(GroupId id, const Point& a, const VectorField& X_in) {
  const GroupSpec& spec = group(id);
  if (!spec.left_multiplication) throw NoGroupLaw(std::string(group_name(id)));
  const auto X = change_basis(X_in, Basis::coordinate());
  const auto image = (*spec.left_multiplication)(a);
  const auto preimage = (*spec.left_multiplication)(spec.inverse(a));
  VectorField out;
  for (int r = 0; r < 4; ++r) {
    Scalar acc;
    for (int s = 0; s < 4; ++s) {
      const Scalar jac(image[r].partial(coordinate(static_cast<std::size_t>(s))));
      if (!jac.is_zero()) acc += jac * X.comp[s];
    }
    out.comp[r] = acc.compose_coordinates(preimage);
  }
  return out;
}

}  // namespace nilrs
