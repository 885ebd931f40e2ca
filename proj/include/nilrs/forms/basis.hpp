#pragma once

#include <array>
#include <string>
#include <string_view>

#include "nilrs/ring/error.hpp"
#include "nilrs/ring/parse.hpp"
#include "nilrs/ring/scalar.hpp"

namespace nilrs {

template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;

template <class T>
Mat4<T> transpose(const Mat4<T>& m) {
  Mat4<T> t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = m[j][i];
  return t;
}

inline Mat4<Scalar> identity4() {
  Mat4<Scalar> m;
  for (int i = 0; i < 4; ++i) m[i][i] = Scalar(1);
  return m;
}

inline Mat4<Scalar> operator*(const Mat4<Scalar>& lhs, const Mat4<Scalar>& rhs) {
  Mat4<Scalar> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Scalar s;
      for (int k = 0; k < 4; ++k) {
        if (!lhs[i][k].is_zero() && !rhs[k][j].is_zero()) s += lhs[i][k] * rhs[k][j];
      }
      out[i][j] = s;
    }
  return out;
}

/// The Lie groups with a registered global frame. R4 is the abelian group
/// (coordinate frame), used for flat reference metrics.
enum class GroupId { H3xR, G4, R4 };

inline std::string_view group_name(GroupId g) {
  switch (g) {
    case GroupId::H3xR: return "H3xR";
    case GroupId::G4: return "G4";
    case GroupId::R4: return "R4";
  }
  return "?";
}

inline GroupId group_from_name(std::string_view name) {
  if (name == "H3xR") return GroupId::H3xR;
  if (name == "G4") return GroupId::G4;
  if (name == "R4") return GroupId::R4;
  throw UnknownGroup(std::string(name));
}

namespace detail {

inline Mat4<Scalar> matrix_from(const std::array<std::array<const char*, 4>, 4>& rows) {
  Mat4<Scalar> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = parse_scalar(rows[i][j]);
  return m;
}

}  // namespace detail

/// Frame matrix F with X_k = sum_a F[a][k] d/dx^a (columns are the
/// left-invariant fields in coordinates).
inline const Mat4<Scalar>& frame_matrix(GroupId g) {
  static const Mat4<Scalar> h3 = detail::matrix_from({{
      {"1", "0", "0", "0"},
      {"0", "1", "0", "0"},
      {"0", "x", "1", "0"},
      {"0", "0", "0", "1"},
  }});
  static const Mat4<Scalar> g4 = detail::matrix_from({{
      {"1", "0", "0", "0"},
      {"0", "1", "0", "0"},
      {"0", "x", "1", "0"},
      {"0", "x^2/2", "x", "1"},
  }});
  static const Mat4<Scalar> r4 = identity4();
  switch (g) {
    case GroupId::H3xR: return h3;
    case GroupId::G4: return g4;
    case GroupId::R4: return r4;
  }
  throw UnknownGroup("unregistered group id");
}

/// Coframe matrix T with omega_i = sum_a T[i][a] dx^a (rows are the dual
/// one-forms in coordinates).
inline const Mat4<Scalar>& coframe_matrix(GroupId g) {
  static const Mat4<Scalar> h3 = detail::matrix_from({{
      {"1", "0", "0", "0"},
      {"0", "1", "0", "0"},
      {"0", "-x", "1", "0"},
      {"0", "0", "0", "1"},
  }});
  static const Mat4<Scalar> g4 = detail::matrix_from({{
      {"1", "0", "0", "0"},
      {"0", "1", "0", "0"},
      {"0", "-x", "1", "0"},
      {"0", "x^2/2", "-x", "1"},
  }});
  static const Mat4<Scalar> r4 = identity4();
  switch (g) {
    case GroupId::H3xR: return h3;
    case GroupId::G4: return g4;
    case GroupId::R4: return r4;
  }
  throw UnknownGroup("unregistered group id");
}

/// Tags the basis that a form, field or tensor is expressed in.
struct Basis {
  enum class Kind { Coordinate, Frame };
  Kind kind = Kind::Coordinate;
  GroupId group = GroupId::R4;

  static Basis coordinate() { return {}; }
  static Basis frame(GroupId g) { return {Kind::Frame, g}; }

  bool is_coordinate() const { return kind == Kind::Coordinate; }

  friend bool operator==(const Basis& lhs, const Basis& rhs) {
    if (lhs.kind != rhs.kind) return false;
    return lhs.kind == Kind::Coordinate || lhs.group == rhs.group;
  }

  std::string to_string() const {
    return is_coordinate() ? "coordinate" : "frame(" + std::string(group_name(group)) + ")";
  }
};

}  // namespace nilrs
