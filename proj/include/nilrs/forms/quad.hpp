#pragma once

#include <string>
#include <string_view>

#include "nilrs/forms/sym_tensor.hpp"
#include "nilrs/ring/parse.hpp"

namespace nilrs {

/// Element of the symmetric algebra on four one-forms, truncated at degree
/// two. Lets quadratic-form text such as "dx^2 + 2*dz*dw - 2*x*dy*dw" or
/// "w1^2 + 2*w3*w4" be parsed into a symmetric matrix; the product of two
/// one-forms a, b is the symmetric tensor (a (x) b + b (x) a) / 2.
class Quad {
 public:
  Quad() = default;
  Quad(const Scalar& s) : scalar_(s) {}      // NOLINT(google-explicit-constructor)
  Quad(const Rational& q) : scalar_(q) {}    // NOLINT(google-explicit-constructor)

  static Quad generator(int i) {
    Quad q;
    q.degree_ = 1;
    q.lin_[static_cast<std::size_t>(i)] = Scalar(1);
    return q;
  }

  int degree() const { return degree_; }
  const Mat4<Scalar>& quadratic() const { return quad_; }

  bool is_zero() const {
    if (degree_ == 0) return scalar_.is_zero();
    if (degree_ == 1) {
      for (const auto& v : lin_)
        if (!v.is_zero()) return false;
      return true;
    }
    for (const auto& row : quad_)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
    return true;
  }

  Quad operator-() const { return Quad(Scalar(-1)) * *this; }

  friend Quad operator+(const Quad& lhs, const Quad& rhs) {
    if (lhs.degree_ != rhs.degree_) {
      if (lhs.is_zero()) return rhs;
      if (rhs.is_zero()) return lhs;
      throw ParseError("sum of terms with different form degree");
    }
    Quad out = lhs;
    out.scalar_ += rhs.scalar_;
    for (int i = 0; i < 4; ++i) {
      out.lin_[i] += rhs.lin_[i];
      for (int j = 0; j < 4; ++j) out.quad_[i][j] += rhs.quad_[i][j];
    }
    return out;
  }
  friend Quad operator-(const Quad& lhs, const Quad& rhs) { return lhs + (-rhs); }

  friend Quad operator*(const Quad& lhs, const Quad& rhs) {
    if (lhs.degree_ + rhs.degree_ > 2) throw ParseError("product of degree above two");
    if (lhs.degree_ > rhs.degree_) return rhs * lhs;
    Quad out;
    out.degree_ = lhs.degree_ + rhs.degree_;
    if (lhs.degree_ == 0) {
      const Scalar& s = lhs.scalar_;
      out.scalar_ = s * rhs.scalar_;
      for (int i = 0; i < 4; ++i) {
        out.lin_[i] = s * rhs.lin_[i];
        for (int j = 0; j < 4; ++j) out.quad_[i][j] = s * rhs.quad_[i][j];
      }
      return out;
    }
    const Scalar half = Scalar(Rational(1, 2));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.quad_[i][j] = half * (lhs.lin_[i] * rhs.lin_[j] + lhs.lin_[j] * rhs.lin_[i]);
    return out;
  }

  friend Quad operator/(const Quad& lhs, const Quad& rhs) {
    if (rhs.degree_ != 0) throw ParseError("division by a form");
    return Quad(Scalar(1) / rhs.scalar_) * lhs;
  }

 private:
  int degree_ = 0;
  Scalar scalar_;
  std::array<Scalar, 4> lin_{};
  Mat4<Scalar> quad_{};
};

/// Parses a quadratic form whose one-form generators are named by `names`
/// (e.g. {"dx","dy","dz","dw"} or {"w1","w2","w3","w4"}); other identifiers
/// resolve to symbols of the ring.
inline SymTensor2 parse_quadratic(std::string_view text, const std::array<std::string_view, 4>& names, Basis basis) {
  ParseContext<Quad> ctx{[&names](std::string_view id) -> std::optional<Quad> {
    for (int i = 0; i < 4; ++i)
      if (names[i] == id) return Quad::generator(i);
    return symbol_value<Quad>(id);
  }};
  const Quad q = parse_expression<Quad>(text, ctx);
  if (q.degree() != 2 && !q.is_zero()) throw ParseError("not a quadratic form: " + std::string(text));
  return SymTensor2(basis, q.quadratic());
}

inline constexpr std::array<std::string_view, 4> kCoordinateDifferentials = {"dx", "dy", "dz", "dw"};
inline constexpr std::array<std::string_view, 4> kFrameCoforms = {"w1", "w2", "w3", "w4"};

}  // namespace nilrs
