#pragma once

#include <array>
#include <string>

#include "nilrs/forms/vector_field.hpp"
#include "nilrs/ring/parse.hpp"
#include "nilrs/ring/scalar.hpp"

namespace nilrs {

/// a + b cos w + c sin w with Scalar a, b, c. Closed under coordinate
/// partials; products are allowed only when one side has no trig part.
class ExtendedScalar {
 public:
  enum Part { One = 0, Cos = 1, Sin = 2 };

  ExtendedScalar() = default;
  ExtendedScalar(const Scalar& s) { p_[One] = s; }            // NOLINT(google-explicit-constructor)
  ExtendedScalar(const Rational& q) { p_[One] = Scalar(q); }  // NOLINT(google-explicit-constructor)
  ExtendedScalar(int v) { p_[One] = Scalar(v); }              // NOLINT(google-explicit-constructor)

  static ExtendedScalar basis(Part part, const Scalar& coef = Scalar(1)) {
    ExtendedScalar e;
    e.p_[part] = coef;
    return e;
  }

  const Scalar& part(int k) const { return p_[static_cast<std::size_t>(k)]; }
  Scalar& part(int k) { return p_[static_cast<std::size_t>(k)]; }

  bool is_zero() const { return p_[0].is_zero() && p_[1].is_zero() && p_[2].is_zero(); }
  bool is_plain() const { return p_[Cos].is_zero() && p_[Sin].is_zero(); }

  ExtendedScalar operator-() const {
    ExtendedScalar e;
    for (int k = 0; k < 3; ++k) e.p_[k] = -p_[k];
    return e;
  }

  friend ExtendedScalar operator+(const ExtendedScalar& lhs, const ExtendedScalar& rhs) {
    ExtendedScalar e;
    for (int k = 0; k < 3; ++k) e.p_[k] = lhs.p_[k] + rhs.p_[k];
    return e;
  }
  friend ExtendedScalar operator-(const ExtendedScalar& lhs, const ExtendedScalar& rhs) { return lhs + (-rhs); }

  friend ExtendedScalar operator*(const ExtendedScalar& lhs, const ExtendedScalar& rhs) {
    if (!lhs.is_plain() && !rhs.is_plain()) throw InvalidArgument("product of two trigonometric terms");
    const ExtendedScalar& e = lhs.is_plain() ? rhs : lhs;
    const Scalar& s = lhs.is_plain() ? lhs.p_[One] : rhs.p_[One];
    ExtendedScalar out;
    for (int k = 0; k < 3; ++k)
      if (!e.p_[k].is_zero() && !s.is_zero()) out.p_[k] = s * e.p_[k];
    return out;
  }

  friend ExtendedScalar operator/(const ExtendedScalar& lhs, const ExtendedScalar& rhs) {
    if (!rhs.is_plain()) throw InvalidArgument("division by a trigonometric term");
    ExtendedScalar out;
    for (int k = 0; k < 3; ++k) out.p_[k] = lhs.p_[k] / rhs.p_[One];
    return out;
  }

  ExtendedScalar& operator+=(const ExtendedScalar& rhs) { return *this = *this + rhs; }
  ExtendedScalar& operator-=(const ExtendedScalar& rhs) { return *this = *this - rhs; }

  /// d/dw (b cos w) = b_w cos w - b sin w and d/dw (c sin w) = c_w sin w + c cos w.
  ExtendedScalar partial(Symbol v) const {
    ExtendedScalar out;
    for (int k = 0; k < 3; ++k) out.p_[k] = p_[k].partial(v);
    if (v == Symbol::w) {
      out.p_[Sin] -= p_[Cos];
      out.p_[Cos] += p_[Sin];
    }
    return out;
  }

  ExtendedScalar substitute(const Binding& binding) const {
    ExtendedScalar out;
    for (int k = 0; k < 3; ++k) out.p_[k] = p_[k].substitute(binding);
    return out;
  }

  ExtendedScalar replace(Symbol s, const Scalar& image) const {
    ExtendedScalar out;
    for (int k = 0; k < 3; ++k) out.p_[k] = p_[k].replace(s, image);
    return out;
  }

  bool contains(Symbol s) const { return p_[0].contains(s) || p_[1].contains(s) || p_[2].contains(s); }

  friend bool operator==(const ExtendedScalar& lhs, const ExtendedScalar& rhs) { return lhs.p_ == rhs.p_; }

  std::string to_string() const {
    static constexpr const char* names[] = {"", "cos(w)", "sin(w)"};
    std::string out;
    for (int k = 0; k < 3; ++k) {
      if (p_[k].is_zero()) continue;
      std::string term;
      if (k == One) {
        term = p_[k].to_string();
      } else if (p_[k] == Scalar(1)) {
        term = names[k];
      } else if (p_[k] == Scalar(-1)) {
        term = std::string("-") + names[k];
      } else {
        term = "(" + p_[k].to_string() + ")*" + names[k];
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::array<Scalar, 3> p_{};
};

using ExtendedField = BasicVectorField<ExtendedScalar>;

/// Parses text such as "C5*cos(w) + C6*sin(w) - alpha/2*x"; cos and sin
/// accept only the bare argument w.
inline ExtendedScalar parse_extended(std::string_view text) {
  ParseContext<ExtendedScalar> ctx{
      &symbol_value<ExtendedScalar>,
      [](std::string_view fn, const ExtendedScalar& arg) -> std::optional<ExtendedScalar> {
        if (fn != "cos" && fn != "sin") return std::nullopt;
        if (!(arg == ExtendedScalar(Scalar::symbol(Symbol::w)))) throw ParseError("trigonometric argument must be w");
        return ExtendedScalar::basis(fn == "cos" ? ExtendedScalar::Cos : ExtendedScalar::Sin);
      }};
  return parse_expression<ExtendedScalar>(text, ctx);
}

inline ExtendedField lift(const VectorField& v) {
  ExtendedField out{v.basis, {}};
  for (int k = 0; k < 4; ++k) out.comp[k] = ExtendedScalar(v.comp[k]);
  return out;
}

}  // namespace nilrs
