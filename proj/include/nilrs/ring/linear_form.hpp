#pragma once

#include <functional>
#include <map>
#include <string>

#include "nilrs/ring/error.hpp"
#include "nilrs/ring/scalar.hpp"

namespace nilrs {

/// Scalar + sum of Scalar * generator, for formal generators such as the
/// placeholders P^k and their partials, or frame basis forms. Products are
/// only allowed when at least one side is a pure scalar.
template <class Key>
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(const Scalar& s) : constant_(s) {}      // NOLINT(google-explicit-constructor)
  LinearForm(const Rational& q) : constant_(q) {}    // NOLINT(google-explicit-constructor)

  static LinearForm generator(const Key& k, const Scalar& coef = Scalar(1)) {
    LinearForm f;
    f.add(k, coef);
    return f;
  }

  const Scalar& constant() const { return constant_; }
  const std::map<Key, Scalar>& coefficients() const { return coeffs_; }
  bool is_scalar() const { return coeffs_.empty(); }
  bool is_zero() const { return constant_.is_zero() && coeffs_.empty(); }

  Scalar coefficient(const Key& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Scalar() : it->second;
  }

  void add(const Key& k, const Scalar& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(k, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  LinearForm operator-() const {
    LinearForm f;
    f.constant_ = -constant_;
    for (const auto& [k, v] : coeffs_) f.coeffs_.emplace(k, -v);
    return f;
  }

  friend LinearForm operator+(const LinearForm& lhs, const LinearForm& rhs) {
    LinearForm f = lhs;
    f.constant_ += rhs.constant_;
    for (const auto& [k, v] : rhs.coeffs_) f.add(k, v);
    return f;
  }

  friend LinearForm operator-(const LinearForm& lhs, const LinearForm& rhs) { return lhs + (-rhs); }

  friend LinearForm operator*(const LinearForm& lhs, const LinearForm& rhs) {
    if (!lhs.is_scalar() && !rhs.is_scalar()) throw InvalidArgument("product of two non-scalar linear forms");
    const LinearForm& form = lhs.is_scalar() ? rhs : lhs;
    const Scalar& s = lhs.is_scalar() ? lhs.constant_ : rhs.constant_;
    LinearForm f;
    f.constant_ = form.constant_ * s;
    for (const auto& [k, v] : form.coeffs_) f.add(k, v * s);
    return f;
  }

  friend LinearForm operator/(const LinearForm& lhs, const LinearForm& rhs) {
    if (!rhs.is_scalar()) throw InvalidArgument("division by a non-scalar linear form");
    LinearForm f;
    f.constant_ = lhs.constant_ / rhs.constant_;
    for (const auto& [k, v] : lhs.coeffs_) f.add(k, v / rhs.constant_);
    return f;
  }

  LinearForm substitute(const Binding& binding) const {
    LinearForm f;
    f.constant_ = constant_.substitute(binding);
    for (const auto& [k, v] : coeffs_) f.add(k, v.substitute(binding));
    return f;
  }

  friend bool operator==(const LinearForm& lhs, const LinearForm& rhs) {
    if (!(lhs.constant_ == rhs.constant_) || lhs.coeffs_.size() != rhs.coeffs_.size()) return false;
    for (const auto& [k, v] : lhs.coeffs_) {
      auto it = rhs.coeffs_.find(k);
      if (it == rhs.coeffs_.end() || !(it->second == v)) return false;
    }
    return true;
  }

  /// Renders "c + s1*K1 + s2*K2" with the generator names from `key_name`.
  std::string to_string(const std::function<std::string(const Key&)>& key_name) const {
    std::string out;
    auto append = [&out](const Scalar& coef, const std::string& gen) {
      std::string c = coef.to_string();
      const bool negative = !c.empty() && c[0] == '-' && coef.numerator().size() == 1;
      std::string body;
      if (gen.empty()) {
        body = negative ? c.substr(1) : c;
      } else if (coef == Scalar(1) || coef == Scalar(-1)) {
        body = gen;
      } else {
        std::string mag = negative ? c.substr(1) : c;
        if (coef.numerator().size() > 1 && coef.denominator().is_constant() && coef.denominator().constant_value() == 1) {
          mag = "(" + mag + ")";
        }
        body = mag + "*" + gen;
      }
      const bool neg = negative || (!gen.empty() && coef == Scalar(-1));
      if (out.empty()) {
        out = neg ? "-" + body : body;
      } else {
        out += neg ? " - " + body : " + " + body;
      }
    };
    for (const auto& [k, v] : coeffs_) append(v, key_name(k));
    if (!constant_.is_zero()) append(constant_, "");
    return out.empty() ? "0" : out;
  }

 private:
  Scalar constant_;
  std::map<Key, Scalar> coeffs_;
};

}  // namespace nilrs
