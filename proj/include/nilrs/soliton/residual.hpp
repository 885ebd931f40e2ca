#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nilrs/curvature/levi_civita.hpp"
#include "nilrs/soliton/extended_scalar.hpp"

namespace nilrs {

using ExtendedTensor = BasicSymTensor2<ExtendedScalar>;

enum class Classification { Shrinking, Steady, Expanding, ParameterDependent };

inline std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::Shrinking: return "Shrinking";
    case Classification::Steady: return "Steady";
    case Classification::Expanding: return "Expanding";
    case Classification::ParameterDependent: return "ParameterDependent";
  }
  return "?";
}

/// Sign of alpha after applying the binding. A leftover symbol decides the
/// sign only if it is constrained positive (lambda, mu) and alpha is a
/// single signed term in such symbols.
inline Classification classify(const Scalar& alpha, const Binding& binding = {}) {
  const Scalar a = alpha.substitute(binding);
  if (a.is_zero()) return Classification::Steady;
  auto sign_of = [](int s) { return s < 0 ? Classification::Shrinking : Classification::Expanding; };
  if (a.is_constant()) return sign_of(sgn(a.constant_value()));
  const Poly& num = a.numerator();
  const Poly& den = a.denominator();
  if (!num.is_monomial() || !den.is_monomial()) return Classification::ParameterDependent;
  for (const Poly* p : {&num, &den}) {
    const Monomial& m = p->leading_term().mono;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      const auto s = static_cast<Symbol>(i);
      if (m.exp[i] != 0 && s != Symbol::lambda && s != Symbol::mu) return Classification::ParameterDependent;
    }
  }
  return sign_of(sgn(num.leading_term().coef) * sgn(den.leading_term().coef));
}

/// 2 Ric[g] + L_X g + alpha g in coordinates.
inline ExtendedTensor residual(const MetricInstance& g, const ExtendedField& X, const Scalar& alpha,
                               const SymTensor2& ricci_coord) {
  const ExtendedTensor lie = lie_derivative_metric(X, g.g);
  ExtendedTensor out(Basis::coordinate());
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const Scalar base = Scalar(2) * ricci_coord(i, j) + alpha * g.g(i, j);
      out.set(i, j, lie(i, j) + ExtendedScalar(base));
    }
  return out;
}

inline ExtendedTensor residual(const MetricInstance& g, const ExtendedField& X, const Scalar& alpha) {
  return residual(g, X, alpha, ricci(g).ricci);
}

/// One line of the determining system: ricci_part + (L_X g)_ij + alpha_part = 0,
/// with (L_X g)_ij expanded through the placeholder template.
struct PdeEquation {
  int i = 0;  // 1-based coordinate indices
  int j = 0;
  Scalar ricci_part;  // 2 Ric_ij
  Scalar alpha_part;  // alpha g_ij
  PForm lie;

  bool nontrivial() const { return !ricci_part.is_zero() || !alpha_part.is_zero(); }

  std::string text() const {
    std::string out;
    auto push = [&out](const std::string& piece) {
      if (out.empty()) {
        out = piece;
      } else if (piece[0] == '-') {
        out += " - " + piece.substr(1);
      } else {
        out += " + " + piece;
      }
    };
    if (!ricci_part.is_zero()) push(ricci_part.to_string());
    push("(L_X g)_" + std::to_string(i) + std::to_string(j));
    if (!alpha_part.is_zero()) push(alpha_part.to_string());
    return out + " = 0";
  }
};

/// All ten equations of 2 Ric + L_X g + alpha g = 0 in coordinate order.
inline std::vector<PdeEquation> pde_system(const MetricInstance& g, const Scalar& alpha) {
  const auto ric = ricci(g).ricci;
  const auto tmpl = lie_template(g.group, g.g);
  std::vector<PdeEquation> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) out.push_back({i + 1, j + 1, Scalar(2) * ric(i, j), alpha * g.g(i, j), tmpl[i][j]});
  return out;
}

}  // namespace nilrs
