#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilrs/catalog/group.hpp"
#include "nilrs/forms/quad.hpp"

namespace nilrs {

enum class FamilyKind {
  Classified,  // one of the listed isometry classes
  General,     // the diagonal general form on H3xR
  Auxiliary,   // reference metrics used by tests and the flow
};

struct MetricFamily {
  std::string_view id;
  GroupId group;
  FamilyKind kind;
  std::string_view frame_expression;       // in w1..w4
  std::string_view coordinate_expression;  // in dx..dw, as listed; empty if none
  std::vector<Symbol> params;
  std::vector<Symbol> positive;  // params constrained to be > 0
  Binding general_binding;       // a1, a3 for members of the diagonal form
  bool lorentz = true;
};

inline const std::vector<MetricFamily>& families() {
  using enum Symbol;
  static const std::vector<MetricFamily> all = {
      {"g_mu", GroupId::H3xR, FamilyKind::Classified, "w1^2 - w2^2 + mu*w3^2 + w4^2",
       "dx^2 - dy^2 + mu*(x*dy - dz)^2 + dw^2", {mu}, {mu}, {{a1, -1}, {a3, 1}}},
      {"g_lambda_plus", GroupId::H3xR, FamilyKind::Classified, "w1^2 + w2^2 + lambda*w3^2 - w4^2",
       "dx^2 + dy^2 + lambda*(x*dy - dz)^2 - dw^2", {lambda}, {lambda}, {{a1, 1}, {a3, -1}}},
      {"g_lambda_minus", GroupId::H3xR, FamilyKind::Classified, "w1^2 + w2^2 - lambda*w3^2 + w4^2",
       "dx^2 + dy^2 - lambda*(x*dy - dz)^2 + dw^2", {lambda}, {lambda}, {{a1, 1}, {a3, 1}}},
      {"g0_1", GroupId::H3xR, FamilyKind::Classified, "w1^2 + w2^2 + 2*w3*w4",
       "dx^2 + dy^2 - 2*x*dy*dw + 2*dz*dw", {}, {}, {}},
      {"g0_2", GroupId::H3xR, FamilyKind::Classified, "w1^2 + 2*w2*w3 + w4^2",
       "dx^2 - 2*x*dy^2 + dw^2 + 2*dy*dz", {}, {}, {}},
      {"g0_3", GroupId::H3xR, FamilyKind::Classified, "w1^2 + 2*w2*w4 + w3^2",
       "dx^2 + 2*dy*dw + (x*dy - dz)^2", {}, {}, {}},
      {"gA_plus", GroupId::G4, FamilyKind::Classified, "w1^2 - w2^2 + a*w3^2 + 2*b*w3*w4 + c*w4^2",
       "dx^2 - dy^2 + a*(x*dy - dz)^2 - b*(x*dy - dz)*(2*dw - 2*x*dz + x^2*dy) + c/4*(2*dw + x*(x*dy - 2*dz))^2",
       {a, b, c}, {}, {}},
      {"gA_minus", GroupId::G4, FamilyKind::Classified, "-w1^2 + w2^2 + a*w3^2 + 2*b*w3*w4 + c*w4^2",
       "-dx^2 + dy^2 + a*(x*dy - dz)^2 - b*(x*dy - dz)*(2*dw - 2*x*dz + x^2*dy) + c/4*(2*dw + x*(x*dy - 2*dz))^2",
       {a, b, c}, {}, {}},
      {"gA", GroupId::G4, FamilyKind::Classified, "w1^2 + w2^2 + a*w3^2 + 2*b*w3*w4 + c*w4^2",
       "dx^2 + dy^2 + a*(x*dy - dz)^2 - b*(x*dy - dz)*(2*dw - 2*x*dz + x^2*dy) + c/4*(2*dw + x*(x*dy - 2*dz))^2",
       {a, b, c}, {}, {}},
      {"g1_lambda", GroupId::G4, FamilyKind::Classified, "w1^2 + 2*w2*w4 + lambda*w3^2",
       "dx^2 + 2*dw*dy + x*dy*(x*dy - 2*dz) + lambda*(x*dy - dz)^2", {lambda}, {lambda}, {}},
      {"g2_lambda", GroupId::G4, FamilyKind::Classified, "w2^2 + 2*w1*w4 + lambda*w3^2",
       "2*dw*dx + dy^2 + x*dx*(x*dy - 2*dz) + lambda*(x*dy - dz)^2", {lambda}, {lambda}, {}},
      {"g3_lambda", GroupId::G4, FamilyKind::Classified, "w2^2 + 2*w1*w3 + lambda*w4^2",
       "dy^2 - 2*dx*(x*dy - dz) + lambda/4*(2*dw + x*(x*dy - 2*dz))^2", {lambda}, {lambda}, {}},
      {"g4_lambda", GroupId::G4, FamilyKind::Classified, "w1^2 + 2*w2*w3 + lambda*w4^2",
       "dx^2 - 2*dy*(x*dy - dz) + lambda/4*(2*dw + x*(x*dy - 2*dz))^2", {lambda}, {lambda}, {}},
      {"general_diag", GroupId::H3xR, FamilyKind::General, "w1^2 + a1*w2^2 + a2*w3^2 + a3*w4^2", "", {a1, a2, a3}, {},
       {}},
      {"flat_euclidean", GroupId::R4, FamilyKind::Auxiliary, "w1^2 + w2^2 + w3^2 + w4^2", "", {}, {}, {}, false},
      {"diag4", GroupId::H3xR, FamilyKind::Auxiliary, "f1*w1^2 + f2*w2^2 + f3*w3^2 + f4*w4^2", "", {f1, f2, f3, f4},
       {}, {}, false},
  };
  return all;
}

inline const MetricFamily& family(std::string_view id) {
  for (const auto& f : families())
    if (f.id == id) return f;
  throw UnknownFamily(std::string(id));
}

/// a2 of the diagonal form for its members: lambda, -lambda or mu.
inline Scalar general_form_a2(const MetricFamily& fam) {
  if (fam.id == "g_mu") return Scalar::symbol(Symbol::mu);
  if (fam.id == "g_lambda_plus") return Scalar::symbol(Symbol::lambda);
  if (fam.id == "g_lambda_minus") return -Scalar::symbol(Symbol::lambda);
  throw InvalidArgument(std::string(fam.id) + " is not a member of the diagonal form");
}

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Sylvester inertia of a symmetric rational matrix by congruence
/// diagonalization (symmetric elimination with pivoting).
inline Inertia inertia(Mat4<Rational> A) {
  Inertia out;
  for (int k = 0; k < 4; ++k) {
    int p = -1;
    for (int i = k; i < 4 && p < 0; ++i)
      if (A[i][i] != 0) p = i;
    if (p < 0) {
      // No diagonal pivot: fold a nonzero off-diagonal entry onto the diagonal.
      for (int i = k; i < 4 && p < 0; ++i)
        for (int j = i + 1; j < 4 && p < 0; ++j)
          if (A[i][j] != 0) {
            for (int t = 0; t < 4; ++t) A[i][t] += A[j][t];
            for (int t = 0; t < 4; ++t) A[t][i] += A[t][j];
            p = i;
          }
      if (p < 0) {
        out.zero += 4 - k;
        return out;
      }
    }
    std::swap(A[k], A[p]);
    for (auto& row : A) std::swap(row[k], row[p]);
    // Schur complement of the pivot.
    for (int i = k + 1; i < 4; ++i)
      for (int j = k + 1; j < 4; ++j) A[i][j] -= A[i][k] * A[k][j] / A[k][k];
    (A[k][k] > 0 ? out.positive : out.negative) += 1;
  }
  return out;
}

struct MetricInstance {
  const MetricFamily* family = nullptr;
  GroupId group = GroupId::R4;
  Binding binding;
  SymTensor2 frame;  // constant components in the group frame
  SymTensor2 g;      // coordinate components

  bool fully_bound() const {
    return std::all_of(family->params.begin(), family->params.end(),
                       [this](Symbol s) { return binding.count(s) != 0; });
  }

  /// Parameters left symbolic.
  std::vector<Symbol> free_params() const {
    std::vector<Symbol> out;
    for (Symbol s : family->params)
      if (!binding.count(s)) out.push_back(s);
    return out;
  }
};

inline Mat4<Rational> evaluate_at_identity(const SymTensor2& g, const Binding& binding) {
  Binding at = binding;
  for (Symbol s : kCoordinates) at[s] = 0;
  Mat4<Rational> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = g(i, j).eval(at);
  return out;
}

/// Instantiates a family. Bound parameters are substituted; positivity
/// constraints are enforced on bound values and the Lorentz signature is
/// verified at the identity when every parameter is bound.
inline MetricInstance metric(std::string_view family_id, const Binding& binding = {}) {
  const MetricFamily& fam = family(family_id);
  for (const auto& [s, v] : binding) {
    if (std::find(fam.params.begin(), fam.params.end(), s) == fam.params.end()) {
      throw ConstraintViolation(std::string(name(s)) + " is not a parameter of " + std::string(fam.id));
    }
    if (std::find(fam.positive.begin(), fam.positive.end(), s) != fam.positive.end() && v <= 0) {
      throw ConstraintViolation(std::string(name(s)) + " must be positive, got " + v.get_str());
    }
  }
  MetricInstance inst;
  inst.family = &fam;
  inst.group = fam.group;
  inst.binding = binding;
  const SymTensor2 raw = parse_quadratic(fam.frame_expression, kFrameCoforms, Basis::frame(fam.group));
  Mat4<Scalar> m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = raw(i, j).substitute(binding);
  inst.frame = SymTensor2(Basis::frame(fam.group), m);
  inst.g = change_basis(inst.frame, Basis::coordinate());
  if (inst.fully_bound()) {
    const Inertia in = inertia(evaluate_at_identity(inst.g, {}));
    if (in.zero != 0) throw SingularMetric(std::string(fam.id) + " is degenerate at the identity");
    if (fam.lorentz && !(in.positive == 3 && in.negative == 1)) {
      throw SignatureNotLorentz(std::string(fam.id) + " has " + std::to_string(in.positive) + " positive and " +
                                std::to_string(in.negative) + " negative directions");
    }
  }
  return inst;
}

}  // namespace nilrs
