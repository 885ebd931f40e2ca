#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "nilrs/report/fixtures.hpp"
#include "nilrs/soliton/solver.hpp"

namespace nilrs {

struct Theorem {
  int id;
  std::vector<std::string_view> families;
};

inline const std::vector<Theorem>& theorems() {
  static const std::vector<Theorem> all = {
      {2, {"g_lambda_plus", "g_lambda_minus", "g_mu"}},
      {3, {"g0_1"}},
      {4, {"g0_2"}},
      {5, {"g0_3"}},
      {7, {"g1_lambda"}},
      {8, {"g2_lambda"}},
  };
  return all;
}

inline const Theorem& theorem(int id) {
  for (const auto& t : theorems())
    if (t.id == id) return t;
  throw InvalidArgument("no theorem " + std::to_string(id) + "; known ids are 2, 3, 4, 5, 7, 8");
}

/// Printed text for a member of the diagonal form is written in a1, a2, a3;
/// this maps it onto the member's own parameters.
inline ExtendedScalar specialize(ExtendedScalar e, const MetricFamily& fam) {
  if (fam.kind != FamilyKind::Classified || fam.general_binding.empty()) return e;
  e = e.replace(Symbol::a2, general_form_a2(fam));
  for (const auto& [s, v] : fam.general_binding) e = e.replace(s, Scalar(v));
  return e;
}

inline Scalar printed_alpha(int theorem_id, const MetricFamily& fam) {
  const Fixture* f = find_fixture(theorem_id, "alpha", "");
  return specialize(parse_extended(f->value), fam).part(ExtendedScalar::One);
}

inline ExtendedField printed_field(int theorem_id, const MetricFamily& fam) {
  ExtendedField X{Basis::frame(fam.group), {}};
  for (int k = 1; k <= 4; ++k) {
    const Fixture* f = find_fixture(theorem_id, "field", std::to_string(k));
    X.comp[static_cast<std::size_t>(k - 1)] = specialize(parse_extended(f->value), fam);
  }
  return X;
}

struct Discrepancy {
  std::string kind;  // residual, alpha, claim, connection, curvature, ricci_operator, ...
  std::string entry;
  std::string printed;
  std::string computed;
};

/// The solver's answer for a metric whose printed soliton fails.
struct Substitute {
  int degree = 0;
  bool trig = false;
  bool found = false;
  bool verified = false;
  std::size_t dimension = 0;
  std::optional<Scalar> alpha;  // nullopt: alpha free over the family
  bool printed_field_in_family = false;
  std::string note;
};

struct SolitonCertificate {
  int theorem = 0;
  std::string family;
  ExtendedField field;
  Scalar alpha;  // as printed
  ExtendedTensor residual;
  bool is_soliton = false;
  Scalar verified_alpha;  // printed alpha if it verifies, else the solver's
  bool alpha_determined = false;
  Classification classification = Classification::ParameterDependent;
  std::vector<Discrepancy> discrepancies;
  std::optional<Substitute> substitute;

  /// Verified, or every failure is backed by a verified solver substitute.
  bool accounted() const { return is_soliton || (substitute && substitute->found && substitute->verified); }
};

inline int field_degree(const ExtendedField& X, bool& trig) {
  int d = 0;
  trig = false;
  for (const auto& c : X.comp)
    for (int p = 0; p < 3; ++p) {
      if (c.part(p).is_zero()) continue;
      if (p != ExtendedScalar::One) trig = true;
      d = std::max<int>(d, static_cast<int>(c.part(p).numerator().coordinate_degree()));
    }
  return d;
}

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

inline SolitonCertificate certify(int theorem_id, const MetricFamily& fam) {
  SolitonCertificate cert;
  cert.theorem = theorem_id;
  cert.family = std::string(fam.id);
  const MetricInstance g = metric(fam.id);
  cert.field = printed_field(theorem_id, fam);
  cert.alpha = printed_alpha(theorem_id, fam);
  cert.residual = residual(g, cert.field, cert.alpha);
  cert.is_soliton = cert.residual.is_zero();
  if (cert.is_soliton) {
    cert.verified_alpha = cert.alpha;
    cert.alpha_determined = !cert.alpha.contains(Symbol::alpha);
  } else {
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        if (!cert.residual(i, j).is_zero()) {
          cert.discrepancies.push_back({"residual", std::to_string(i + 1) + "," + std::to_string(j + 1), "0",
                                        cert.residual(i, j).to_string()});
        }
    Substitute sub;
    sub.degree = std::max(1, field_degree(cert.field, sub.trig));
    try {
      const auto sol = solve_soliton(g, {sub.degree, sub.trig, AlphaSpec::Unknown(), 1200});
      sub.found = true;
      sub.verified = sol.verified;
      sub.dimension = sol.dimension();
      sub.alpha = sol.fixed_alpha();
      sub.printed_field_in_family = family_contains(sol, cert.field, cert.alpha);
    } catch (const NoSolution& e) {
      sub.note = e.what();
    }
    if (sub.found && sub.alpha) {
      cert.verified_alpha = *sub.alpha;
      cert.alpha_determined = true;
      if (!(*sub.alpha == cert.alpha)) {
        cert.discrepancies.push_back({"alpha", "", cert.alpha.to_string(), sub.alpha->to_string()});
      }
    } else {
      cert.verified_alpha = Scalar::symbol(Symbol::alpha);
    }
    cert.substitute = sub;
  }
  cert.classification = cert.alpha_determined ? classify(cert.verified_alpha) : Classification::ParameterDependent;
  if (const Fixture* claim = find_fixture(theorem_id, "claim", fam.id)) {
    const std::string word = lowercase(classification_name(cert.classification));
    if (word != claim->value) {
      cert.discrepancies.push_back({"claim", std::string(fam.id), std::string(claim->value),
                                    word + " (alpha = " + cert.verified_alpha.to_string() + ")"});
    }
  }
  return cert;
}

/// Certificates for one theorem, one per metric it covers.
inline std::vector<SolitonCertificate> check_theorem(int theorem_id) {
  std::vector<SolitonCertificate> out;
  for (auto id : theorem(theorem_id).families) out.push_back(certify(theorem_id, family(id)));
  return out;
}

}  // namespace nilrs
