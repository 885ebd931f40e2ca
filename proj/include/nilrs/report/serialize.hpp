#pragma once

// JSON rendering of reports. Needs the single-header nlohmann json.hpp on the
// include path.

#include "json.hpp"

#include "nilrs/catalog/group.hpp"
#include "nilrs/report/compare.hpp"
#include "nilrs/soliton/theorems.hpp"

namespace nilrs {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Insertion-ordered so that output bytes follow construction order.
using Json = nlohmann::ordered_json;

inline Json header_json(std::string_view command) {
  return Json{{"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion},
              {"fixture_version", kFixtureVersion},
              {"command", command}};
}

inline Json binding_json(const Binding& b) {
  Json out = Json::object();
  for (const auto& [s, v] : b) out[std::string(name(s))] = v.get_str();
  return out;
}

template <class T, class F>
Json matrix_json(const Mat4<T>& m, F&& render) {
  Json out = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(render(m[i][j]));
    out.push_back(row);
  }
  return out;
}

inline Json scalar_matrix_json(const Mat4<Scalar>& m) {
  return matrix_json(m, [](const Scalar& s) { return s.to_string(); });
}

inline Json field_json(const ExtendedField& X) {
  Json out = Json::array();
  for (const auto& c : X.comp) out.push_back(c.to_string());
  return out;
}

inline Json fixture_check_json(const FixtureCheck& c) {
  Json out{{"theorem", c.theorem}, {"family", c.family},     {"object", c.object},
           {"entry", c.entry},     {"printed", c.printed},   {"computed", c.computed},
           {"truncated", c.truncated}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

inline Json substitute_json(const Substitute& s) {
  return Json{{"degree", s.degree},
              {"trig", s.trig},
              {"found", s.found},
              {"verified", s.verified},
              {"dimension", s.dimension},
              {"alpha", s.alpha ? Json(s.alpha->to_string()) : Json(nullptr)},
              {"printed_field_in_family", s.printed_field_in_family},
              {"note", s.note}};
}

inline Json certificate_json(const SolitonCertificate& c) {
  Json residual = Json::object();
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      if (!c.residual(i, j).is_zero()) residual[entry_name(i, j)] = c.residual(i, j).to_string();
  Json disc = Json::array();
  for (const auto& d : c.discrepancies)
    disc.push_back(Json{{"kind", d.kind}, {"entry", d.entry}, {"printed", d.printed}, {"computed", d.computed}});
  return Json{{"theorem", c.theorem},
              {"family", c.family},
              {"field", field_json(c.field)},
              {"alpha", c.alpha.to_string()},
              {"is_soliton", c.is_soliton},
              {"residual", residual},
              {"verified_alpha", c.verified_alpha.to_string()},
              {"alpha_determined", c.alpha_determined},
              {"classification", classification_name(c.classification)},
              {"discrepancies", disc},
              {"substitute", c.substitute ? substitute_json(*c.substitute) : Json(nullptr)},
              {"accounted", c.accounted()}};
}

/// Log lines contributed by a certificate, in the shape of fixture checks.
inline std::vector<FixtureCheck> certificate_log(const SolitonCertificate& c) {
  std::vector<FixtureCheck> out;
  for (const auto& d : c.discrepancies) {
    FixtureCheck f{c.theorem, c.family, "certificate_" + d.kind, d.entry, d.printed, d.computed, false, false, {}};
    if (d.kind == "residual" && c.substitute && c.substitute->verified) {
      f.note = "solver substitute of degree " + std::to_string(c.substitute->degree) + " verified, dimension " +
               std::to_string(c.substitute->dimension);
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline Json structure_json(GroupId id) {
  const GroupSpec& spec = group(id);
  Json brackets = Json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (spec.structure[k][i][j] != 0) {
          brackets.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", spec.structure[k][i][j].get_str()}});
        }
  Json d = Json::array();
  for (int k = 0; k < 4; ++k) {
    const KForm dk = change_basis(exterior_derivative(spec.coframe[k]), Basis::frame(id));
    d.push_back(two_form_text(to_two_form(dk)));
  }
  bool dual = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) dual = dual && pair_coframe(id, i + 1, spec.frame[j]) == Scalar(i == j ? 1 : 0);
  return Json{{"group", group_name(id)}, {"brackets", brackets}, {"d_coframe", d}, {"duality", dual}};
}

/// Theorems whose certificates involve a family.
inline std::vector<int> theorems_for(std::string_view family_id) {
  std::vector<int> out;
  for (const auto& t : theorems())
    for (auto f : t.families)
      if (f == family_id) out.push_back(t.id);
  return out;
}

/// Theorems whose printed curvature displays describe a family.
inline std::vector<int> fixture_theorems_for(std::string_view family_id) {
  std::vector<int> out;
  for (const auto& t : theorems())
    if (fixture_family(t.id) == family_id) out.push_back(t.id);
  return out;
}

inline Json family_report(std::string_view family_id, const Binding& binding) {
  const MetricInstance g = metric(family_id, binding);
  const CurvatureData cd = curvature(g);
  const ConnectionForms conn = frame_connection_matrix(g.group, cd.gamma);
  const CurvatureForms curv = frame_curvature_matrix(conn);

  Json out = header_json("report");
  out["group"] = group_name(g.group);
  out["family"] = family_id;
  out["binding"] = binding_json(binding);
  Json sections;
  sections["structure_check"] = structure_json(g.group);
  sections["metric"] = Json{{"frame", scalar_matrix_json(g.frame.matrix())}, {"coordinate", scalar_matrix_json(g.g.matrix())}};
  sections["connection"] = matrix_json(conn, [](const KForm& f) { return one_form_text(to_one_form(f)); });
  sections["curvature"] = matrix_json(curv, [](const KForm& f) { return two_form_text(to_two_form(f)); });
  sections["ricci"] = Json{{"frame", scalar_matrix_json(cd.ric.ricci_frame.matrix())},
                           {"coordinate", scalar_matrix_json(cd.ric.ricci.matrix())},
                           {"scalar", cd.ric.scalar.to_string()},
                           {"operator", scalar_matrix_json(cd.ric.frame_operator)}};
  Json certs = Json::array();
  Json log = Json::array();
  for (int t : fixture_theorems_for(family_id))
    for (const auto& c : fixture_discrepancies(t, binding)) log.push_back(fixture_check_json(c));
  // Certificates are symbolic in the family's parameters.
  for (int t : theorems_for(family_id)) {
    const auto cert = certify(t, family(family_id));
    certs.push_back(certificate_json(cert));
    for (const auto& c : certificate_log(cert)) log.push_back(fixture_check_json(c));
  }
  sections["soliton_certificates"] = certs;
  sections["discrepancy_log"] = log;
  out["sections"] = sections;
  return out;
}

struct CheckOutcome {
  Json report;
  bool all_accounted = true;
};

/// Certificates for the given theorems (optionally one family of a
/// multi-family theorem), plus every printed-value discrepancy they carry.
inline CheckOutcome check_report(const std::vector<int>& ids, std::string_view only_family = {}) {
  CheckOutcome out;
  Json certs = Json::array();
  Json log = Json::array();
  std::size_t verified = 0, accounted = 0, total = 0;
  for (int id : ids) {
    const Theorem& t = theorem(id);
    bool any = false;
    for (auto fam : t.families) {
      if (!only_family.empty() && fam != only_family) continue;
      any = true;
      const auto cert = certify(id, family(fam));
      ++total;
      verified += cert.is_soliton ? 1 : 0;
      accounted += cert.accounted() ? 1 : 0;
      out.all_accounted = out.all_accounted && cert.accounted();
      certs.push_back(certificate_json(cert));
      for (const auto& c : certificate_log(cert)) log.push_back(fixture_check_json(c));
    }
    if (!any) throw InvalidArgument("theorem " + std::to_string(id) + " does not cover " + std::string(only_family));
    for (const auto& c : fixture_discrepancies(id)) log.push_back(fixture_check_json(c));
  }
  out.report = header_json("check");
  out.report["theorems"] = ids;
  out.report["certificates"] = certs;
  out.report["discrepancy_log"] = log;
  out.report["summary"] = Json{{"certificates", total},
                               {"verified", verified},
                               {"accounted", accounted},
                               {"status", out.all_accounted ? "ok" : "unexpected_failure"}};
  return out;
}

inline Json solve_report(const SolitonSolution& sol, std::string_view family_id, const Binding& binding) {
  Json out = header_json("solve");
  out["family"] = family_id;
  out["binding"] = binding_json(binding);
  out["options"] = Json{{"degree", sol.options.degree},
                        {"trig", sol.options.trig},
                        {"alpha", sol.options.alpha.unknown ? "unknown" : sol.options.alpha.value.to_string()}};
  out["system"] = Json{{"rows", sol.rows}, {"columns", sol.columns}, {"rank", sol.rank}, {"generic", sol.generic}};
  out["dimension"] = sol.dimension();
  const auto fixed = sol.fixed_alpha();
  out["alpha"] = fixed ? Json(fixed->to_string()) : Json(nullptr);
  out["particular"] = Json{{"field", field_json(sol.particular)}, {"alpha", sol.particular_alpha.to_string()}};
  Json basis = Json::array();
  for (std::size_t i = 0; i < sol.basis.size(); ++i) {
    basis.push_back(Json{{"constant", "C" + std::to_string(i + 1)},
                         {"field", field_json(sol.basis[i])},
                         {"alpha", sol.basis_alpha[i].to_string()}});
  }
  out["basis"] = basis;
  out["verified"] = sol.verified;
  Json membership = Json::array();
  for (int t : theorems_for(family_id)) {
    const MetricFamily& fam = family(family_id);
    ExtendedField X = printed_field(t, fam);
    for (auto& c : X.comp) c = c.substitute(binding);
    const Scalar alpha = printed_alpha(t, fam).substitute(binding);
    membership.push_back(Json{{"theorem", t}, {"printed_field_in_family", family_contains(sol, X, alpha)}});
  }
  out["printed_membership"] = membership;
  return out;
}

}  // namespace nilrs
