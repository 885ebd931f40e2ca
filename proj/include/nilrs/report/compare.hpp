#pragma once

#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "nilrs/curvature/frame_forms.hpp"
#include "nilrs/report/fixtures.hpp"
#include "nilrs/soliton/residual.hpp"

namespace nilrs {

/// One printed value set against the engine's value for the same entry.
struct FixtureCheck {
  int theorem = 0;
  std::string family;
  std::string object;
  std::string entry;
  std::string printed;   // verbatim fixture text, times the prefactor where one applies
  std::string computed;  // engine value in the same units
  bool match = false;
  bool truncated = false;
  std::string note;
};

/// Metric whose printed displays a theorem's fixtures describe.
inline std::string_view fixture_family(int theorem_id) {
  switch (theorem_id) {
    case 2: return "general_diag";
    case 3: return "g0_1";
    case 4: return "g0_2";
    case 5: return "g0_3";
    case 7: return "g1_lambda";
    case 8: return "g2_lambda";
    default: throw InvalidArgument("no fixtures for theorem " + std::to_string(theorem_id));
  }
}

using OneForm = LinearForm<int>;
using TwoForm = LinearForm<std::pair<int, int>>;

inline OneForm parse_one_form(std::string_view text) {
  ParseContext<OneForm> ctx{[](std::string_view id) -> std::optional<OneForm> {
    if (id.size() == 2 && id[0] == 'w' && id[1] >= '1' && id[1] <= '4') return OneForm::generator(id[1] - '1');
    return symbol_value<OneForm>(id);
  }};
  return parse_expression<OneForm>(text, ctx);
}

/// "wi^wj" is rewritten to the identifier "wi_wj" first, since '^' is the
/// power operator elsewhere.
inline TwoForm parse_two_form(std::string_view text) {
  static const std::regex wedge_re(R"(w([1-4])\s*\^\s*w([1-4]))");
  const std::string src = std::regex_replace(std::string(text), wedge_re, "w$1_w$2");
  ParseContext<TwoForm> ctx{[](std::string_view id) -> std::optional<TwoForm> {
    if (id.size() == 5 && id[0] == 'w' && id[2] == '_' && id[3] == 'w') {
      int i = id[1] - '1', j = id[4] - '1';
      if (i < 0 || i > 3 || j < 0 || j > 3) return std::nullopt;
      if (i == j) return TwoForm();
      if (i < j) return TwoForm::generator({i, j});
      return TwoForm::generator({j, i}, Scalar(-1));
    }
    return symbol_value<TwoForm>(id);
  }};
  return parse_expression<TwoForm>(src, ctx);
}

inline PForm parse_pform(std::string_view text) {
  ParseContext<PForm> ctx{[](std::string_view id) -> std::optional<PForm> {
    if (id.size() >= 2 && id[0] == 'P' && id[1] >= '1' && id[1] <= '4') {
      const int k = id[1] - '0';
      if (id.size() == 2) return PForm::generator(PKey{k, -1});
      if (id.size() == 4 && id[2] == '_') {
        const std::string_view coords = "xyzw";
        const auto v = coords.find(id[3]);
        if (v != std::string_view::npos) return PForm::generator(PKey{k, static_cast<int>(v)});
      }
      return std::nullopt;
    }
    return symbol_value<PForm>(id);
  }};
  return parse_expression<PForm>(text, ctx);
}

inline OneForm to_one_form(const KForm& f) {
  OneForm out;
  for (int i = 0; i < 4; ++i) out.add(i, f.component({i + 1}));
  return out;
}

inline TwoForm to_two_form(const KForm& f) {
  TwoForm out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out.add({i, j}, f.component({i + 1, j + 1}));
  return out;
}

inline std::string one_form_text(const OneForm& f) {
  return f.to_string([](int i) { return "w" + std::to_string(i + 1); });
}

inline std::string two_form_text(const TwoForm& f) {
  return f.to_string([](const std::pair<int, int>& p) {
    return "w" + std::to_string(p.first + 1) + "^w" + std::to_string(p.second + 1);
  });
}

inline std::string pform_text(const PForm& f) { return f.to_string(pkey_name); }

inline std::string entry_name(int i, int j) { return std::to_string(i + 1) + "," + std::to_string(j + 1); }

namespace detail {

inline Scalar prefactor(int theorem_id, std::string_view object) {
  const Fixture* f = find_fixture(theorem_id, object, "prefactor");
  return f ? parse_scalar(f->value) : Scalar(1);
}

/// Printed text for a matrix entry, or "0" when the display leaves it blank.
inline std::string_view printed_entry(int theorem_id, std::string_view object, int i, int j) {
  const Fixture* f = find_fixture(theorem_id, object, entry_name(i, j));
  return f ? f->value : std::string_view("0");
}

inline std::string scaled_text(const Scalar& pre, std::string_view text) {
  if (pre == Scalar(1)) return std::string(text);
  return pre.to_string() + "*(" + std::string(text) + ")";
}

}  // namespace detail

/// Every printed value of one theorem against the engine, entry by entry,
/// with `binding` applied to both sides. Matrix objects are compared on all
/// sixteen entries; blank printed entries count as zero.
inline std::vector<FixtureCheck> compare_fixtures(int theorem_id, const Binding& binding = {}) {
  const std::string fam_id(fixture_family(theorem_id));
  const MetricInstance g = metric(fam_id, binding);
  const CurvatureData cd = curvature(g);
  const ConnectionForms conn = frame_connection_matrix(g.group, cd.gamma);
  const CurvatureForms curv = frame_curvature_matrix(conn);
  std::vector<FixtureCheck> out;
  auto push = [&](std::string object, std::string entry, std::string printed, std::string computed, bool match,
                  bool truncated = false) {
    out.push_back({theorem_id, fam_id, std::move(object), std::move(entry), std::move(printed), std::move(computed),
                   match, truncated, {}});
  };

  {
    const Scalar pre = detail::prefactor(theorem_id, "connection");
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const auto text = detail::printed_entry(theorem_id, "connection", i, j);
        const OneForm printed = (Scalar(pre) * parse_one_form(text)).substitute(binding);
        const OneForm computed = to_one_form(conn[i][j]);
        push("connection", entry_name(i, j), detail::scaled_text(pre, text), one_form_text(computed),
             printed == computed);
      }
  }
  {
    const Scalar pre = detail::prefactor(theorem_id, "curvature");
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const auto text = detail::printed_entry(theorem_id, "curvature", i, j);
        const TwoForm printed = (Scalar(pre) * parse_two_form(text)).substitute(binding);
        const TwoForm computed = to_two_form(curv[i][j]);
        push("curvature", entry_name(i, j), detail::scaled_text(pre, text), two_form_text(computed),
             printed == computed);
      }
  }
  if (const Fixture* f = find_fixture(theorem_id, "ricci", "")) {
    const SymTensor2 printed = parse_quadratic(f->value, kFrameCoforms, g.frame.basis());
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const Scalar p = printed(i, j).substitute(binding);
        const Scalar& c = cd.ric.ricci_frame(i, j);
        push("ricci", entry_name(i, j), p.to_string(), c.to_string(), p == c);
      }
  }
  if (const Fixture* f = find_fixture(theorem_id, "scalar", "")) {
    push("scalar", "", std::string(f->value), cd.ric.scalar.to_string(),
         parse_scalar(f->value).substitute(binding) == cd.ric.scalar);
  }
  if (!fixtures_for(theorem_id, "ricci_operator").empty()) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const auto text = detail::printed_entry(theorem_id, "ricci_operator", i, j);
        const Scalar& c = cd.ric.frame_operator[i][j];
        push("ricci_operator", entry_name(i, j), std::string(text), c.to_string(),
             parse_scalar(text).substitute(binding) == c);
      }
  }
  if (!fixtures_for(theorem_id, "lie_derivative").empty()) {
    // The diagonal form's display is printed with a1 = a2 = a3 = 1.
    Binding unit = binding;
    if (theorem_id == 2) unit = {{Symbol::a1, 1}, {Symbol::a2, 1}, {Symbol::a3, 1}};
    const SymTensor2 g_sym = metric(fam_id).g;
    auto tmpl = lie_template(g.group, g_sym);
    // With the identity frame of R4 the placeholders are coordinate components.
    auto coord = lie_template(GroupId::R4, g_sym);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        tmpl[i][j] = tmpl[i][j].substitute(unit);
        coord[i][j] = coord[i][j].substitute(unit);
      }
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const Fixture* f = find_fixture(theorem_id, "lie_derivative", entry_name(i, j));
        const std::string computed = pform_text(tmpl[i][j]);
        if (!f) {
          push("lie_derivative", entry_name(i, j), "0", computed, tmpl[i][j].is_zero());
        } else if (f->truncated) {
          push("lie_derivative", entry_name(i, j), std::string(f->value), computed, false, true);
        } else {
          const PForm printed = parse_pform(f->value).substitute(unit);
          push("lie_derivative", entry_name(i, j), std::string(f->value), computed, printed == tmpl[i][j]);
          if (!out.back().match && printed == coord[i][j]) {
            out.back().note = "matches with P^k read as coordinate components: " + pform_text(coord[i][j]);
          }
        }
      }
  }
  if (!fixtures_for(theorem_id, "pde").empty()) {
    const Fixture* printed_alpha = find_fixture(theorem_id, "pde", "alpha");
    const auto system =
        pde_system(g, printed_alpha ? parse_scalar(printed_alpha->value) : Scalar::symbol(Symbol::alpha));
    for (const auto& eq : system) {
      const auto text = detail::printed_entry(theorem_id, "pde", eq.i - 1, eq.j - 1);
      const Scalar computed = eq.ricci_part + eq.alpha_part;
      push("pde", entry_name(eq.i - 1, eq.j - 1), std::string(text), computed.to_string(),
           parse_scalar(text).substitute(binding) == computed);
    }
  }
  return out;
}

inline std::vector<FixtureCheck> fixture_discrepancies(int theorem_id, const Binding& binding = {}) {
  std::vector<FixtureCheck> out;
  for (auto& c : compare_fixtures(theorem_id, binding))
    if (!c.match) out.push_back(std::move(c));
  return out;
}

}  // namespace nilrs
