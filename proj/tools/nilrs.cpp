#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nilrs/flow/flow.hpp"
#include "nilrs/report/serialize.hpp"

namespace {

using namespace nilrs;

enum Exit { kOk = 0, kUsage = 1, kUnexpectedResidual = 2, kAnsatzCap = 3, kFlowDegenerate = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "--param lambda=3/2" style bindings; values must be exact rationals.
Binding parse_bindings(const std::vector<std::string>& params, std::string* variant = nullptr) {
  Binding out;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("parameter must read name=value: " + p);
    const std::string key = p.substr(0, eq), value = p.substr(eq + 1);
    if (key == "variant" && variant) {
      *variant = value;
      continue;
    }
    const auto sym = symbol_from_name(key);
    if (!sym) throw UsageError("unknown parameter " + key);
    const auto q = parse_rational(value);
    if (!q) throw UsageError("parameter values must be integers or p/q, got " + value);
    out[*sym] = *q;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string double_text(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void print_matrix(std::ostream& os, const Json& m, const std::string& indent) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::string> row;
    for (const auto& v : m[i]) row.push_back(v.get<std::string>());
    os << indent << "[" << join(row, ", ") << "]\n";
  }
}

void print_log(std::ostream& os, const Json& log) {
  os << "discrepancy log (" << log.size() << " entries)\n";
  for (const auto& e : log) {
    os << "  thm " << e["theorem"].get<int>() << " " << e["family"].get<std::string>() << " "
       << e["object"].get<std::string>();
    if (!e["entry"].get<std::string>().empty()) os << " [" << e["entry"].get<std::string>() << "]";
    os << ": printed " << e["printed"].get<std::string>() << " | computed " << e["computed"].get<std::string>();
    if (e["truncated"].get<bool>()) os << " (printed entry truncated)";
    if (e.contains("note")) os << " (" << e["note"].get<std::string>() << ")";
    os << "\n";
  }
}

void print_certificate(std::ostream& os, const Json& c) {
  os << "theorem " << c["theorem"].get<int>() << " on " << c["family"].get<std::string>() << "\n";
  std::vector<std::string> comps;
  for (const auto& v : c["field"]) comps.push_back(v.get<std::string>());
  os << "  X (frame) = (" << join(comps, "; ") << ")\n";
  os << "  alpha (printed) = " << c["alpha"].get<std::string>() << "\n";
  os << "  is_soliton = " << (c["is_soliton"].get<bool>() ? "true" : "false") << "\n";
  for (const auto& [k, v] : c["residual"].items()) os << "  residual " << k << " = " << v.get<std::string>() << "\n";
  if (!c["substitute"].is_null()) {
    const auto& s = c["substitute"];
    os << "  solver substitute: degree " << s["degree"].get<int>() << (s["trig"].get<bool>() ? " with trig" : "")
       << ", found " << s["found"].get<bool>() << ", verified " << s["verified"].get<bool>() << ", dimension "
       << s["dimension"].get<std::size_t>() << ", alpha "
       << (s["alpha"].is_null() ? std::string("free") : s["alpha"].get<std::string>()) << "\n";
  }
  os << "  verified alpha = " << c["verified_alpha"].get<std::string>() << ", classification "
     << c["classification"].get<std::string>() << "\n";
  for (const auto& d : c["discrepancies"]) {
    os << "  discrepancy " << d["kind"].get<std::string>() << " " << d["entry"].get<std::string>() << ": printed "
       << d["printed"].get<std::string>() << " | computed " << d["computed"].get<std::string>() << "\n";
  }
  os << "  accounted = " << (c["accounted"].get<bool>() ? "true" : "false") << "\n";
}

int cmd_list(const std::string& group_filter, bool theorems_only, bool as_json) {
  Json out = header_json("list");
  if (theorems_only) {
    Json ts = Json::array();
    for (const auto& t : theorems()) {
      Json fams = Json::array();
      for (auto f : t.families) fams.push_back(f);
      ts.push_back(Json{{"theorem", t.id}, {"families", fams}});
    }
    out["theorems"] = ts;
    if (as_json) {
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& t : ts) {
        std::vector<std::string> fams;
        for (const auto& f : t["families"]) fams.push_back(f.get<std::string>());
        std::cout << "theorem " << t["theorem"].get<int>() << ": " << join(fams, ", ") << "\n";
      }
    }
    return kOk;
  }
  std::optional<GroupId> only;
  if (!group_filter.empty()) only = group_from_name(group_filter);
  Json groups = Json::array();
  for (GroupId g : {GroupId::H3xR, GroupId::G4, GroupId::R4}) {
    if (only && *only != g) continue;
    Json fams = Json::array();
    for (const auto& f : families()) {
      if (f.group != g) continue;
      Json params = Json::array(), positive = Json::array();
      for (Symbol s : f.params) params.push_back(name(s));
      for (Symbol s : f.positive) positive.push_back(name(s));
      fams.push_back(Json{{"id", f.id},
                          {"frame_expression", f.frame_expression},
                          {"params", params},
                          {"positive", positive},
                          {"lorentz", f.lorentz}});
    }
    if (!fams.empty()) groups.push_back(Json{{"group", group_name(g)}, {"families", fams}});
  }
  out["groups"] = groups;
  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  for (const auto& g : groups) {
    std::cout << g["group"].get<std::string>() << "\n";
    for (const auto& f : g["families"]) {
      std::cout << "  " << f["id"].get<std::string>() << ": " << f["frame_expression"].get<std::string>();
      std::vector<std::string> pos;
      for (const auto& p : f["positive"]) pos.push_back(p.get<std::string>() + " > 0");
      if (!pos.empty()) std::cout << "  (" << join(pos, ", ") << ")";
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_report(const std::string& family_id, const Binding& binding, bool as_json) {
  const Json r = family_report(family_id, binding);
  if (as_json) {
    std::cout << r.dump(2) << "\n";
    return kOk;
  }
  const auto& s = r["sections"];
  std::cout << "family " << family_id << " on " << r["group"].get<std::string>() << "\n";
  std::cout << "structure: d(coframe) = ";
  std::vector<std::string> d;
  for (const auto& v : s["structure_check"]["d_coframe"]) d.push_back(v.get<std::string>());
  std::cout << "(" << join(d, "; ") << "), duality " << s["structure_check"]["duality"].get<bool>() << "\n";
  std::cout << "connection forms omega^i_j:\n";
  print_matrix(std::cout, s["connection"], "  ");
  std::cout << "curvature forms Omega^i_j:\n";
  print_matrix(std::cout, s["curvature"], "  ");
  std::cout << "Ricci (frame):\n";
  print_matrix(std::cout, s["ricci"]["frame"], "  ");
  std::cout << "scalar curvature: " << s["ricci"]["scalar"].get<std::string>() << "\n";
  std::cout << "Ricci operator:\n";
  print_matrix(std::cout, s["ricci"]["operator"], "  ");
  for (const auto& c : s["soliton_certificates"]) print_certificate(std::cout, c);
  print_log(std::cout, s["discrepancy_log"]);
  return kOk;
}

int cmd_check(const std::vector<int>& ids, const std::string& variant, bool as_json) {
  const CheckOutcome out = check_report(ids, variant);
  if (as_json) {
    std::cout << out.report.dump(2) << "\n";
  } else {
    for (const auto& c : out.report["certificates"]) print_certificate(std::cout, c);
    print_log(std::cout, out.report["discrepancy_log"]);
    const auto& sum = out.report["summary"];
    std::cout << "summary: " << sum["certificates"].get<int>() << " certificates, " << sum["verified"].get<int>()
              << " verified as printed, " << sum["accounted"].get<int>() << " accounted for, status "
              << sum["status"].get<std::string>() << "\n";
  }
  return out.all_accounted ? kOk : kUnexpectedResidual;
}

int cmd_solve(const std::string& family_id, const Binding& binding, int degree, const std::string& alpha_text,
              bool trig, std::size_t max_columns, bool as_json) {
  SolveOptions opt;
  opt.degree = degree;
  opt.trig = trig;
  opt.max_columns = max_columns;
  if (alpha_text == "unknown") {
    opt.alpha = AlphaSpec::Unknown();
  } else {
    const auto q = parse_rational(alpha_text);
    if (!q) throw UsageError("--alpha takes 'unknown' or a rational, got " + alpha_text);
    opt.alpha = AlphaSpec::Fixed(Scalar(*q));
  }
  const MetricInstance g = metric(family_id, binding);
  SolitonSolution sol;
  try {
    sol = solve_soliton(g, opt);
  } catch (const NoSolution& e) {
    Json out = header_json("solve");
    out["family"] = family_id;
    out["binding"] = binding_json(binding);
    out["dimension"] = nullptr;
    out["no_solution"] = e.what();
    if (as_json) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << e.what() << "\n";
    }
    return kOk;
  }
  const Json r = solve_report(sol, family_id, binding);
  if (as_json) {
    std::cout << r.dump(2) << "\n";
    return kOk;
  }
  std::cout << "system: " << r["system"]["rows"].get<std::size_t>() << " equations, "
            << r["system"]["columns"].get<std::size_t>() << " unknowns, rank " << r["system"]["rank"].get<std::size_t>()
            << "\n";
  std::cout << "solution space dimension: " << r["dimension"].get<std::size_t>() << "\n";
  std::cout << "alpha: " << (r["alpha"].is_null() ? std::string("free over the family") : r["alpha"].get<std::string>())
            << "\n";
  auto field_text = [](const Json& f) {
    std::vector<std::string> c;
    for (const auto& v : f) c.push_back(v.get<std::string>());
    return "(" + join(c, "; ") + ")";
  };
  std::cout << "particular: X = " << field_text(r["particular"]["field"]) << ", alpha "
            << r["particular"]["alpha"].get<std::string>() << "\n";
  for (const auto& b : r["basis"]) {
    std::cout << "  " << b["constant"].get<std::string>() << ": " << field_text(b["field"]);
    if (b["alpha"].get<std::string>() != "0") std::cout << ", alpha " << b["alpha"].get<std::string>();
    std::cout << "\n";
  }
  std::cout << "verified: " << (r["verified"].get<bool>() ? "true" : "false") << "\n";
  for (const auto& m : r["printed_membership"]) {
    std::cout << "printed field of theorem " << m["theorem"].get<int>() << " in family: "
              << (m["printed_field_in_family"].get<bool>() ? "yes" : "no") << "\n";
  }
  return kOk;
}

FlowVector parse_initial(const std::string& text) {
  FlowVector f{};
  std::stringstream ss(text);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n == 4) throw UsageError("--initial takes four values");
    std::size_t used = 0;
    try {
      f[n] = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: " + item);
    }
    if (used != item.size()) throw UsageError("not a number: " + item);
    ++n;
  }
  if (n != 4) throw UsageError("--initial takes four values");
  return f;
}

int cmd_flow(const std::string& initial, const FlowConfig& cfg, const std::string& out_path, std::string format) {
  const FlowVector f0 = parse_initial(initial);
  if (format.empty()) format = out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json" ? "json" : "csv";
  std::vector<FlowState> traj;
  try {
    traj = integrate({0.0, f0}, cfg);
  } catch (const DegenerateMetric& e) {
    std::cerr << e.what() << "\n";
    return kFlowDegenerate;
  }
  std::ostringstream body;
  if (format == "csv") {
    body << "t,f1,f2,f3,f4\n";
    for (const auto& s : traj) {
      body << double_text(s.t);
      for (double v : s.f) body << "," << double_text(v);
      body << "\n";
    }
  } else {
    Json out = header_json("flow");
    out["step"] = cfg.step;
    out["t_end"] = cfg.t_end;
    Json states = Json::array();
    for (const auto& s : traj) states.push_back(Json{{"t", s.t}, {"f", s.f}});
    out["trajectory"] = states;
    body << out.dump(2) << "\n";
  }
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + out_path);
    file << body.str();
    const auto& last = traj.back();
    std::cout << "wrote " << traj.size() << " states to " << out_path << "; final t = " << double_text(last.t)
              << ", f = (" << double_text(last.f[0]) << ", " << double_text(last.f[1]) << ", "
              << double_text(last.f[2]) << ", " << double_text(last.f[3]) << ")\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature and Ricci soliton checks for left-invariant Lorentz metrics on 4-dim nilpotent groups"};
  app.require_subcommand(1);
  bool as_json = false;

  auto* list = app.add_subcommand("list", "groups, metric families and theorem ids");
  std::string group_filter;
  bool list_theorems = false;
  list->add_option("--group", group_filter, "H3xR, G4 or R4");
  list->add_flag("--theorems", list_theorems, "list theorem ids with their metrics");
  list->add_flag("--json", as_json, "machine-readable output");

  auto* report = app.add_subcommand("report", "curvature report for one metric family");
  std::string family_id;
  std::vector<std::string> params;
  report->add_option("family", family_id, "family id")->required();
  report->add_option("--param", params, "binding name=value (exact rational)");
  report->add_flag("--json", as_json, "machine-readable output");

  auto* check = app.add_subcommand("check", "certify the printed soliton theorems");
  int theorem_id = 0;
  bool all = false;
  check->add_option("theorem", theorem_id, "theorem id (2, 3, 4, 5, 7, 8)");
  check->add_flag("--all", all, "every theorem");
  check->add_option("--param", params, "variant=<family> restricts a multi-family theorem");
  check->add_flag("--json", as_json, "machine-readable output");

  auto* solve = app.add_subcommand("solve", "polynomial ansatz solve for soliton fields");
  int degree = 2;
  std::string alpha_text = "unknown";
  bool trig = false;
  std::size_t max_columns = SolveOptions{}.max_columns;
  solve->add_option("family", family_id, "family id")->required();
  solve->add_option("--param", params, "binding name=value (exact rational)");
  solve->add_option("--degree", degree, "total degree bound, 0..4");
  solve->add_option("--alpha", alpha_text, "'unknown' or an exact rational");
  solve->add_flag("--trig", trig, "add cos(w) and sin(w) blocks");
  solve->add_option("--max-columns", max_columns, "ansatz size cap");
  solve->add_flag("--json", as_json, "machine-readable output");

  auto* flow = app.add_subcommand("flow", "RK4 Ricci flow of the diagonal family f1 w1^2 + ... + f4 w4^2");
  std::string initial;
  FlowConfig cfg;
  std::string out_path, format;
  flow->add_option("--initial", initial, "f1,f2,f3,f4")->required();
  flow->add_option("--step", cfg.step, "time step");
  flow->add_option("--t-end", cfg.t_end, "final time");
  flow->add_option("--tolerance", cfg.degeneracy_tolerance, "degeneracy tolerance on |f_i|");
  flow->add_option("--sample-every", cfg.sample_every, "keep every n-th step");
  flow->add_option("--out", out_path, "write the trajectory to a file");
  flow->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*list) return cmd_list(group_filter, list_theorems, as_json);
    if (*report) return cmd_report(family_id, parse_bindings(params), as_json);
    if (*check) {
      std::string variant;
      if (!parse_bindings(params, &variant).empty()) throw UsageError("check only accepts --param variant=<family>");
      std::vector<int> ids;
      if (all) {
        for (const auto& t : theorems()) ids.push_back(t.id);
      } else if (theorem_id != 0) {
        ids.push_back(theorem_id);
      } else {
        throw UsageError("check needs a theorem id or --all");
      }
      return cmd_check(ids, variant, as_json);
    }
    if (*solve) return cmd_solve(family_id, parse_bindings(params), degree, alpha_text, trig, max_columns, as_json);
    if (*flow) return cmd_flow(initial, cfg, out_path, format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const AnsatzTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kAnsatzCap;
  } catch (const DegenerateMetric& e) {
    std::cerr << e.what() << "\n";
    return kFlowDegenerate;
  } catch (const Error& e) {
    // Unknown families, constraint violations, malformed input.
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
