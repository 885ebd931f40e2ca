#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nilrs/soliton/linear_solve.hpp"
#include "nilrs/soliton/residual.hpp"

namespace nilrs {

struct AlphaSpec {
  bool unknown = true;
  Scalar value;  // used when !unknown

  static AlphaSpec Unknown() { return {true, Scalar()}; }
  static AlphaSpec Fixed(const Scalar& v) { return {false, v}; }
};

struct SolveOptions {
  int degree = 2;
  bool trig = false;
  AlphaSpec alpha = AlphaSpec::Unknown();
  std::size_t max_columns = 1200;
};

/// Unknown coefficient of mono * {1, cos w, sin w} in the frame component P^k.
struct AnsatzColumn {
  int component;  // 1..4
  ExtendedScalar::Part part;
  Monomial mono;
};

/// Monomials in the first `nvars` coordinates of total degree <= d, grlex.
inline std::vector<Monomial> coordinate_monomials(int d, int nvars) {
  std::vector<Monomial> out;
  std::array<int, 4> e{};
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars) {
      Monomial m;
      for (int i = 0; i < 4; ++i) {
        m.exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e[i]);
        m.degree = static_cast<std::uint8_t>(m.degree + e[i]);
      }
      out.push_back(m);
      return;
    }
    for (int p = 0; p <= left; ++p) {
      e[var] = p;
      self(self, var + 1, left - p);
    }
    e[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_before(b, a); });
  return out;
}

inline std::vector<AnsatzColumn> ansatz_columns(int degree, bool trig) {
  std::vector<AnsatzColumn> out;
  const auto full = coordinate_monomials(degree, 4);
  const auto xyz = coordinate_monomials(degree, 3);
  for (int k = 1; k <= 4; ++k) {
    for (const auto& m : full) out.push_back({k, ExtendedScalar::One, m});
    if (!trig) continue;
    for (auto part : {ExtendedScalar::Cos, ExtendedScalar::Sin})
      for (const auto& m : xyz) out.push_back({k, part, m});
  }
  return out;
}

/// The linear system for the ansatz coefficients: rows are keyed by tensor
/// entry, trig part and coordinate monomial; the rhs sits at column `cols`.
struct SolitonSystem {
  std::vector<AnsatzColumn> columns;
  bool alpha_column = false;  // last unknown is alpha
  std::size_t cols = 0;       // unknown count
  std::vector<std::map<std::size_t, Scalar>> rows;
};

using RowKey = std::tuple<int, int, int, std::vector<std::uint8_t>>;

inline void add_split(std::map<RowKey, std::size_t>& index, std::vector<std::map<std::size_t, Scalar>>& rows, int i,
                      int j, const ExtendedScalar& value, std::size_t col) {
  for (int p = 0; p < 3; ++p) {
    const Scalar& s = value.part(p);
    if (s.is_zero()) continue;
    for (const auto& [mono, coef] : s.numerator().split_by_coordinates()) {
      RowKey key{i, j, p, std::vector<std::uint8_t>(mono.exp.begin(), mono.exp.begin() + 4)};
      auto [it, inserted] = index.try_emplace(key, rows.size());
      if (inserted) rows.emplace_back();
      Scalar& cell = rows[it->second][col];
      cell += Scalar::fraction(coef, s.denominator());
      if (cell.is_zero()) rows[it->second].erase(col);
    }
  }
}

/// Column contributions come from the placeholder template: substituting
/// P^k = mono * part gives coef(P^k) mono*part + sum_v coef(d_v P^k) d_v(mono*part).
inline SolitonSystem assemble_soliton_system(const MetricInstance& g, const SolveOptions& opt,
                                             const SymTensor2& ricci_coord) {
  if (opt.degree < 0 || opt.degree > 4) throw InvalidArgument("degree bound must be between 0 and 4");
  SolitonSystem sys;
  sys.columns = ansatz_columns(opt.degree, opt.trig);
  sys.alpha_column = opt.alpha.unknown;
  sys.cols = sys.columns.size() + (sys.alpha_column ? 1 : 0);
  if (sys.cols > opt.max_columns) {
    throw AnsatzTooLarge(std::to_string(sys.cols) + " unknowns exceed the cap of " + std::to_string(opt.max_columns));
  }
  const auto tmpl = lie_template(g.group, g.g);
  std::map<RowKey, std::size_t> index;
  for (std::size_t c = 0; c < sys.columns.size(); ++c) {
    const auto& col = sys.columns[c];
    const ExtendedScalar base = ExtendedScalar::basis(col.part, Scalar(Poly::monomial(col.mono, 1)));
    std::array<ExtendedScalar, 4> d;
    for (int v = 0; v < 4; ++v) d[v] = base.partial(coordinate(static_cast<std::size_t>(v)));
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const PForm& e = tmpl[i][j];
        ExtendedScalar val = e.coefficient(PKey{col.component, -1}) * base;
        for (int v = 0; v < 4; ++v) {
          const Scalar cv = e.coefficient(PKey{col.component, v});
          if (!cv.is_zero() && !d[v].is_zero()) val += cv * d[v];
        }
        add_split(index, sys.rows, i, j, val, c);
      }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      if (sys.alpha_column) add_split(index, sys.rows, i, j, ExtendedScalar(g.g(i, j)), sys.columns.size());
      Scalar rhs = -Scalar(2) * ricci_coord(i, j);
      if (!sys.alpha_column) rhs -= opt.alpha.value * g.g(i, j);
      add_split(index, sys.rows, i, j, ExtendedScalar(rhs), sys.cols);
    }
  return sys;
}

/// Field and alpha encoded by a coefficient vector of the system.
inline std::pair<ExtendedField, Scalar> decode(const SolitonSystem& sys, const std::vector<Scalar>& v) {
  ExtendedField X{Basis::frame(GroupId::H3xR), {}};
  for (std::size_t c = 0; c < sys.columns.size(); ++c) {
    if (v[c].is_zero()) continue;
    const auto& col = sys.columns[c];
    X.comp[static_cast<std::size_t>(col.component - 1)] +=
        ExtendedScalar::basis(col.part, v[c] * Scalar(Poly::monomial(col.mono, 1)));
  }
  return {X, sys.alpha_column ? v[sys.columns.size()] : Scalar()};
}

struct SolitonSolution {
  MetricInstance metric;
  SolveOptions options;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
  bool generic = false;  // parameters left symbolic; valid for generic values
  bool consistent = true;
  std::vector<std::size_t> free_columns;
  std::vector<Scalar> particular_vector;
  std::vector<std::vector<Scalar>> null_vectors;
  ExtendedField particular;
  Scalar particular_alpha;
  std::vector<ExtendedField> basis;
  std::vector<Scalar> basis_alpha;
  bool verified = false;  // every returned field has exactly zero residual

  std::size_t dimension() const { return basis.size(); }

  /// The forced value of alpha, or nullopt when alpha varies over the family.
  std::optional<Scalar> fixed_alpha() const {
    if (!options.alpha.unknown) return options.alpha.value;
    for (const auto& a : basis_alpha)
      if (!a.is_zero()) return std::nullopt;
    return particular_alpha;
  }
};

/// Coefficient vector of (X, alpha) in the ansatz, X given in the frame, or nullopt when X leaves
/// the ansatz (a monomial of too high degree, an unexpected trig term, or a
/// coordinate-dependent coefficient).
inline std::optional<std::vector<Scalar>> encode(const SolitonSystem& sys, const ExtendedField& X_frame,
                                                 const Scalar& alpha) {
  std::vector<Scalar> v(sys.cols);
  std::map<std::tuple<int, int, std::vector<std::uint8_t>>, std::size_t> where;
  for (std::size_t c = 0; c < sys.columns.size(); ++c) {
    const auto& col = sys.columns[c];
    where[{col.component, col.part, std::vector<std::uint8_t>(col.mono.exp.begin(), col.mono.exp.begin() + 4)}] = c;
  }
  for (int k = 0; k < 4; ++k)
    for (int p = 0; p < 3; ++p) {
      const Scalar& s = X_frame.comp[k].part(p);
      if (s.is_zero()) continue;
      for (const auto& [mono, coef] : s.numerator().split_by_coordinates()) {
        auto it = where.find({k + 1, p, std::vector<std::uint8_t>(mono.exp.begin(), mono.exp.begin() + 4)});
        if (it == where.end()) return std::nullopt;
        v[it->second] = Scalar::fraction(coef, s.denominator());
      }
    }
  if (sys.alpha_column) {
    v[sys.columns.size()] = alpha;
  }
  return v;
}

namespace detail {

inline bool verify_field(const MetricInstance& g, const ExtendedField& X, const Scalar& alpha,
                         const SymTensor2& ricci_coord, bool homogeneous) {
  const SymTensor2 zero(Basis::coordinate());
  const auto r = residual(g, X, alpha, homogeneous ? zero : ricci_coord);
  return r.is_zero();
}

}  // namespace detail

/// Solves 2 Ric + L_X g + alpha g = 0 for X in the polynomial (and optional
/// cos w / sin w) ansatz of the given degree, in the group frame. Returns
/// the affine solution family; NoSolution if it is empty.
inline SolitonSolution solve_soliton(const MetricInstance& g, const SolveOptions& opt) {
  const auto ric = ricci(g).ricci;
  const SolitonSystem sys = assemble_soliton_system(g, opt, ric);
  SolitonSolution out;
  out.metric = g;
  out.options = opt;
  out.rows = sys.rows.size();
  out.columns = sys.cols;
  out.generic = !g.fully_bound();

  AffineSolution<Scalar> sol;
  if (out.generic) {
    std::vector<std::vector<Scalar>> dense;
    dense.reserve(sys.rows.size());
    for (const auto& row : sys.rows) {
      std::vector<Scalar> d(sys.cols + 1);
      for (const auto& [c, v] : row) d[c] = v;
      dense.push_back(std::move(d));
    }
    sol = solve_symbolic(sys.cols, dense);
  } else {
    std::vector<RationalRow> rrows;
    rrows.reserve(sys.rows.size());
    for (const auto& row : sys.rows) {
      RationalRow r;
      for (const auto& [c, v] : row) {
        if (!v.is_constant()) throw UnboundSymbol("coefficient " + v.to_string() + " is not rational");
        r.emplace(c, v.constant_value());
      }
      rrows.push_back(std::move(r));
    }
    const auto q = solve_rational(sys.cols, rrows);
    sol.consistent = q.consistent;
    sol.rank = q.rank;
    sol.pivots = q.pivots;
    sol.free = q.free;
    for (const auto& v : q.particular) sol.particular.emplace_back(v);
    for (const auto& nv : q.null_basis) {
      std::vector<Scalar> s;
      s.reserve(nv.size());
      for (const auto& v : nv) s.emplace_back(v);
      sol.null_basis.push_back(std::move(s));
    }
  }
  out.rank = sol.rank;
  out.consistent = sol.consistent;
  if (!sol.consistent) throw NoSolution(std::string(g.family->id) + " has no soliton field of degree <= " +
                                        std::to_string(opt.degree) + (opt.trig ? " with trig terms" : ""));
  out.free_columns = sol.free;
  out.particular_vector = sol.particular;
  out.null_vectors = sol.null_basis;
  const Basis frame = Basis::frame(g.group);
  auto [xp, ap] = decode(sys, sol.particular);
  xp.basis = frame;
  out.particular = xp;
  out.particular_alpha = opt.alpha.unknown ? ap : opt.alpha.value;
  for (const auto& nv : sol.null_basis) {
    auto [xn, an] = decode(sys, nv);
    xn.basis = frame;
    out.basis.push_back(xn);
    out.basis_alpha.push_back(an);
  }
  bool ok = detail::verify_field(g, out.particular, out.particular_alpha, ric, false);
  for (std::size_t i = 0; ok && i < out.basis.size(); ++i)
    ok = detail::verify_field(g, out.basis[i], out.basis_alpha[i], ric, true);
  out.verified = ok;
  return out;
}

/// Membership of (X, alpha) in the solution family for every value of the
/// free constants C1..C10 and of the symbol alpha appearing in them: the
/// constant part must be particular + null span and each constant's
/// coefficient must lie in the null span.
inline bool family_contains(const SolitonSolution& sol, const ExtendedField& X_in, const Scalar& alpha) {
  const ExtendedField X = change_basis(X_in, Basis::frame(sol.metric.group));
  SolitonSystem sys;
  sys.columns = ansatz_columns(sol.options.degree, sol.options.trig);
  sys.alpha_column = sol.options.alpha.unknown;
  sys.cols = sys.columns.size() + (sys.alpha_column ? 1 : 0);

  std::vector<Symbol> constants;
  for (std::size_t i = 1; i <= 10; ++i) constants.push_back(*symbol_from_name("C" + std::to_string(i)));
  constants.push_back(Symbol::alpha);

  Binding zero;
  for (Symbol s : constants) zero[s] = 0;
  auto at_zero = [&zero](const ExtendedField& f) {
    ExtendedField o = f;
    for (auto& c : o.comp) c = c.substitute(zero);
    return o;
  };
  auto in_span = [&sol](const std::vector<Scalar>& v) {
    std::vector<Scalar> acc(v.size());
    for (std::size_t i = 0; i < sol.free_columns.size(); ++i) {
      const Scalar& t = v[sol.free_columns[i]];
      if (t.is_zero()) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!sol.null_vectors[i][c].is_zero()) acc[c] += t * sol.null_vectors[i][c];
    }
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!(acc[c] == v[c])) return false;
    return true;
  };

  // Constant part.
  const Scalar alpha0 = alpha.substitute(zero);
  if (!sys.alpha_column && !(alpha0 == sol.options.alpha.value)) return false;
  auto v0 = encode(sys, at_zero(X), alpha0);
  if (!v0) return false;
  for (std::size_t c = 0; c < v0->size(); ++c) (*v0)[c] -= sol.particular_vector[c];
  if (!in_span(*v0)) return false;

  // Each constant's coefficient, read off by unit substitution; a second
  // substitution rejects fields that are not affine in the constants.
  const ExtendedField X0 = at_zero(X);
  for (Symbol s : constants) {
    bool present = alpha.contains(s);
    for (const auto& c : X.comp) present = present || c.contains(s);
    if (!present) continue;
    Binding one = zero, two = zero;
    one[s] = 1;
    two[s] = 2;
    ExtendedField d = X;
    for (int k = 0; k < 4; ++k) {
      const ExtendedScalar c1 = X.comp[k].substitute(one) - X0.comp[k];
      const ExtendedScalar c2 = X.comp[k].substitute(two) - X0.comp[k];
      if (!(c2 == c1 + c1)) return false;
      d.comp[k] = c1;
    }
    const Scalar da = alpha.substitute(one) - alpha0;
    if (!(alpha.substitute(two) - alpha0 == da + da)) return false;
    if (!sys.alpha_column && !da.is_zero()) return false;
    auto v = encode(sys, d, da);
    if (!v || !in_span(*v)) return false;
  }
  return true;
}

}  // namespace nilrs
