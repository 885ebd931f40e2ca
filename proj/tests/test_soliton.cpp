#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "gen.hpp"

using namespace nilrs;
using nilrs::testing::Gen;
using nilrs::testing::sample_binding;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }

ExtendedScalar E(const char* text) { return parse_extended(text); }

/// Killing equations L_X g = 0 for X = sum P^k X_k with each P^k a polynomial
/// of degree <= d, assembled directly from lie_derivative_metric on each
/// monomial field and reduced with fraction-free elimination. Returns the
/// nullity. Independent of the placeholder template and the ansatz columns.
std::size_t naive_killing_dimension(const MetricInstance& g, int d) {
  std::vector<Monomial> monos;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c)
        for (int e = 0; a + b + c + e <= d; ++e)
          monos.push_back(Monomial::of(Symbol::x, a) * Monomial::of(Symbol::y, b) * Monomial::of(Symbol::z, c) *
                          Monomial::of(Symbol::w, e));
  const std::size_t ncols = 4 * monos.size();
  std::map<std::vector<int>, std::map<std::size_t, Rational>> rows;
  for (int k = 1; k <= 4; ++k)
    for (std::size_t m = 0; m < monos.size(); ++m) {
      VectorField X = VectorField::frame_field(g.group, k);
      for (auto& c : X.comp) c = c * Scalar(Poly::monomial(monos[m], 1));
      const SymTensor2 L = lie_derivative_metric(X, g.g);
      const std::size_t col = static_cast<std::size_t>(k - 1) * monos.size() + m;
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
          EXPECT_TRUE(L(i, j).denominator().is_constant());
          const Rational den = L(i, j).denominator().constant_value();
          for (const auto& t : L(i, j).numerator().terms()) {
            std::vector<int> key{i, j};
            key.insert(key.end(), t.mono.exp.begin(), t.mono.exp.end());
            rows[key][col] += t.coef / den;
          }
        }
    }
  std::vector<std::vector<Poly>> a;
  for (const auto& [key, row] : rows) {
    std::vector<Poly> r(ncols);
    for (const auto& [c, v] : row) r[c] = Poly(v);
    a.push_back(std::move(r));
  }
  return ncols - bareiss_rank(std::move(a), ncols);
}

/// Evaluates a placeholder template entry on concrete frame components.
Scalar apply_template(const PForm& e, const VectorField& P) {
  Scalar out = e.constant();
  for (const auto& [key, coef] : e.coefficients()) {
    Scalar v = P.comp[static_cast<std::size_t>(key.k - 1)];
    if (key.deriv >= 0) v = v.partial(coordinate(static_cast<std::size_t>(key.deriv)));
    out += coef * v;
  }
  return out;
}

const SolitonCertificate& find_cert(const std::vector<SolitonCertificate>& certs, std::string_view fam) {
  for (const auto& c : certs)
    if (c.family == fam) return c;
  throw std::runtime_error("no certificate for " + std::string(fam));
}

}  // namespace

TEST(ExtendedScalar, TrigDerivativesAndParsing) {
  EXPECT_EQ(E("cos(w)").partial(Symbol::w), E("-sin(w)"));
  EXPECT_EQ(E("sin(w)").partial(Symbol::w), E("cos(w)"));
  EXPECT_EQ(E("w*cos(w)").partial(Symbol::w), E("cos(w) - w*sin(w)"));
  EXPECT_EQ(E("x*sin(w)").partial(Symbol::x), E("sin(w)"));
  EXPECT_TRUE(E("C5*cos(w) + C6*sin(w)").partial(Symbol::z).is_zero());
  EXPECT_THROW(E("cos(w)") * E("sin(w)"), InvalidArgument);
  EXPECT_THROW(E("cos(x)"), ParseError);
  EXPECT_EQ(E("-alpha/2*x").to_string(), "-1/2*x*alpha");
}

TEST(ExtendedScalar, SecondDerivativeProperty) {
  // d^2/dw^2 (b cos w + c sin w) = -(b cos w + c sin w) when b, c do not involve w.
  Gen gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Scalar b = Scalar(gen.poly(3, 3, false)).replace(Symbol::w, Scalar(0));
    const Scalar c = Scalar(gen.poly(3, 3, false)).replace(Symbol::w, Scalar(0));
    const ExtendedScalar e =
        ExtendedScalar::basis(ExtendedScalar::Cos, b) + ExtendedScalar::basis(ExtendedScalar::Sin, c);
    EXPECT_EQ(e.partial(Symbol::w).partial(Symbol::w), -e);
  }
}

TEST(Classify, SignsAndSymbols) {
  EXPECT_EQ(classify(S("-3*lambda")), Classification::Shrinking);
  EXPECT_EQ(classify(S("3*mu")), Classification::Expanding);
  EXPECT_EQ(classify(S("3/lambda")), Classification::Expanding);
  EXPECT_EQ(classify(S("0")), Classification::Steady);
  EXPECT_EQ(classify(S("-1/2")), Classification::Shrinking);
  EXPECT_EQ(classify(S("3*a2/a1")), Classification::ParameterDependent);
  EXPECT_EQ(classify(S("lambda - 1")), Classification::ParameterDependent);
  EXPECT_EQ(classify(S("3*a2/a1"), {{Symbol::a1, -1}, {Symbol::a2, 2}}), Classification::Shrinking);
  EXPECT_EQ(classify(S("alpha")), Classification::ParameterDependent);
}

TEST(PdeSystem, DiagonalForm) {
  const auto system = pde_system(metric("general_diag"), Scalar::symbol(Symbol::alpha));
  ASSERT_EQ(system.size(), 10u);
  std::vector<std::string> nontrivial;
  for (const auto& eq : system)
    if (eq.nontrivial()) nontrivial.push_back(eq.text());
  EXPECT_EQ(nontrivial.size(), 5u);
  EXPECT_NE(std::find(nontrivial.begin(), nontrivial.end(), "-a2/a1 + (L_X g)_11 + alpha = 0"), nontrivial.end());
}

TEST(PdeSystem, G01ContainsUnitRicciTerm) {
  const auto system = pde_system(metric("g0_1"), Scalar::symbol(Symbol::alpha));
  bool found = false;
  for (const auto& eq : system) found |= eq.text().find("1 + (L_X g)_44") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(LieTemplate, AgreesWithDirectLieDerivative) {
  Gen gen(22);
  for (const auto& fam : families()) {
    const MetricInstance g = metric(fam.id);
    const auto tmpl = lie_template(g.group, g.g);
    for (int trial = 0; trial < 5; ++trial) {
      VectorField P{Basis::frame(g.group), {}};
      for (auto& c : P.comp) c = Scalar(gen.poly(3, 3, false));
      const SymTensor2 direct = lie_derivative_metric(P, g.g);
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) EXPECT_EQ(apply_template(tmpl[i][j], P), direct(i, j)) << fam.id;
    }
  }
}

TEST(LieTemplate, LeftInvariantFieldsOnFlatSpace) {
  // Constant coordinate fields are Killing for the flat metric.
  const MetricInstance g = metric("flat_euclidean");
  for (int k = 1; k <= 4; ++k)
    EXPECT_TRUE(lie_derivative_metric(VectorField::frame_field(GroupId::R4, k), g.g).is_zero());
}

TEST(Killing, FlatSpaceHasTenDimensions) {
  const MetricInstance g = metric("flat_euclidean");
  const auto sol = solve_soliton(g, {1, false, AlphaSpec::Fixed(Scalar(0)), 1200});
  EXPECT_EQ(sol.dimension(), 10u);
  EXPECT_TRUE(sol.verified);
  EXPECT_EQ(sol.columns - sol.rank, 10u);
  EXPECT_EQ(naive_killing_dimension(g, 1), 10u);
}

TEST(Killing, RicciFlatG02MatchesNaiveRank) {
  // g0_2 is Ricci flat, so alpha = 0 leaves exactly the Killing equations.
  const MetricInstance g = metric("g0_2");
  for (int d : {1, 2}) {
    const auto sol = solve_soliton(g, {d, false, AlphaSpec::Fixed(Scalar(0)), 1200});
    EXPECT_EQ(sol.dimension(), naive_killing_dimension(g, d)) << d;
    EXPECT_TRUE(sol.verified);
  }
}

TEST(Solver, RejectsBadOptions) {
  const MetricInstance g = metric("g0_1");
  EXPECT_THROW(solve_soliton(g, {5, false, AlphaSpec::Unknown(), 1200}), InvalidArgument);
  EXPECT_THROW(solve_soliton(g, {4, true, AlphaSpec::Unknown(), 100}), AnsatzTooLarge);
  // Ric != 0 for g0_1, and no degree-0 field can cancel it.
  EXPECT_THROW(solve_soliton(g, {0, false, AlphaSpec::Fixed(Scalar(0)), 1200}), NoSolution);
}

TEST(Solver, AlphaOnDiagonalBindingsMatchesAlgebraicOracle) {
  // Algebraic oracle: a left-invariant soliton with Ric = c I + D, D a
  // derivation diag(d1, d2, d1 + d2, d4) of the bracket [X1, X2] = X3, has
  // alpha = -2c. With r = diag of the Ricci operator, c = r1 + r2 - r3.
  struct Case {
    Rational a1, a2, a3;
  };
  const Case cases[] = {{1, 2, -1}, {1, 3, -1}, {-1, 2, 1}};
  for (const auto& c : cases) {
    const MetricInstance g = metric("general_diag", {{Symbol::a1, c.a1}, {Symbol::a2, c.a2}, {Symbol::a3, c.a3}});
    const auto& op = ricci(g).frame_operator;
    const Scalar oracle = Scalar(-2) * (op[0][0] + op[1][1] - op[2][2]);
    const auto sol = solve_soliton(g, {2, false, AlphaSpec::Unknown(), 1200});
    ASSERT_TRUE(sol.fixed_alpha().has_value());
    EXPECT_EQ(*sol.fixed_alpha(), oracle);
    EXPECT_EQ(*sol.fixed_alpha(), Scalar(Rational(3 * c.a2 / c.a1)));
    EXPECT_TRUE(sol.verified);
  }
}

TEST(Solver, SymbolicSolveSpecializesToBoundSolves) {
  // Solving with lambda symbolic, then binding, agrees with binding first.
  Gen gen(23);
  const auto generic = solve_soliton(metric("g_lambda_plus"), {2, false, AlphaSpec::Unknown(), 1200});
  ASSERT_TRUE(generic.fixed_alpha().has_value());
  for (int trial = 0; trial < 8; ++trial) {
    Rational q(gen.uniform(1, 9), gen.uniform(1, 4));
    q.canonicalize();
    const Binding b{{Symbol::lambda, q}};
    const auto bound = solve_soliton(metric("g_lambda_plus", b), {2, false, AlphaSpec::Unknown(), 1200});
    ASSERT_TRUE(bound.fixed_alpha().has_value());
    EXPECT_EQ(generic.fixed_alpha()->substitute(b), *bound.fixed_alpha());
    EXPECT_EQ(generic.dimension(), bound.dimension());
  }
}

TEST(Solver, ReturnedFieldsHaveZeroResidual) {
  for (const auto& fam : families()) {
    const MetricInstance g = metric(fam.id, sample_binding(fam));
    try {
      const auto sol = solve_soliton(g, {2, false, AlphaSpec::Unknown(), 1200});
      EXPECT_TRUE(sol.verified) << fam.id;
      EXPECT_TRUE(residual(g, sol.particular, sol.particular_alpha).is_zero()) << fam.id;
    } catch (const NoSolution&) {
    }
  }
}

TEST(Solver, FamilyContainsItsOwnMembers) {
  const MetricInstance g = metric("g_mu", {{Symbol::mu, 2}});
  const auto sol = solve_soliton(g, {2, false, AlphaSpec::Unknown(), 1200});
  EXPECT_TRUE(family_contains(sol, sol.particular, sol.particular_alpha));
  ExtendedField shifted = sol.particular;
  for (std::size_t k = 0; k < 4; ++k) shifted.comp[k] += sol.basis[0].comp[k] * E("C3");
  EXPECT_TRUE(family_contains(sol, shifted, sol.particular_alpha));
  ExtendedField off = sol.particular;
  off.comp[0] += E("x^2");
  EXPECT_FALSE(family_contains(sol, off, sol.particular_alpha));
}

TEST(Certificates, G01VerifiesAsPrinted) {
  const auto certs = check_theorem(3);
  ASSERT_EQ(certs.size(), 1u);
  EXPECT_TRUE(certs[0].is_soliton);
  EXPECT_EQ(certs[0].classification, Classification::ParameterDependent);
}

TEST(Certificates, EveryFailureIsAccountedFor) {
  for (const auto& t : theorems())
    for (const auto& cert : check_theorem(t.id)) {
      EXPECT_TRUE(cert.accounted()) << t.id << " " << cert.family;
      if (!cert.is_soliton) {
        ASSERT_TRUE(cert.substitute.has_value());
        EXPECT_TRUE(cert.substitute->verified);
        EXPECT_FALSE(cert.discrepancies.empty());
      }
    }
}

TEST(Certificates, ComputedClassifications) {
  const auto t2 = check_theorem(2);
  EXPECT_EQ(find_cert(t2, "g_lambda_plus").verified_alpha, S("3*lambda"));
  EXPECT_EQ(find_cert(t2, "g_lambda_plus").classification, Classification::Expanding);
  EXPECT_EQ(find_cert(t2, "g_lambda_minus").verified_alpha, S("-3*lambda"));
  EXPECT_EQ(find_cert(t2, "g_lambda_minus").classification, Classification::Shrinking);
  EXPECT_EQ(find_cert(t2, "g_mu").verified_alpha, S("-3*mu"));
  EXPECT_EQ(find_cert(t2, "g_mu").classification, Classification::Shrinking);
  for (int id : {4, 5, 7}) EXPECT_EQ(check_theorem(id)[0].classification, Classification::ParameterDependent) << id;
  const auto t8 = check_theorem(8)[0];
  EXPECT_EQ(t8.verified_alpha, Scalar(0));
  EXPECT_EQ(t8.classification, Classification::Steady);
  const bool claim_logged = std::any_of(t8.discrepancies.begin(), t8.discrepancies.end(), [](const Discrepancy& d) {
    return d.kind == "claim" && d.printed == "shrinking";
  });
  EXPECT_TRUE(claim_logged);
}

TEST(Certificates, PrintedAlphaForDiagonalMembers) {
  EXPECT_EQ(printed_alpha(2, family("g_lambda_plus")), S("-3*lambda"));
  EXPECT_EQ(printed_alpha(2, family("g_lambda_minus")), S("3*lambda"));
  EXPECT_EQ(printed_alpha(2, family("g_mu")), S("3*mu"));
  EXPECT_THROW(theorem(6), InvalidArgument);
}
