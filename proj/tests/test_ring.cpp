#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "gen.hpp"

using namespace nilrs;
using nilrs::testing::Gen;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }

// Term-by-term power rule on a plain exponent map, used as an independent
// differentiator.
using RawPoly = std::map<std::vector<int>, Rational>;

RawPoly raw(const Poly& p) {
  RawPoly out;
  for (const auto& t : p.terms()) out[std::vector<int>(t.mono.exp.begin(), t.mono.exp.end())] = t.coef;
  return out;
}

RawPoly raw_partial(const RawPoly& p, std::size_t var) {
  RawPoly out;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    auto d = e;
    d[var] -= 1;
    out[d] += c * e[var];
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST(Rational, ParsesExactForms) {
  EXPECT_EQ(*parse_rational("3"), Rational(3));
  EXPECT_EQ(*parse_rational("-7/14"), Rational(-1, 2));
  EXPECT_FALSE(parse_rational("0.5").has_value());
  EXPECT_FALSE(parse_rational("1/0").has_value());
}

TEST(Scalar, LikeTermsAndCancellation) {
  EXPECT_EQ(S("1/2*a2/a1") + S("1/2*a2/a1"), S("a2/a1"));
  EXPECT_EQ((S("x") * S("x")).to_string(), "x^2");
  EXPECT_EQ(S("a2^2/a1") / S("a2"), S("a2/a1"));
  EXPECT_EQ((S("a2^2/a1") / S("a2")).to_string(), "a2/a1");
}

TEST(Scalar, DivisionRules) {
  EXPECT_THROW(S("a1") / S("x"), DivisionBySomethingContainingCoordinates);
  EXPECT_THROW(S("a1") / S("0"), DivisionByZero);
  EXPECT_THROW(parse_scalar("1/(a1 - a1)"), DivisionByZero);
}

TEST(Scalar, Partials) {
  EXPECT_EQ(S("x^2/2").partial(Symbol::x), S("x"));
  EXPECT_EQ(S("a2*x*y").partial(Symbol::y), S("a2*x"));
  EXPECT_EQ(S("C1*y^3/3").partial(Symbol::y), S("C1*y^2"));
  EXPECT_THROW(S("a1*x").partial(Symbol::a1), NotACoordinate);
}

TEST(Scalar, PartialMatchesBruteForceDifferentiator) {
  Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = gen.poly(6, 4);
    for (std::size_t v = 0; v < 4; ++v) {
      EXPECT_EQ(raw(p.partial(coordinate(v))), raw_partial(raw(p), v));
    }
  }
}

TEST(Scalar, Evaluation) {
  EXPECT_EQ(S("a2/(2*a1)").eval({{Symbol::a1, 1}, {Symbol::a2, 3}}), Rational(3, 2));
  EXPECT_EQ(S("x*y - z").eval({{Symbol::x, 2}, {Symbol::y, 5}, {Symbol::z, 7}}), Rational(3));
  // Ricci coefficient of g1_lambda vanishes at lambda = 1.
  EXPECT_EQ(S("(1 - lambda^2)/(2*lambda)").eval({{Symbol::lambda, 1}}), Rational(0));
  EXPECT_THROW(S("x + a1").eval({{Symbol::x, 1}}), UnboundSymbol);
  EXPECT_THROW(S("1/(a1 - 1)").eval({{Symbol::a1, 1}}), DenominatorVanishes);
}

TEST(Scalar, CanonicalRendering) {
  EXPECT_EQ(S("a2/(2*a1)").to_string(), "a2/(2*a1)");
  EXPECT_EQ(S("-a2/(2*a1)").to_string(), "-a2/(2*a1)");
  EXPECT_EQ(S("y*x + x^2/2 - 3").to_string(), "1/2*x^2 + x*y - 3");
  EXPECT_EQ(S("(1 - lambda^2)/(2*lambda)").to_string(), "(-lambda^2 + 1)/(2*lambda)");
  EXPECT_EQ(S("μ + λ").to_string(), S("lambda + mu").to_string());
}

TEST(Scalar, RejectsFloatLiterals) { EXPECT_THROW(parse_scalar("0.5*x"), ParseError); }

TEST(RingProperties, PolyAxioms) {
  Gen gen(1);
  for (int trial = 0; trial < 300; ++trial) {
    const Poly a = gen.poly(), b = gen.poly(), c = gen.poly();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(RingProperties, ScalarFieldAxioms) {
  Gen gen(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
  }
}

TEST(RingProperties, LeibnizRule) {
  Gen gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar f = gen.scalar(), g = gen.scalar();
    for (Symbol v : kCoordinates) {
      EXPECT_EQ((f * g).partial(v), f.partial(v) * g + f * g.partial(v));
    }
  }
}

TEST(RingProperties, EvalIsHomomorphism) {
  Gen gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar f = gen.scalar(), g = gen.scalar();
    const Binding b = gen.binding();
    EXPECT_EQ((f * g).eval(b), f.eval(b) * g.eval(b));
    EXPECT_EQ((f + g).eval(b), f.eval(b) + g.eval(b));
  }
}

TEST(RingProperties, EqualityRespectsAddition) {
  Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = gen.scalar(), c = gen.scalar();
    const Scalar k = Scalar(gen.poly(2, 2)) + Scalar(1);
    // b is a with numerator and denominator scaled by a parameter factor.
    const Scalar m = Scalar::symbol(Symbol::a2);
    const Scalar b = (a * m) / m;
    EXPECT_EQ(a, b);
    EXPECT_EQ(a + c, b + c);
    EXPECT_EQ(a * k, b * k);
  }
}
