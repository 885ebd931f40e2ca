#pragma once

// Random generators for property tests.

#include <random>

#include "nilrs/nilrs.hpp"

namespace nilrs::testing {

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 5) {
    Rational q(uniform(-span, span), uniform(1, 4));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(int span = 5) {
    Rational q;
    do q = rational(span);
    while (q == 0);
    return q;
  }

  /// Random monomial over the coordinates plus a few parameters.
  Monomial monomial(int max_degree, bool params = true) {
    static constexpr Symbol pool[] = {Symbol::x, Symbol::y, Symbol::z, Symbol::w, Symbol::a1, Symbol::a2, Symbol::lambda};
    const int n = params ? 7 : 4;
    Monomial m;
    const int d = uniform(0, max_degree);
    for (int i = 0; i < d; ++i) m = m * Monomial::of(pool[uniform(0, n - 1)]);
    return m;
  }

  Poly poly(int terms = 4, int max_degree = 4, bool params = true) {
    std::vector<Poly::Term> t;
    const int n = uniform(0, terms);
    for (int i = 0; i < n; ++i) t.push_back({monomial(max_degree, params), rational()});
    return Poly::from_terms(std::move(t));
  }

  /// Coordinate polynomial over a parameter-monomial denominator.
  Scalar scalar(int terms = 3, int max_degree = 3) {
    Poly den = Poly::monomial(monomial(2, true).parameter_part(), nonzero_rational());
    return Scalar::fraction(poly(terms, max_degree), den);
  }

  Binding binding() {
    Binding b;
    for (Symbol s : {Symbol::x, Symbol::y, Symbol::z, Symbol::w, Symbol::a1, Symbol::a2, Symbol::lambda}) {
      b[s] = s == Symbol::a1 || s == Symbol::a2 || s == Symbol::lambda ? nonzero_rational() : rational();
    }
    return b;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// A nonsingular binding of every parameter of `fam`, Lorentzian where the family is.
inline Binding sample_binding(const MetricFamily& fam) {
  Binding b;
  for (Symbol s : fam.params) b[s] = 2;
  if (fam.id == "gA_plus") b = {{Symbol::a, 2}, {Symbol::b, 1}, {Symbol::c, 3}};
  if (fam.id == "gA_minus") b = {{Symbol::a, 2}, {Symbol::b, 1}, {Symbol::c, 3}};
  if (fam.id == "gA") b = {{Symbol::a, 1}, {Symbol::b, 2}, {Symbol::c, 1}};
  if (fam.id == "general_diag") b = {{Symbol::a1, 1}, {Symbol::a2, 2}, {Symbol::a3, -1}};
  if (fam.id == "diag4") b = {{Symbol::f1, 1}, {Symbol::f2, 1}, {Symbol::f3, 1}, {Symbol::f4, -1}};
  return b;
}

}  // namespace nilrs::testing
