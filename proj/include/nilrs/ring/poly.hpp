#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilrs/ring/error.hpp"
#include "nilrs/ring/rational.hpp"
#include "nilrs/ring/symbol.hpp"

namespace nilrs {

/// Exact values for a subset of the symbol universe.
using Binding = std::map<Symbol, Rational>;

/// Dense exponent vector over the fixed symbol universe.
struct Monomial {
  std::array<std::uint8_t, kSymbolCount> exp{};
  std::uint8_t degree = 0;

  static Monomial of(Symbol s, unsigned power = 1) {
    Monomial m;
    m.exp[index_of(s)] = static_cast<std::uint8_t>(power);
    m.degree = static_cast<std::uint8_t>(power);
    return m;
  }

  unsigned operator[](Symbol s) const { return exp[index_of(s)]; }

  bool is_one() const { return degree == 0; }

  bool divides(const Monomial& other) const {
    if (degree > other.degree) return false;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (exp[i] > other.exp[i]) return false;
    }
    return true;
  }

  bool has_coordinates() const {
    for (std::size_t i = 0; i < kCoordinateCount; ++i) {
      if (exp[i] != 0) return true;
    }
    return false;
  }

  /// Restriction to the coordinate symbols (x, y, z, w).
  Monomial coordinate_part() const {
    Monomial m;
    for (std::size_t i = 0; i < kCoordinateCount; ++i) {
      m.exp[i] = exp[i];
      m.degree = static_cast<std::uint8_t>(m.degree + exp[i]);
    }
    return m;
  }

  Monomial parameter_part() const {
    Monomial m = *this;
    for (std::size_t i = 0; i < kCoordinateCount; ++i) {
      m.degree = static_cast<std::uint8_t>(m.degree - m.exp[i]);
      m.exp[i] = 0;
    }
    return m;
  }

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
    Monomial m;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      assert(lhs.exp[i] + rhs.exp[i] < 256);
      m.exp[i] = static_cast<std::uint8_t>(lhs.exp[i] + rhs.exp[i]);
    }
    m.degree = static_cast<std::uint8_t>(lhs.degree + rhs.degree);
    return m;
  }

  /// Quotient; requires `rhs.divides(lhs)`.
  friend Monomial operator/(const Monomial& lhs, const Monomial& rhs) {
    Monomial m;
    for (std::size_t i = 0; i < kSymbolCount; ++i) m.exp[i] = static_cast<std::uint8_t>(lhs.exp[i] - rhs.exp[i]);
    m.degree = static_cast<std::uint8_t>(lhs.degree - rhs.degree);
    return m;
  }

  static Monomial gcd(const Monomial& lhs, const Monomial& rhs) {
    Monomial m;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      m.exp[i] = std::min(lhs.exp[i], rhs.exp[i]);
      m.degree = static_cast<std::uint8_t>(m.degree + m.exp[i]);
    }
    return m;
  }

  static Monomial lcm(const Monomial& lhs, const Monomial& rhs) {
    Monomial m;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      m.exp[i] = std::max(lhs.exp[i], rhs.exp[i]);
      m.degree = static_cast<std::uint8_t>(m.degree + m.exp[i]);
    }
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (exp[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += kSymbolNames[i];
      if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
    }
    return out.empty() ? "1" : out;
  }
};

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken by the exponent of x, then y, ... in symbol declaration order.
inline bool grlex_before(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.degree != rhs.degree) return lhs.degree > rhs.degree;
  return lhs.exp > rhs.exp;
}

struct MonomialLess {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const { return grlex_before(lhs, rhs); }
};

/// Multivariate polynomial over Q in canonical form: terms sorted by
/// `grlex_before`, no zero coefficients, no repeated monomials.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    friend bool operator==(const Term& lhs, const Term& rhs) {
      return lhs.mono == rhs.mono && lhs.coef == rhs.coef;
    }
  };

  Poly() = default;
  Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Monomial{}, c});
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly symbol(Symbol s) { return monomial(Monomial::of(s), Rational(1)); }

  static Poly monomial(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
  static Poly from_terms(std::vector<Term> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational constant_value() const {
    assert(is_constant());
    return terms_.empty() ? Rational(0) : terms_[0].coef;
  }

  const Term& leading_term() const { return terms_.front(); }

  bool has_coordinates() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.has_coordinates(); });
  }

  bool contains(Symbol s) const {
    return std::any_of(terms_.begin(), terms_.end(), [s](const Term& t) { return t.mono[s] != 0; });
  }

  unsigned degree_in(Symbol s) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[s]);
    return d;
  }

  unsigned coordinate_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.coordinate_part().degree);
    return d;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
  }

  friend Poly operator+(const Poly& lhs, const Poly& rhs) { return merge(lhs, rhs, false); }
  friend Poly operator-(const Poly& lhs, const Poly& rhs) { return merge(lhs, rhs, true); }

  friend Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    if (rhs.terms_.size() == 1) return lhs.times_term(rhs.terms_[0]);
    if (lhs.terms_.size() == 1) return rhs.times_term(lhs.terms_[0]);
    std::vector<Term> out;
    out.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& a : lhs.terms_) {
      for (const auto& b : rhs.terms_) out.push_back({a.mono * b.mono, a.coef * b.coef});
    }
    return from_terms(std::move(out));
  }

  Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
  Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  Poly scaled(const Rational& c) const {
    if (c == 0) return {};
    Poly p = *this;
    for (auto& t : p.terms_) t.coef *= c;
    return p;
  }

  Poly times_term(const Term& term) const {
    if (term.coef == 0) return {};
    Poly p = *this;
    for (auto& t : p.terms_) {
      t.mono = t.mono * term.mono;
      t.coef *= term.coef;
    }
    return p;
  }

  Poly pow(unsigned e) const {
    Poly result(1);
    for (unsigned i = 0; i < e; ++i) result *= *this;
    return result;
  }

  Poly partial(Symbol s) const {
    std::vector<Term> out;
    const std::size_t k = index_of(s);
    for (const auto& t : terms_) {
      if (t.mono.exp[k] == 0) continue;
      Term d = t;
      d.coef *= t.mono.exp[k];
      d.mono.exp[k] = static_cast<std::uint8_t>(d.mono.exp[k] - 1);
      d.mono.degree = static_cast<std::uint8_t>(d.mono.degree - 1);
      out.push_back(std::move(d));
    }
    // Differentiation preserves the relative grlex order of surviving terms
    // only within a fixed exponent of s, so re-sort.
    return from_terms(std::move(out));
  }

  /// Exact quotient when `divisor` divides this polynomial, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return Poly{};
    const Term& lead = divisor.terms_.front();
    if (divisor.terms_.size() == 1) {
      Poly q = *this;
      for (auto& t : q.terms_) {
        if (!lead.mono.divides(t.mono)) return std::nullopt;
        t.mono = t.mono / lead.mono;
        t.coef /= lead.coef;
      }
      return q;
    }
    Poly remainder = *this;
    std::vector<Term> quotient;
    while (!remainder.is_zero()) {
      const Term& top = remainder.terms_.front();
      if (!lead.mono.divides(top.mono)) return std::nullopt;
      Term q{top.mono / lead.mono, top.coef / lead.coef};
      remainder -= divisor.times_term(q);
      quotient.push_back(std::move(q));
    }
    return from_terms(std::move(quotient));
  }

  /// Greatest common monomial divisor of all terms (1 for the zero polynomial).
  Monomial monomial_content() const {
    if (terms_.empty()) return {};
    Monomial g = terms_[0].mono;
    for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
    return g;
  }

  Rational eval(const Binding& binding) const {
    Rational total = 0;
    for (const auto& t : terms_) {
      Rational v = t.coef;
      for (std::size_t i = 0; i < kSymbolCount; ++i) {
        if (t.mono.exp[i] == 0) continue;
        auto it = binding.find(static_cast<Symbol>(i));
        if (it == binding.end()) throw UnboundSymbol(std::string(kSymbolNames[i]));
        for (unsigned e = 0; e < t.mono.exp[i]; ++e) v *= it->second;
      }
      total += v;
    }
    return total;
  }

  /// Replaces every bound symbol by its value; unbound symbols stay symbolic.
  Poly substitute(const Binding& binding) const {
    if (binding.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term r = t;
      for (const auto& [s, value] : binding) {
        const std::size_t k = index_of(s);
        if (r.mono.exp[k] == 0) continue;
        for (unsigned e = 0; e < r.mono.exp[k]; ++e) r.coef *= value;
        r.mono.degree = static_cast<std::uint8_t>(r.mono.degree - r.mono.exp[k]);
        r.mono.exp[k] = 0;
      }
      out.push_back(std::move(r));
    }
    return from_terms(std::move(out));
  }

  /// Substitutes polynomials for the four coordinates.
  Poly compose_coordinates(const std::array<Poly, 4>& images) const {
    Poly total;
    for (const auto& t : terms_) {
      Monomial rest = t.mono;
      Poly term = Poly::monomial(Monomial{}, t.coef);
      for (std::size_t i = 0; i < kCoordinateCount; ++i) {
        if (rest.exp[i] == 0) continue;
        term *= images[i].pow(rest.exp[i]);
        rest.degree = static_cast<std::uint8_t>(rest.degree - rest.exp[i]);
        rest.exp[i] = 0;
      }
      total += term.times_term({rest, Rational(1)});
    }
    return total;
  }

  /// Substitutes a polynomial for one symbol.
  Poly replace(Symbol s, const Poly& image) const {
    const std::size_t k = index_of(s);
    Poly total;
    for (const auto& t : terms_) {
      if (t.mono.exp[k] == 0) {
        total += Poly::monomial(t.mono, t.coef);
        continue;
      }
      Monomial rest = t.mono;
      rest.degree = static_cast<std::uint8_t>(rest.degree - rest.exp[k]);
      rest.exp[k] = 0;
      total += image.pow(t.mono.exp[k]).times_term({rest, t.coef});
    }
    return total;
  }

  /// Groups terms by their coordinate monomial; the values carry only
  /// parameter symbols.
  std::map<Monomial, Poly, MonomialLess> split_by_coordinates() const {
    std::map<Monomial, std::vector<Term>, MonomialLess> buckets;
    for (const auto& t : terms_) buckets[t.mono.coordinate_part()].push_back({t.mono.parameter_part(), t.coef});
    std::map<Monomial, Poly, MonomialLess> out;
    for (auto& [m, ts] : buckets) out.emplace(m, from_terms(std::move(ts)));
    return out;
  }

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.terms_ == rhs.terms_; }

  /// Canonical text: terms in grlex order, coefficients as p/q.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coef;
      const bool negative = c < 0;
      if (negative) c = -c;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (t.mono.is_one()) {
        out += c.get_str();
      } else if (c == 1) {
        out += t.mono.to_string();
      } else {
        out += c.get_str() + "*" + t.mono.to_string();
      }
    }
    return out;
  }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return grlex_before(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coef += t.coef;
      } else {
        if (!out.empty() && out.back().coef == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    terms_ = std::move(out);
  }

  static Poly merge(const Poly& lhs, const Poly& rhs, bool subtract) {
    Poly out;
    out.terms_.reserve(lhs.terms_.size() + rhs.terms_.size());
    auto a = lhs.terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != lhs.terms_.end() || b != rhs.terms_.end()) {
      if (b == rhs.terms_.end() || (a != lhs.terms_.end() && grlex_before(a->mono, b->mono))) {
        out.terms_.push_back(*a++);
      } else if (a == lhs.terms_.end() || grlex_before(b->mono, a->mono)) {
        out.terms_.push_back({b->mono, subtract ? Rational(-b->coef) : b->coef});
        ++b;
      } else {
        Rational c = subtract ? Rational(a->coef - b->coef) : Rational(a->coef + b->coef);
        if (c != 0) out.terms_.push_back({a->mono, std::move(c)});
        ++a;
        ++b;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

}  // namespace nilrs
