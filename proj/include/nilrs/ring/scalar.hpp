#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

#include "nilrs/ring/error.hpp"
#include "nilrs/ring/poly.hpp"

namespace nilrs {

/// Element of Q(params)[x, y, z, w]: a polynomial numerator over a
/// denominator that involves parameters only.
///
/// Fractions are not reduced by a multivariate gcd. Normalization removes
/// common monomial factors, tries one exact division of the numerator by the
/// denominator, and scales both to primitive integer polynomials with a
/// positive leading denominator coefficient. That form is canonical whenever
/// the denominator is a monomial, which covers every family in the catalog
/// except the three-parameter gA metrics. Equality is decided by
/// cross-multiplication in all cases.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(const Poly& p) : num_(p), den_(1) { normalize(); }  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q) : Scalar(Poly(q)) {}            // NOLINT(google-explicit-constructor)
  Scalar(long v) : Scalar(Poly(v)) {}                       // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(Poly(static_cast<long>(v))) {}    // NOLINT(google-explicit-constructor)

  static Scalar symbol(Symbol s) { return Scalar(Poly::symbol(s)); }

  static Scalar fraction(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    if (den.has_coordinates()) throw DivisionBySomethingContainingCoordinates(den.to_string());
    Scalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
  }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool has_coordinates() const { return num_.has_coordinates(); }
  bool contains(Symbol s) const { return num_.contains(s) || den_.contains(s); }

  /// Value of a symbol-free scalar.
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  /// Numerator divided by the (constant) denominator; requires is_polynomial().
  Poly as_poly() const { return num_.scaled(Rational(1) / den_.constant_value()); }

  Scalar operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
  }

  friend Scalar operator+(const Scalar& lhs, const Scalar& rhs) { return add(lhs, rhs, false); }
  friend Scalar operator-(const Scalar& lhs, const Scalar& rhs) { return add(lhs, rhs, true); }

  friend Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    if (lhs.den_.is_constant() && rhs.den_.is_constant()) {
      Scalar s;
      s.num_ = lhs.num_ * rhs.num_;
      s.den_ = lhs.den_ * rhs.den_;
      s.normalize();
      return s;
    }
    Poly n1 = lhs.num_, d1 = lhs.den_, n2 = rhs.num_, d2 = rhs.den_;
    cross_cancel(n1, d2);
    cross_cancel(n2, d1);
    Scalar s;
    s.num_ = n1 * n2;
    s.den_ = d1 * d2;
    s.normalize();
    return s;
  }

  friend Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("scalar division by zero");
    if (rhs.num_.has_coordinates()) throw DivisionBySomethingContainingCoordinates(rhs.to_string());
    Scalar inv;
    inv.num_ = rhs.den_;
    inv.den_ = rhs.num_;
    inv.normalize();
    return lhs * inv;
  }

  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

  Scalar pow(unsigned e) const {
    Scalar s;
    s.num_ = num_.pow(e);
    s.den_ = den_.pow(e);
    s.normalize();
    return s;
  }

  /// Partial derivative in a coordinate; the denominator is coordinate-free.
  Scalar partial(Symbol v) const {
    if (!is_coordinate(v)) throw NotACoordinate(std::string(name(v)));
    Scalar s;
    s.num_ = num_.partial(v);
    s.den_ = den_;
    s.normalize();
    return s;
  }

  Rational eval(const Binding& binding) const {
    Rational d = den_.eval(binding);
    if (d == 0) throw DenominatorVanishes(den_.to_string());
    return num_.eval(binding) / d;
  }

  Scalar substitute(const Binding& binding) const {
    Poly d = den_.substitute(binding);
    if (d.is_zero()) throw DenominatorVanishes(den_.to_string());
    Scalar s;
    s.num_ = num_.substitute(binding);
    s.den_ = std::move(d);
    s.normalize();
    return s;
  }

  /// Substitutes a scalar for one parameter symbol.
  Scalar replace(Symbol sym, const Scalar& image) const {
    if (!contains(sym)) return *this;
    const unsigned dn = num_.degree_in(sym);
    const unsigned dd = den_.degree_in(sym);
    // Clear the image's denominator: p(s) / q(s) with s = a/b becomes
    // (p(a/b) b^n) / (q(a/b) b^n) for n = max degree.
    const unsigned n = std::max(dn, dd);
    auto homog = [&](const Poly& p) {
      Poly total;
      for (unsigned e = 0; e <= n; ++e) {
        Poly coeff;
        for (const auto& t : p.terms()) {
          if (t.mono[sym] != e) continue;
          Monomial rest = t.mono;
          rest.degree = static_cast<std::uint8_t>(rest.degree - e);
          rest.exp[index_of(sym)] = 0;
          coeff += Poly::monomial(rest, t.coef);
        }
        if (coeff.is_zero()) continue;
        total += coeff * image.num_.pow(e) * image.den_.pow(n - e);
      }
      return total;
    };
    return fraction(homog(num_), homog(den_));
  }

  Scalar compose_coordinates(const std::array<Poly, 4>& images) const {
    Scalar s;
    s.num_ = num_.compose_coordinates(images);
    s.den_ = den_;
    s.normalize();
    return s;
  }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.den_ == rhs.den_) return lhs.num_ == rhs.num_;
    return lhs.num_ * rhs.den_ == rhs.num_ * lhs.den_;
  }

  /// Canonical rendering. Polynomials print with rational coefficients
  /// ("1/2*x^2 - 3"); true fractions as "num/den" with parentheses around
  /// multi-term parts, e.g. "(-lambda^2 + 1)/(2*lambda)".
  std::string to_string() const {
    if (den_.is_constant()) return as_poly().to_string();
    auto wrap = [](const Poly& p) {
      std::string s = p.to_string();
      return p.size() > 1 ? "(" + s + ")" : s;
    };
    std::string num = num_.size() > 1 ? wrap(num_) : num_.to_string();
    std::string den = den_.to_string();
    const bool bare = den_.size() == 1 && (den_.leading_term().mono.is_one() ||
                                           (den_.leading_term().coef == 1 && single_factor(den_.leading_term().mono)));
    if (!bare) den = "(" + den + ")";
    return num + "/" + den;
  }

 private:
  static bool single_factor(const Monomial& m) {
    int factors = 0;
    for (auto e : m.exp) factors += e != 0;
    return factors == 1;
  }

  static void cross_cancel(Poly& num, Poly& den) {
    if (den.is_constant() || num.is_zero()) return;
    if (auto q = num.divide_exact(den)) {
      num = std::move(*q);
      den = Poly(1);
    }
  }

  static Scalar add(const Scalar& lhs, const Scalar& rhs, bool subtract) {
    if (rhs.is_zero()) return lhs;
    if (lhs.is_zero()) return subtract ? -rhs : rhs;
    Scalar s;
    if (lhs.den_ == rhs.den_) {
      s.num_ = subtract ? lhs.num_ - rhs.num_ : lhs.num_ + rhs.num_;
      s.den_ = lhs.den_;
    } else if (lhs.den_.is_monomial() && rhs.den_.is_monomial()) {
      const auto& t1 = lhs.den_.leading_term();
      const auto& t2 = rhs.den_.leading_term();
      // Denominator coefficients are integers after normalization.
      mpz_class c;
      mpz_lcm(c.get_mpz_t(), t1.coef.get_num().get_mpz_t(), t2.coef.get_num().get_mpz_t());
      Monomial m = Monomial::lcm(t1.mono, t2.mono);
      Poly::Term f1{m / t1.mono, Rational(c) / t1.coef};
      Poly::Term f2{m / t2.mono, Rational(c) / t2.coef};
      Poly a = lhs.num_.times_term(f1);
      Poly b = rhs.num_.times_term(f2);
      s.num_ = subtract ? a - b : a + b;
      s.den_ = Poly::monomial(m, Rational(c));
    } else if (auto q = lhs.den_.divide_exact(rhs.den_)) {
      Poly b = rhs.num_ * *q;
      s.num_ = subtract ? lhs.num_ - b : lhs.num_ + b;
      s.den_ = lhs.den_;
    } else if (auto q2 = rhs.den_.divide_exact(lhs.den_)) {
      Poly a = lhs.num_ * *q2;
      s.num_ = subtract ? a - rhs.num_ : a + rhs.num_;
      s.den_ = rhs.den_;
    } else {
      Poly a = lhs.num_ * rhs.den_;
      Poly b = rhs.num_ * lhs.den_;
      s.num_ = subtract ? a - b : a + b;
      s.den_ = lhs.den_ * rhs.den_;
    }
    s.normalize();
    return s;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den_.is_constant()) {
      Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
      if (!g.is_one()) {
        num_ = *num_.divide_exact(Poly::monomial(g, 1));
        den_ = *den_.divide_exact(Poly::monomial(g, 1));
      }
      if (!den_.is_constant()) {
        if (auto q = num_.divide_exact(den_)) {
          num_ = std::move(*q);
          den_ = Poly(1);
        }
      }
    }
    // Primitive integer form.
    mpz_class lcm_den = 1;
    for (const auto* p : {&num_, &den_}) {
      for (const auto& t : p->terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coef.get_den().get_mpz_t());
    }
    mpz_class gcd_num = 0;
    for (const auto* p : {&num_, &den_}) {
      for (const auto& t : p->terms()) {
        mpz_class n = t.coef.get_num() * (lcm_den / t.coef.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
      }
    }
    Rational scale(lcm_den, gcd_num);
    scale.canonicalize();
    if (den_.leading_term().coef < 0) scale = -scale;
    if (scale != 1) {
      num_ = num_.scaled(scale);
      den_ = den_.scaled(scale);
    }
  }

  Poly num_;
  Poly den_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nilrs
