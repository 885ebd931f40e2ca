#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "nilrs/forms/basis.hpp"

namespace nilrs {

/// Exterior form of degree 0..4 on the 4-dimensional patch. Components are
/// keyed by the bitmask of the (strictly increasing) index tuple; bit i
/// stands for index i+1.
class KForm {
 public:
  using Mask = std::uint8_t;

  explicit KForm(int degree = 0, Basis basis = Basis::coordinate()) : degree_(degree), basis_(basis) {
    if (degree < 0 || degree > 4) throw DegreeOverflow("form degree " + std::to_string(degree));
  }

  static KForm function(const Scalar& f, Basis basis = Basis::coordinate()) {
    KForm k(0, basis);
    k.add(0, f);
    return k;
  }

  static KForm one_form(Basis basis, const std::array<Scalar, 4>& comps) {
    KForm k(1, basis);
    for (int i = 0; i < 4; ++i) k.add(static_cast<Mask>(1u << i), comps[i]);
    return k;
  }

  /// Basis element e_{i1} ^ ... ^ e_{ik} with 1-based increasing indices.
  static KForm basis_element(Basis basis, std::initializer_list<int> indices, const Scalar& coef = Scalar(1)) {
    KForm k(static_cast<int>(indices.size()), basis);
    k.add(mask_of(indices), coef);
    return k;
  }

  static Mask mask_of(std::initializer_list<int> indices) {
    Mask m = 0;
    int prev = 0;
    for (int i : indices) {
      if (i <= prev || i > 4) throw InvalidArgument("form indices must be strictly increasing in 1..4");
      m = static_cast<Mask>(m | (1u << (i - 1)));
      prev = i;
    }
    return m;
  }

  static std::vector<int> indices_of(Mask m) {
    std::vector<int> out;
    for (int i = 0; i < 4; ++i)
      if (m & (1u << i)) out.push_back(i + 1);
    return out;
  }

  int degree() const { return degree_; }
  const Basis& basis() const { return basis_; }
  const std::map<Mask, Scalar>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  Scalar component(Mask m) const {
    auto it = comps_.find(m);
    return it == comps_.end() ? Scalar() : it->second;
  }
  Scalar component(std::initializer_list<int> indices) const { return component(mask_of(indices)); }

  void add(Mask m, const Scalar& coef) {
    if (std::popcount(static_cast<unsigned>(m)) != degree_) throw DegreeOverflow("component of wrong degree");
    if (coef.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(m, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  KForm operator-() const {
    KForm k(degree_, basis_);
    for (const auto& [m, v] : comps_) k.comps_.emplace(m, -v);
    return k;
  }

  friend KForm operator+(const KForm& lhs, const KForm& rhs) {
    check_compatible(lhs, rhs);
    KForm k = lhs;
    for (const auto& [m, v] : rhs.comps_) k.add(m, v);
    return k;
  }
  friend KForm operator-(const KForm& lhs, const KForm& rhs) { return lhs + (-rhs); }

  friend KForm operator*(const Scalar& s, const KForm& form) {
    KForm k(form.degree_, form.basis_);
    if (s.is_zero()) return k;
    for (const auto& [m, v] : form.comps_) k.add(m, s * v);
    return k;
  }

  KForm& operator+=(const KForm& rhs) { return *this = *this + rhs; }

  KForm substitute(const Binding& binding) const {
    KForm k(degree_, basis_);
    for (const auto& [m, v] : comps_) k.add(m, v.substitute(binding));
    return k;
  }

  friend bool operator==(const KForm& lhs, const KForm& rhs) {
    if (lhs.degree_ != rhs.degree_ || !(lhs.basis_ == rhs.basis_) || lhs.comps_.size() != rhs.comps_.size()) return false;
    for (const auto& [m, v] : lhs.comps_) {
      auto it = rhs.comps_.find(m);
      if (it == rhs.comps_.end() || !(it->second == v)) return false;
    }
    return true;
  }

  /// Text such as "a2/2*w3" or "-3*a2/4*w1^w2" using `prefix` for basis
  /// generators ("w" for frame forms, "d" + coordinate for coordinate forms).
  std::string to_string() const {
    if (comps_.empty()) return "0";
    static constexpr const char* coord[] = {"dx", "dy", "dz", "dw"};
    std::string out;
    for (const auto& [m, v] : comps_) {
      std::string gen;
      for (int i : indices_of(m)) {
        if (!gen.empty()) gen += "^";
        gen += basis_.is_coordinate() ? std::string(coord[i - 1]) : "w" + std::to_string(i);
      }
      std::string c = v.to_string();
      if (v.numerator().size() > 1) c = "(" + c + ")";
      std::string term = gen.empty() ? c : (v == Scalar(1) ? gen : (v == Scalar(-1) ? "-" + gen : c + "*" + gen));
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

  static void check_compatible(const KForm& lhs, const KForm& rhs) {
    if (!(lhs.basis_ == rhs.basis_)) throw BasisMismatch(lhs.basis_.to_string() + " vs " + rhs.basis_.to_string());
    if (lhs.degree_ != rhs.degree_) throw DegreeOverflow("adding forms of different degree");
  }

 private:
  int degree_;
  Basis basis_;
  std::map<Mask, Scalar> comps_;
};

/// Sign of merging two disjoint increasing index sets into one.
inline int shuffle_sign(KForm::Mask lhs, KForm::Mask rhs) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    if (!(lhs & (1u << i))) continue;
    for (int j = 0; j < i; ++j)
      if (rhs & (1u << j)) ++inversions;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

inline KForm wedge(const KForm& a, const KForm& b) {
  if (!(a.basis() == b.basis())) throw BasisMismatch(a.basis().to_string() + " vs " + b.basis().to_string());
  if (a.degree() + b.degree() > 4) throw DegreeOverflow("wedge degree " + std::to_string(a.degree() + b.degree()));
  KForm out(a.degree() + b.degree(), a.basis());
  for (const auto& [ma, va] : a.components()) {
    for (const auto& [mb, vb] : b.components()) {
      if (ma & mb) continue;
      const Scalar prod = va * vb;
      out.add(static_cast<KForm::Mask>(ma | mb), shuffle_sign(ma, mb) == 1 ? prod : -prod);
    }
  }
  return out;
}

/// Converts a form between the coordinate cobasis and a group's frame
/// cobasis, exactly.
inline KForm change_basis(const KForm& form, Basis to) {
  if (form.basis() == to) return form;
  if (!form.basis().is_coordinate() && !to.is_coordinate()) {
    return change_basis(change_basis(form, Basis::coordinate()), to);
  }
  // Images of the source basis one-forms in the target basis.
  std::array<KForm, 4> images;
  if (to.is_coordinate()) {
    const auto& T = coframe_matrix(form.basis().group);  // omega_i = T[i][a] dx^a
    for (int i = 0; i < 4; ++i) images[i] = KForm::one_form(to, T[i]);
  } else {
    const auto& F = frame_matrix(to.group);  // dx^a = F[a][i] omega_i
    for (int a = 0; a < 4; ++a) images[a] = KForm::one_form(to, F[a]);
  }
  KForm out(form.degree(), to);
  for (const auto& [m, v] : form.components()) {
    KForm piece = KForm::function(v, to);
    for (int i : KForm::indices_of(m)) piece = wedge(piece, images[i - 1]);
    out += piece;
  }
  return out;
}

/// Exterior derivative. Frame-basis input is differentiated in coordinates
/// and converted back.
inline KForm exterior_derivative(const KForm& form) {
  if (form.degree() == 4) return KForm(4, form.basis());
  if (!form.basis().is_coordinate()) {
    return change_basis(exterior_derivative(change_basis(form, Basis::coordinate())), form.basis());
  }
  KForm out(form.degree() + 1, form.basis());
  for (const auto& [m, f] : form.components()) {
    for (int v = 0; v < 4; ++v) {
      if (m & (1u << v)) continue;
      const Scalar df = f.partial(coordinate(static_cast<std::size_t>(v)));
      if (df.is_zero()) continue;
      const int sign = shuffle_sign(static_cast<KForm::Mask>(1u << v), m);
      out.add(static_cast<KForm::Mask>(m | (1u << v)), sign == 1 ? df : -df);
    }
  }
  return out;
}

}  // namespace nilrs
