#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "nilrs/ring/scalar.hpp"

namespace nilrs {

/// Solution set of A v = b: particular + span(null_basis), or inconsistent.
/// Free columns are listed in increasing order; null_basis[i] has a 1 in
/// free[i] and zeros in the other free columns.
template <class F>
struct AffineSolution {
  bool consistent = true;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free;
  std::vector<F> particular;
  std::vector<std::vector<F>> null_basis;
};

/// Sparse row; the right-hand side lives at column `cols`.
using RationalRow = std::map<std::size_t, Rational>;

/// Online Gauss-Jordan over Q on sparse rows. Each incoming row is reduced by
/// the current pivots; a surviving row pivots on its smallest column and is
/// eliminated from the others, so the pivot rows stay fully reduced.
inline AffineSolution<Rational> solve_rational(std::size_t cols, const std::vector<RationalRow>& rows) {
  std::map<std::size_t, RationalRow> pivot_rows;  // pivot column -> row with 1 there
  AffineSolution<Rational> out;
  auto axpy = [](RationalRow& dst, const RationalRow& src, const Rational& f) {
    for (const auto& [c, v] : src) {
      auto [it, inserted] = dst.try_emplace(c, 0);
      it->second -= f * v;
      if (it->second == 0) dst.erase(it);
    }
  };
  for (RationalRow row : rows) {
    for (auto it = row.begin(); it != row.end();) {
      auto p = pivot_rows.find(it->first);
      if (p == pivot_rows.end()) {
        ++it;
        continue;
      }
      const Rational f = it->second;
      const std::size_t col = it->first;
      axpy(row, p->second, f);
      it = row.upper_bound(col);
    }
    if (row.empty()) continue;
    const std::size_t pc = row.begin()->first;
    if (pc == cols) {
      out.consistent = false;
      continue;
    }
    const Rational inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    for (auto& [c, other] : pivot_rows) {
      auto hit = other.find(pc);
      if (hit != other.end()) {
        const Rational f = hit->second;
        axpy(other, row, f);
      }
    }
    pivot_rows.emplace(pc, std::move(row));
  }
  out.rank = pivot_rows.size();
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_rows.count(c)) {
      out.pivots.push_back(c);
    } else {
      out.free.push_back(c);
    }
  }
  if (!out.consistent) return out;
  out.particular.assign(cols, Rational(0));
  for (const auto& [pc, row] : pivot_rows) {
    auto it = row.find(cols);
    if (it != row.end()) out.particular[pc] = it->second;
  }
  for (std::size_t f : out.free) {
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (const auto& [pc, row] : pivot_rows) {
      auto it = row.find(f);
      if (it != row.end()) v[pc] = -it->second;
    }
    out.null_basis.push_back(std::move(v));
  }
  return out;
}

namespace detail {

/// Pivot preference: lowest total degree, then fewest terms.
inline bool simpler(const Poly& a, const Poly& b) {
  const unsigned da = a.leading_term().mono.degree, db = b.leading_term().mono.degree;
  if (da != db) return da < db;
  return a.size() < b.size();
}

}  // namespace detail

/// Fraction-free (Bareiss) elimination of a dense Poly matrix, in place.
/// Every division is exact because each entry stays a minor of the input.
/// With `reduce` set, rows above the pivot are eliminated too, leaving
/// D * RREF where D is the last pivot (fraction-free Gauss-Jordan).
/// A pivot is any entry that is not the zero polynomial, so results hold
/// for generic parameter values. Returns the pivot columns in row order.
inline std::vector<std::size_t> bareiss(std::vector<std::vector<Poly>>& a, std::size_t ncols, bool reduce) {
  std::vector<std::size_t> pivots;
  Poly prev(Rational(1));
  std::size_t r = 0;
  const std::size_t m = a.size();
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    std::size_t p = m;
    for (std::size_t i = r; i < m; ++i)
      if (!a[i][c].is_zero() && (p == m || detail::simpler(a[i][c], a[p][c]))) p = i;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = reduce ? 0 : r + 1; i < m; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < a[i].size(); ++j) {
        if (j == c) continue;
        Poly v = a[r][c] * a[i][j];
        if (!a[i][c].is_zero() && !a[r][j].is_zero()) v -= a[i][c] * a[r][j];
        if (!v.is_zero()) {
          auto q = v.divide_exact(prev);
          if (!q) throw Error("Bareiss step lost exact divisibility");
          v = std::move(*q);
        }
        a[i][j] = std::move(v);
      }
      a[i][c] = Poly();
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Solves A v = b over the parameter fraction field. Rows are cleared of
/// denominators and reduced by fraction-free Gauss-Jordan; the only
/// divisions in the field are by the common final pivot.
inline AffineSolution<Scalar> solve_symbolic(std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
  std::vector<std::vector<Poly>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    Poly common(Rational(1));
    for (const auto& v : row)
      if (!v.is_zero() && !v.denominator().is_constant()) {
        if (!common.divide_exact(v.denominator())) common *= v.denominator();
      }
    std::vector<Poly> prow(cols + 1);
    bool any = false;
    for (std::size_t j = 0; j <= cols; ++j) {
      if (row[j].is_zero()) continue;
      const Scalar scaled = row[j] * Scalar(common);
      if (!scaled.is_polynomial()) throw Error("denominator clearing failed");
      prow[j] = scaled.as_poly();
      any = true;
    }
    if (any) a.push_back(std::move(prow));
  }
  const auto piv = bareiss(a, cols + 1, true);
  AffineSolution<Scalar> out;
  std::vector<std::size_t> pivots;
  for (std::size_t c : piv) {
    if (c == cols) {
      out.consistent = false;
    } else {
      pivots.push_back(c);
    }
  }
  out.rank = pivots.size();
  out.pivots = pivots;
  std::sort(out.pivots.begin(), out.pivots.end());
  for (std::size_t c = 0; c < cols; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) out.free.push_back(c);
  if (!out.consistent) return out;

  const std::size_t r = pivots.size();
  // Every pivot row now reads D * (RREF row) with the same D.
  out.particular.assign(cols, Scalar());
  if (r == 0) {
    for (std::size_t f : out.free) {
      std::vector<Scalar> v(cols);
      v[f] = Scalar(1);
      out.null_basis.push_back(std::move(v));
    }
    return out;
  }
  const Poly& D = a[r - 1][pivots[r - 1]];
  for (std::size_t i = 0; i < r; ++i)
    if (!(a[i][pivots[i]] == D)) throw Error("fraction-free reduction left unequal pivots");
  for (std::size_t i = 0; i < r; ++i)
    if (!a[i][cols].is_zero()) out.particular[pivots[i]] = Scalar::fraction(a[i][cols], D);
  for (std::size_t f : out.free) {
    std::vector<Scalar> v(cols);
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < r; ++i)
      if (!a[i][f].is_zero()) v[pivots[i]] = Scalar::fraction(-a[i][f], D);
    out.null_basis.push_back(std::move(v));
  }
  return out;
}

/// Rank of an integer matrix by Bareiss on constant polynomials; used as an
/// independent cross-check of the sparse solver.
inline std::size_t bareiss_rank(std::vector<std::vector<Poly>> a, std::size_t ncols) {
  return bareiss(a, ncols, false).size();
}

}  // namespace nilrs
