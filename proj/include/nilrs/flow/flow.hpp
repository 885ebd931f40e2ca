#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "nilrs/curvature/levi_civita.hpp"

namespace nilrs {

using FlowVector = std::array<double, 4>;

struct FlowState {
  double t = 0;
  FlowVector f{};
};

struct FlowConfig {
  double step = 1e-3;
  double t_end = 0.1;
  double degeneracy_tolerance = 1e-9;
  int sample_every = 1;  // keep every n-th state; the final state is always kept
};

namespace detail {

inline std::string shortest(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

/// Polynomial in f1..f4 with double coefficients.
class FPoly {
 public:
  FPoly() = default;
  explicit FPoly(const Poly& p) {
    static constexpr Symbol fs[] = {Symbol::f1, Symbol::f2, Symbol::f3, Symbol::f4};
    for (const auto& t : p.terms()) {
      Term term{t.coef.get_d(), {}};
      unsigned used = 0;
      for (int i = 0; i < 4; ++i) {
        term.exp[i] = t.mono.exp[static_cast<std::size_t>(fs[i])];
        used += term.exp[i];
      }
      if (used != t.mono.degree) throw InvalidArgument("flow coefficient depends on more than f1..f4");
      terms_.push_back(term);
    }
  }

  double operator()(const FlowVector& f) const {
    double total = 0;
    for (const auto& t : terms_) {
      double v = t.coef;
      for (int i = 0; i < 4; ++i)
        for (int e = 0; e < t.exp[i]; ++e) v *= f[i];
      total += v;
    }
    return total;
  }

 private:
  struct Term {
    double coef;
    std::array<int, 4> exp;
  };
  std::vector<Term> terms_;
};

}  // namespace detail

/// -2 Ric of f1 w1^2 + f2 w2^2 + f3 w3^2 + f4 w4^2 in the frame, derived
/// once from the symbolic curvature of the four-parameter diagonal family.
class DiagonalFlowField {
 public:
  static const DiagonalFlowField& instance() {
    static const DiagonalFlowField field;
    return field;
  }

  /// Symbolic components; off-diagonal Ricci entries vanish for this family.
  const std::array<Scalar, 4>& symbolic() const { return rhs_; }

  FlowVector operator()(const FlowVector& f, double tolerance) const {
    for (int i = 0; i < 4; ++i) {
      const std::string name = "f" + std::to_string(i + 1);
      if (!std::isfinite(f[i])) throw DegenerateMetric(name + " is not finite");
      if (!(std::abs(f[i]) > tolerance)) {
        throw DegenerateMetric(name + " = " + detail::shortest(f[i]) + " is within " + detail::shortest(tolerance) +
                               " of zero");
      }
    }
    FlowVector out;
    for (int i = 0; i < 4; ++i) out[i] = num_[i](f) / den_[i](f);
    return out;
  }

 private:
  DiagonalFlowField() {
    const RicciData ric = ricci(metric("diag4"));
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!ric.ricci_frame(i, j).is_zero()) throw Error("diagonal family has off-diagonal Ricci curvature");
    for (int i = 0; i < 4; ++i) {
      rhs_[i] = Scalar(-2) * ric.ricci_frame(i, i);
      num_[i] = detail::FPoly(rhs_[i].numerator());
      den_[i] = detail::FPoly(rhs_[i].denominator());
    }
  }

  std::array<Scalar, 4> rhs_;
  std::array<detail::FPoly, 4> num_, den_;
};

inline FlowVector diagonal_ricci_rhs(const FlowVector& f, double tolerance = 1e-9) {
  return DiagonalFlowField::instance()(f, tolerance);
}

/// One classical Runge-Kutta step of df/dt = -2 Ric. Every stage must keep
/// the signs of `f`: a component crossing zero inside the step is a
/// degeneration the tolerance check alone would step over.
inline FlowVector rk4_step(const FlowVector& f, double h, double tolerance = 1e-9) {
  auto axpy = [](const FlowVector& a, double s, const FlowVector& b) {
    FlowVector out;
    for (int i = 0; i < 4; ++i) out[i] = a[i] + s * b[i];
    return out;
  };
  auto check_signs = [&f](const FlowVector& g) {
    for (int i = 0; i < 4; ++i)
      if (std::signbit(g[i]) != std::signbit(f[i]))
        throw DegenerateMetric("f" + std::to_string(i + 1) + " changes sign within the step");
  };
  auto rhs = [&](const FlowVector& g) {
    check_signs(g);
    return diagonal_ricci_rhs(g, tolerance);
  };
  const FlowVector k1 = rhs(f);
  const FlowVector k2 = rhs(axpy(f, h / 2, k1));
  const FlowVector k3 = rhs(axpy(f, h / 2, k2));
  const FlowVector k4 = rhs(axpy(f, h, k3));
  FlowVector out;
  for (int i = 0; i < 4; ++i) out[i] = f[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  check_signs(out);
  return out;
}

/// RK4 trajectory from `initial` to cfg.t_end. Throws DegenerateMetric
/// naming the time of breakdown.
inline std::vector<FlowState> integrate(const FlowState& initial, const FlowConfig& cfg) {
  if (!(cfg.step > 0)) throw InvalidArgument("step must be positive");
  if (!(cfg.degeneracy_tolerance > 0)) throw InvalidArgument("degeneracy tolerance must be positive");
  if (cfg.sample_every < 1) throw InvalidArgument("sample interval must be at least 1");
  if (!(cfg.t_end >= initial.t)) throw InvalidArgument("t_end precedes the initial time");
  std::vector<FlowState> out{initial};
  FlowState s = initial;
  auto fail = [](double t, const DegenerateMetric& e) {
    std::string why = e.what();
    const std::string prefix = "DegenerateMetric: ";
    if (why.rfind(prefix, 0) == 0) why.erase(0, prefix.size());
    throw DegenerateMetric("metric degenerates at t = " + detail::shortest(t) + " (" + why + ")");
  };
  try {
    diagonal_ricci_rhs(s.f, cfg.degeneracy_tolerance);
  } catch (const DegenerateMetric& e) {
    fail(s.t, e);
  }
  const auto steps = static_cast<long>(std::ceil((cfg.t_end - initial.t) / cfg.step - 1e-9));
  for (long n = 1; n <= steps; ++n) {
    const double t_next = n == steps ? cfg.t_end : initial.t + static_cast<double>(n) * cfg.step;
    try {
      s.f = rk4_step(s.f, t_next - s.t, cfg.degeneracy_tolerance);
    } catch (const DegenerateMetric& e) {
      fail(s.t, e);
    }
    s.t = t_next;
    if (n % cfg.sample_every == 0 || n == steps) out.push_back(s);
  }
  return out;
}

}  // namespace nilrs
