#pragma once

// Scalar reaction term f(t,x,y) with asymptotic limits f_±, the induced
// Nemytskii operator, and the Landesman-Lazer integrals over the kernel.

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "parares/expression.hpp"
#include "parares/spectral.hpp"

namespace parares {

class LLNotApplicableError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonlinearField {
  Expression expr;                    // f(t,x,y)
  double bound_m = 1.0;               // |f| <= m
  double lipschitz = 1.0;             // |f(..,y1)-f(..,y2)| <= L|y1-y2|
  double period = 1.0;                // declared period T
  std::optional<Expression> f_plus;   // lim_{y->+inf} f
  std::optional<Expression> f_minus;  // lim_{y->-inf} f

  double eval(double t, double x1, double x2, double y) const {
    EvalEnv env{t, x1, x2, y, period};
    return expr.eval(env);
  }
  bool has_limits() const { return f_plus.has_value() && f_minus.has_value(); }
};

struct FieldValidation {
  bool bound_ok = true;
  bool lipschitz_ok = true;
  bool periodic_ok = true;
  bool limits_ok = true;
  double worst_bound = 0.0;       // max |f| observed
  double worst_lipschitz = 0.0;   // max |df|/|dy| observed
  double worst_period_gap = 0.0;  // max |f(t+T)-f(t)| observed
};

// Sampled checks of conditions (a)-(d) on a (t,x,y) lattice.
inline FieldValidation validate_field(const NonlinearField& f,
                                      const SpatialGrid& grid,
                                      int n_t = 16, int n_y = 33) {
  FieldValidation v;
  std::vector<double> ys;
  for (int i = 0; i < n_y; ++i)
    ys.push_back(-50.0 + 100.0 * i / (n_y - 1));
  for (int it = 0; it <= n_t; ++it) {
    const double t = f.period * it / n_t;
    for (int ix = 0; ix < grid.size(); ix += std::max(1, grid.size() / 16)) {
      const double x1 = grid.x1[ix], x2 = grid.x2[ix];
      double prev_y = 0.0, prev_val = 0.0;
      bool have_prev = false;
      for (double y : ys) {
        const double val = f.eval(t, x1, x2, y);
        v.worst_bound = std::max(v.worst_bound, std::abs(val));
        v.worst_period_gap =
            std::max(v.worst_period_gap,
                     std::abs(f.eval(t + f.period, x1, x2, y) - val));
        if (have_prev && y != prev_y)
          v.worst_lipschitz = std::max(
              v.worst_lipschitz, std::abs(val - prev_val) / (y - prev_y));
        prev_y = y;
        prev_val = val;
        have_prev = true;
      }
    }
  }
  v.bound_ok = v.worst_bound <= f.bound_m + 1e-12;
  v.lipschitz_ok = v.worst_lipschitz <= f.lipschitz + 1e-9;
  v.periodic_ok = v.worst_period_gap <= 1e-12;
  if (f.has_limits()) {
    // |f(t,x,±Y) - f_±(t,x)| must shrink monotonically along Y = 10^k
    for (int it = 0; it < 4 && v.limits_ok; ++it) {
      const double t = f.period * it / 4.0;
      for (int ix = 0; ix < grid.size() && v.limits_ok;
           ix += std::max(1, grid.size() / 8)) {
        const double x1 = grid.x1[ix], x2 = grid.x2[ix];
        EvalEnv env{t, x1, x2, 0.0, f.period};
        const double fp = f.f_plus->eval(env);
        const double fm = f.f_minus->eval(env);
        double prev_gap_p = std::numeric_limits<double>::infinity();
        double prev_gap_m = prev_gap_p;
        for (double Y : {1e1, 1e2, 1e3, 1e4}) {
          const double gp = std::abs(f.eval(t, x1, x2, Y) - fp);
          const double gm = std::abs(f.eval(t, x1, x2, -Y) - fm);
          if (gp > prev_gap_p + 1e-12 || gm > prev_gap_m + 1e-12)
            v.limits_ok = false;
          prev_gap_p = gp;
          prev_gap_m = gm;
        }
      }
    }
  }
  return v;
}

struct NemytskiiOperator {
  NonlinearField field;
  SpatialGrid grid;
};

// F(t,u)(x) := f(t, x, u(x)), applied nodewise.
inline Eigen::VectorXd apply_F(const NemytskiiOperator& F, double t,
                               const Eigen::VectorXd& u) {
  if (u.size() != F.grid.size())
    throw std::invalid_argument("apply_F: state length does not match grid");
  Eigen::VectorXd out(u.size());
  for (int i = 0; i < u.size(); ++i)
    out[i] = F.field.eval(t, F.grid.x1[i], F.grid.x2[i], u[i]);
  return out;
}

namespace detail {

// Composite Simpson over [0, T] with n_t (even) intervals.
template <class Fn>
double simpson(Fn&& fn, double T, int n_t) {
  if (n_t < 2) n_t = 2;
  if (n_t % 2) ++n_t;
  const double h = T / n_t;
  double acc = fn(0.0) + fn(T);
  for (int i = 1; i < n_t; ++i) acc += (i % 2 ? 4.0 : 2.0) * fn(i * h);
  return acc * h / 3.0;
}

}  // namespace detail

// Landesman-Lazer functional at a unit kernel vector u:
//   int_0^T int_{u>0} f_+ u + int_0^T int_{u<0} f_- u.
// Nodes with |u| <= 1e-12 contribute nothing (nodal sets have measure zero).
inline double ll_integrand(const NemytskiiOperator& F, const Eigen::VectorXd& u,
                           int n_t = 64) {
  if (!F.field.has_limits())
    throw LLNotApplicableError(
        "asymptotic limits f_± undeclared: LL not applicable");
  const double w = F.grid.node_weight;
  const double T = F.field.period;
  auto space_sum = [&](double t) {
    double acc = 0.0;
    for (int i = 0; i < F.grid.size(); ++i) {
      const double ui = u[i];
      if (std::abs(ui) <= 1e-12) continue;
      EvalEnv env{t, F.grid.x1[i], F.grid.x2[i], 0.0, T};
      const double lim =
          ui > 0.0 ? F.field.f_plus->eval(env) : F.field.f_minus->eval(env);
      acc += w * lim * ui;
    }
    return acc;
  };
  return detail::simpson(space_sum, T, n_t);
}

enum class LLVerdictKind { HoldsPositive, HoldsNegative, Fails };

struct LLVerdict {
  LLVerdictKind kind = LLVerdictKind::Fails;
  Eigen::VectorXd witness;   // direction with smallest |value| / sign change
  double min_abs_value = 0.0;
  int n_sampled = 0;         // 2 for dim_N=1, n_sphere for dim_N=2
  bool sampled_only = false; // true when the unit sphere was only sampled
};

inline LLVerdict ll_verdict(const NemytskiiOperator& F, const KernelData& kernel,
                            int n_sphere = 64, int n_t = 64) {
  if (kernel.dim_N < 1 || kernel.dim_N > 2)
    throw std::invalid_argument(
        "ll_verdict supports kernel dimensions 1 and 2 only");

  std::vector<Eigen::VectorXd> directions;
  if (kernel.dim_N == 1) {
    directions.push_back(kernel.basis.col(0));
    directions.push_back(-kernel.basis.col(0));
  } else {
    for (int i = 0; i < n_sphere; ++i) {
      const double th = 2.0 * 3.14159265358979323846 * i / n_sphere;
      directions.push_back(std::cos(th) * kernel.basis.col(0) +
                           std::sin(th) * kernel.basis.col(1));
    }
  }

  LLVerdict v;
  v.n_sampled = static_cast<int>(directions.size());
  v.sampled_only = kernel.dim_N == 2;
  v.min_abs_value = std::numeric_limits<double>::infinity();
  int n_pos = 0, n_neg = 0;
  const double zero_tol = 1e-12 * F.field.period * (1.0 + F.field.bound_m);
  for (const auto& u : directions) {
    const double val = ll_integrand(F, u, n_t);
    if (std::abs(val) < v.min_abs_value) {
      v.min_abs_value = std::abs(val);
      v.witness = u;
    }
    if (val > zero_tol) ++n_pos;
    else if (val < -zero_tol) ++n_neg;
  }
  if (n_pos == v.n_sampled) v.kind = LLVerdictKind::HoldsPositive;
  else if (n_neg == v.n_sampled) v.kind = LLVerdictKind::HoldsNegative;
  else v.kind = LLVerdictKind::Fails;
  return v;
}

}  // namespace parares
