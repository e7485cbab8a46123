#pragma once

// Mild-solution integration u(t) = e^{lambda t}S(t)x0
//   + eps * int_0^t e^{lambda(t-s)}S(t-s)F(s,u(s)) ds
// by exponential integrators in modal coordinates: the linear part is exact,
// the nonlinearity is evaluated nodally with two transforms per step.

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "parares/nonlinearity.hpp"
#include "parares/spectral.hpp"

namespace parares {

class IntegrationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Scheme { ExponentialEuler, ExponentialMidpoint };

struct IntegratorConfig {
  int n_steps = 256;  // per unit of t_end
  Scheme scheme = Scheme::ExponentialMidpoint;
  int picard_iterations = 2;  // midpoint substep refinement
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;  // nodal
  double epsilon = 0.0;
  double lambda_shift = 0.0;
  double node_weight = 1.0;

  double norm(const Eigen::VectorXd& u) const {
    return std::sqrt(node_weight) * u.norm();
  }
  const Eigen::VectorXd& final_state() const { return states.back(); }
};

// (e^z - 1)/z with a series fallback near zero.
inline double phi1(double z) {
  if (std::abs(z) < 1e-4)
    return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
  return std::expm1(z) / z;
}

// (e^z - 1 - z)/z^2, same treatment.
inline double phi2(double z) {
  if (std::abs(z) < 1e-3)
    return 0.5 + z / 6.0 + z * z / 24.0 + z * z * z / 120.0;
  return (std::expm1(z) - z) / (z * z);
}

namespace detail {

// Modal restriction of the Nemytskii operator to a subset of modes. An empty
// subset means the full spectrum.
struct ModalWorkspace {
  const SpectralOperator& op;
  std::vector<int> modes;  // selected eigenmode indices, ascending

  explicit ModalWorkspace(const SpectralOperator& op_,
                          std::vector<int> subset = {})
      : op(op_), modes(std::move(subset)) {
    if (modes.empty())
      for (int k = 0; k < op.size(); ++k) modes.push_back(k);
  }

  int dim() const { return static_cast<int>(modes.size()); }

  Eigen::VectorXd restrict_modal(const Eigen::VectorXd& full_modal) const {
    Eigen::VectorXd c(dim());
    for (int j = 0; j < dim(); ++j) c[j] = full_modal[modes[j]];
    return c;
  }

  Eigen::VectorXd to_nodal(const Eigen::VectorXd& c) const {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(op.size());
    for (int j = 0; j < dim(); ++j) u += c[j] * op.modes.col(modes[j]);
    return u;
  }

  Eigen::VectorXd project_F(const NemytskiiOperator& F, double t,
                            const Eigen::VectorXd& u) const {
    Eigen::VectorXd fu = apply_F(F, t, u);
    if (!fu.allFinite())
      throw IntegrationError("non-finite nonlinearity value at t = " +
                             std::to_string(t));
    Eigen::VectorXd c(dim());
    for (int j = 0; j < dim(); ++j)
      c[j] = op.grid.node_weight * op.modes.col(modes[j]).dot(fu);
    return c;
  }
};

}  // namespace detail

inline Trajectory mild_solve(const SpectralOperator& op,
                             const NemytskiiOperator& F,
                             const Eigen::VectorXd& x0, double t_end,
                             double epsilon, double lambda,
                             const IntegratorConfig& cfg = {},
                             const std::vector<int>& mode_subset = {}) {
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("epsilon must lie in [0,1]");
  if (cfg.n_steps < 8) throw std::invalid_argument("n_steps must be >= 8");

  detail::ModalWorkspace ws(op, mode_subset);
  const int n_steps = cfg.n_steps;
  const double h = t_end / n_steps;

  Eigen::VectorXd exps(ws.dim()), full_phi1(ws.dim()), full_phi2(ws.dim());
  for (int j = 0; j < ws.dim(); ++j) {
    const double z = (lambda - op.eigenvalues[ws.modes[j]]) * h;
    exps[j] = std::exp(z);
    full_phi1[j] = phi1(z);
    full_phi2[j] = phi2(z);
  }

  Eigen::VectorXd c = ws.restrict_modal(op.to_modal(x0));
  // keep the supplied initial condition bit-exact in the full-spectrum case
  Eigen::VectorXd u0 = mode_subset.empty() ? x0 : ws.to_nodal(c);

  Trajectory traj;
  traj.epsilon = epsilon;
  traj.lambda_shift = lambda;
  traj.node_weight = op.grid.node_weight;
  traj.times.reserve(n_steps + 1);
  traj.states.reserve(n_steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(u0);

  for (int step = 0; step < n_steps; ++step) {
    const double t = step * h;
    Eigen::VectorXd c_next;
    if (cfg.scheme == Scheme::ExponentialEuler || epsilon == 0.0) {
      c_next = (exps.array() * c.array()).matrix();
      if (epsilon != 0.0) {
        Eigen::VectorXd fc = ws.project_F(F, t, ws.to_nodal(c));
        c_next += epsilon * h * (full_phi1.array() * fc.array()).matrix();
      }
    } else {
      // exponential trapezoidal rule (stiff order 2), Picard-refined:
      // c+ = e^{hM} c + h phi1 F(t_n) + h phi2 (F(t_{n+1}, c+) - F(t_n))
      Eigen::VectorXd fc0 = ws.project_F(F, t, ws.to_nodal(c));
      Eigen::VectorXd base =
          (exps.array() * c.array()).matrix() +
          epsilon * h * (full_phi1.array() * fc0.array()).matrix();
      c_next = base;  // exponential-Euler predictor
      for (int it = 0; it < std::max(1, cfg.picard_iterations); ++it) {
        Eigen::VectorXd f1 = ws.project_F(F, t + h, ws.to_nodal(c_next));
        c_next = base + epsilon * h *
                            (full_phi2.array() * (f1 - fc0).array()).matrix();
      }
    }
    if (!c_next.allFinite())
      throw IntegrationError("integration aborted at step " +
                             std::to_string(step) + " (t = " +
                             std::to_string(t) + "): non-finite state");
    c = c_next;
    traj.times.push_back((step + 1) * h);
    traj.states.push_back(ws.to_nodal(c));
  }
  return traj;
}

// Time-T state of the translation-along-trajectories operator Psi_T.
inline Eigen::VectorXd translation_operator(
    const SpectralOperator& op, const NemytskiiOperator& F,
    const Eigen::VectorXd& x0, double epsilon, double lambda, double T,
    const IntegratorConfig& cfg = {}, const std::vector<int>& mode_subset = {}) {
  if (epsilon == 0.0) return semigroup_apply(op, T, lambda, x0);
  return mild_solve(op, F, x0, T, epsilon, lambda, cfg, mode_subset)
      .final_state();
}

struct AprioriBound {
  double c0 = 0.0;
  double c1 = 0.0;
  double max_norm = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

// Gronwall bound with C0 = R M e^{|w|t0} + t0 K M e^{|w|t0},
// C1 = K M e^{|w|t0}: every mild solution obeys ||u(t)|| <= C0 e^{t0 C1}.
inline AprioriBound a_priori_bound(const Trajectory& traj, double M,
                                   double omega, double K, double R) {
  AprioriBound b;
  const double t0 = traj.times.back();
  const double amp = M * std::exp(std::abs(omega) * t0);
  b.c0 = R * amp + t0 * K * amp;
  b.c1 = K * amp;
  for (const auto& u : traj.states)
    b.max_norm = std::max(b.max_norm, traj.norm(u));
  b.bound = b.c0 * std::exp(t0 * b.c1);
  b.satisfied = b.max_norm <= b.bound * (1.0 + 1e-12);
  return b;
}

// Max over n random perturbations ||x - x0|| <= delta of
// sup_t ||u(t;x) - u(t;x0)||.
inline double continuity_probe(const SpectralOperator& op,
                               const NemytskiiOperator& F, double epsilon,
                               double lambda, double T,
                               const Eigen::VectorXd& x0, double delta, int n,
                               const IntegratorConfig& cfg = {},
                               unsigned seed = 20240817u) {
  if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
  if (delta == 0.0 || n <= 0) return 0.0;
  Trajectory base = mild_solve(op, F, x0, T, epsilon, lambda, cfg);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < n; ++trial) {
    Eigen::VectorXd d(x0.size());
    for (int i = 0; i < d.size(); ++i) d[i] = gauss(rng);
    d *= delta / (std::sqrt(op.grid.node_weight) * d.norm());
    Trajectory pert = mild_solve(op, F, x0 + d, T, epsilon, lambda, cfg);
    for (std::size_t i = 0; i < base.states.size(); ++i)
      worst = std::max(worst, base.norm(pert.states[i] - base.states[i]));
  }
  return worst;
}

}  // namespace parares
