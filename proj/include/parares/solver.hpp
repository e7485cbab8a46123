#pragma once

// Fixed points of Psi_T via averaged-map seeding, eps-continuation, and
// Newton shooting with a finite-difference Jacobian on an adaptive Galerkin
// subspace. Certificates are re-verified at doubled resolution.

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "parares/averaged_map.hpp"
#include "parares/degree.hpp"
#include "parares/evolution.hpp"
#include "parares/index_check.hpp"
#include "parares/nonlinearity.hpp"
#include "parares/spectral.hpp"

namespace parares {

class SeedError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverConfig {
  double newton_tol = 1e-8;
  int max_newton_iterations = 40;
  double eps_start = 1.0 / 16.0;
  double escape_radius = 1e3;
  int complement_modes = 4;       // initial Galerkin complement size
  int max_complement_modes = 64;
  IntegratorConfig integrator;
  int n_t = 64;                   // quadrature points for g
  int n_sphere = 64;
};

struct ContinuationRecord {
  double epsilon = 0.0;
  double residual = 0.0;
  int newton_iterations = 0;
};

struct PeriodicCertificate {
  Eigen::VectorXd x_star;
  double residual = 0.0;
  std::vector<ContinuationRecord> epsilon_path;
  DegreeResult degree_report;
  LLVerdict ll;
  double periodicity_check = 0.0;
  double lambda = 0.0;
  double period = 0.0;
};

struct KernelDriftWitness {
  Eigen::VectorXd drift;     // kernel coordinates of Psi_T(x) - x
  double max_deviation = 0.0;  // spread of the drift over the sampled x
  int n_samples = 0;
};

enum class SolveStatus { Certified, NonexistenceWitness, SolverFailed };

struct SolveOutcome {
  SolveStatus status = SolveStatus::SolverFailed;
  std::optional<PeriodicCertificate> certificate;
  std::optional<KernelDriftWitness> witness;
  std::string message;
};

// Zero of g inside B(0,R): bisection in dimension 1, coarse grid plus Newton
// in dimension 2. Guaranteed to exist when the degree is nonzero.
inline Eigen::VectorXd kernel_seed(const AveragedMap& g, double R) {
  const double tol = 1e-8 * g.period() * g.nemytskii().field.bound_m;
  if (g.dim() == 1) {
    auto scalar = [&](double c) {
      return g(Eigen::VectorXd::Constant(1, c))[0];
    };
    double a = -R, b = R;
    double fa = scalar(a), fb = scalar(b);
    if (fa * fb > 0.0) {
      // scan for a bracket; a nonzero-degree g must change sign somewhere
      bool found = false;
      const int n_scan = 256;
      double prev = a, prev_f = fa;
      for (int i = 1; i <= n_scan; ++i) {
        const double c = -R + 2.0 * R * i / n_scan;
        const double fc = scalar(c);
        if (prev_f * fc <= 0.0) {
          a = prev;
          b = c;
          fa = prev_f;
          found = true;
          break;
        }
        prev = c;
        prev_f = fc;
      }
      if (!found)
        throw SeedError(
            "no sign change of g found in B(0,R): degree-zero precondition "
            "failure or insufficient quadrature resolution");
    }
    for (int it = 0; it < 200 && std::abs(b - a) > 1e-14 * R; ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = scalar(mid);
      if (std::abs(fm) <= tol) return Eigen::VectorXd::Constant(1, mid);
      if (fa * fm <= 0.0) {
        b = mid;
      } else {
        a = mid;
        fa = fm;
      }
    }
    const double mid = 0.5 * (a + b);
    if (std::abs(scalar(mid)) > tol)
      throw SeedError("bisection stalled above the seed tolerance");
    return Eigen::VectorXd::Constant(1, mid);
  }

  // dim 2: coarse grid minimizer of |g|, then damped Newton with FD Jacobian
  Eigen::VectorXd best(2);
  double best_norm = std::numeric_limits<double>::infinity();
  const int n_grid = 33;
  for (int i = 0; i < n_grid; ++i)
    for (int j = 0; j < n_grid; ++j) {
      Eigen::VectorXd c(2);
      c << -R + 2.0 * R * i / (n_grid - 1), -R + 2.0 * R * j / (n_grid - 1);
      const double nv = g(c).norm();
      if (nv < best_norm) {
        best_norm = nv;
        best = c;
      }
    }
  Eigen::VectorXd c = best;
  for (int it = 0; it < 80; ++it) {
    Eigen::VectorXd gc = g(c);
    if (gc.norm() <= tol) return c;
    const double fd = 1e-6 * (1.0 + c.norm());
    Eigen::Matrix2d J;
    for (int j = 0; j < 2; ++j) {
      Eigen::VectorXd cp = c;
      cp[j] += fd;
      J.col(j) = (g(cp) - gc) / fd;
    }
    Eigen::Vector2d step = J.fullPivLu().solve(-Eigen::Vector2d(gc));
    double damp = 1.0;
    while (damp > 1e-4 && g(c + damp * step).norm() >= gc.norm())
      damp *= 0.5;
    c += damp * step;
    if (c.norm() > 4.0 * R)
      throw SeedError("kernel Newton escaped the search ball");
  }
  throw SeedError("kernel seed search did not converge: quadrature "
                  "resolution error");
}

namespace detail {

// One Newton solve of x = Psi_T^eps(x) at fixed eps. The Jacobian is a
// finite-difference directional derivative restricted to kernel + n_c
// complement modes; the defect is always measured in the full space.
struct NewtonResult {
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

inline NewtonResult newton_shoot(const SpectralOperator& op,
                                 const NemytskiiOperator& F,
                                 const KernelData& kernel, double epsilon,
                                 double lambda, double T,
                                 const Eigen::VectorXd& x_init,
                                 const SolverConfig& cfg) {
  const int n = op.size();
  int n_c = std::min(cfg.complement_modes, n - kernel.dim_N);

  // complement modes ordered by decreasing monodromy multiplier
  std::vector<int> complement;
  for (int k = 0; k < n; ++k)
    if (std::find(kernel.mode_indices.begin(), kernel.mode_indices.end(), k) ==
        kernel.mode_indices.end())
      complement.push_back(k);
  std::sort(complement.begin(), complement.end(), [&](int a, int b) {
    return op.eigenvalues[a] < op.eigenvalues[b];
  });

  NewtonResult res;
  res.x = x_init;
  auto defect = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    return x - translation_operator(op, F, x, epsilon, lambda, T,
                                    cfg.integrator);
  };

  for (;;) {
    std::vector<int> subset = kernel.mode_indices;
    subset.insert(subset.end(), complement.begin(), complement.begin() + n_c);
    std::sort(subset.begin(), subset.end());
    const int dim = static_cast<int>(subset.size());

    res.iterations = 0;
    bool stagnated = false;
    Eigen::VectorXd G = defect(res.x);
    res.residual = op.norm(G);
    while (res.residual > cfg.newton_tol &&
           res.iterations < cfg.max_newton_iterations) {
      Eigen::VectorXd g_modal_full = op.to_modal(G);
      Eigen::VectorXd g_modal(dim);
      for (int j = 0; j < dim; ++j) g_modal[j] = g_modal_full[subset[j]];

      const double fd = 1e-6 * (1.0 + op.norm(res.x));
      Eigen::MatrixXd J(dim, dim);
      for (int j = 0; j < dim; ++j) {
        Eigen::VectorXd xp = res.x + fd * op.modes.col(subset[j]);
        Eigen::VectorXd Gp = defect(xp);
        Eigen::VectorXd gp_modal_full = op.to_modal(Gp);
        for (int i = 0; i < dim; ++i)
          J(i, j) = (gp_modal_full[subset[i]] - g_modal[i]) / fd;
      }
      Eigen::VectorXd step_modal = J.fullPivLu().solve(-g_modal);
      Eigen::VectorXd step = Eigen::VectorXd::Zero(n);
      for (int j = 0; j < dim; ++j)
        step += step_modal[j] * op.modes.col(subset[j]);

      double damp = 1.0;
      Eigen::VectorXd x_new = res.x + step;
      Eigen::VectorXd G_new = defect(x_new);
      while (damp > 1.0 / 64.0 && op.norm(G_new) >= res.residual) {
        damp *= 0.5;
        x_new = res.x + damp * step;
        G_new = defect(x_new);
      }
      if (op.norm(G_new) >= res.residual * (1.0 - 1e-12)) {
        stagnated = true;
        break;
      }
      res.x = x_new;
      G = G_new;
      res.residual = op.norm(G);
      ++res.iterations;
      if (op.norm(res.x) > cfg.escape_radius)
        throw IntegrationError("no bounded orbit found: Newton iterate "
                               "escaped the search radius");
    }

    if (res.residual <= cfg.newton_tol) {
      // residual component outside the subspace decides whether to grow n_c
      Eigen::VectorXd g_modal_full = op.to_modal(G);
      double outside = 0.0;
      {
        std::vector<char> in(n, 0);
        for (int k : subset) in[k] = 1;
        for (int k = 0; k < n; ++k)
          if (!in[k]) outside += g_modal_full[k] * g_modal_full[k];
      }
      if (std::sqrt(outside) > cfg.newton_tol && n_c < cfg.max_complement_modes &&
          n_c < n - kernel.dim_N) {
        n_c = std::min({n_c + 4, cfg.max_complement_modes, n - kernel.dim_N});
        continue;
      }
      res.converged = true;
      return res;
    }
    if (stagnated || res.iterations >= cfg.max_newton_iterations) {
      if (n_c < cfg.max_complement_modes && n_c < n - kernel.dim_N) {
        n_c = std::min({n_c * 2, cfg.max_complement_modes, n - kernel.dim_N});
        continue;
      }
      return res;  // best effort, not converged
    }
  }
}

}  // namespace detail

// Kernel drift check for degree-zero problems: when g has no zero the kernel
// coordinate of Psi_T(x) - x is (for pure forcing) independent of x, which
// certifies nonexistence.
inline KernelDriftWitness kernel_drift_witness(
    const SpectralOperator& op, const NemytskiiOperator& F,
    const KernelData& kernel, double epsilon, double lambda, double T,
    const SolverConfig& cfg = {}, int n_samples = 10,
    unsigned seed = 987654321u) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  KernelDriftWitness w;
  w.n_samples = n_samples;
  std::vector<Eigen::VectorXd> drifts;
  for (int s = 0; s < n_samples; ++s) {
    Eigen::VectorXd x(op.size());
    for (int i = 0; i < x.size(); ++i) x[i] = gauss(rng);
    x *= 1.0 / (std::sqrt(op.grid.node_weight) * x.norm());
    Eigen::VectorXd image =
        translation_operator(op, F, x, epsilon, lambda, T, cfg.integrator);
    Eigen::VectorXd diff_modal = op.to_modal(image - x);
    Eigen::VectorXd d(kernel.dim_N);
    for (int j = 0; j < kernel.dim_N; ++j) d[j] = diff_modal[kernel.mode_indices[j]];
    drifts.push_back(d);
  }
  w.drift = drifts.front();
  for (const auto& d : drifts)
    w.max_deviation = std::max(w.max_deviation, (d - w.drift).norm());
  return w;
}

inline SolveOutcome solve_periodic(const SpectralOperator& op,
                                   const NemytskiiOperator& F, double lambda,
                                   double T, const SolverConfig& cfg = {}) {
  SolveOutcome out;
  KernelData kernel = kernel_data(op, lambda);
  AveragedMap g = averaged_map(op, F, kernel, cfg.n_t);

  LLVerdict ll;
  bool ll_available = true;
  try {
    ll = ll_verdict(F, kernel, cfg.n_sphere, cfg.n_t);
  } catch (const LLNotApplicableError&) {
    ll_available = false;
  }

  // With no usable degree (g never vanishes, or vanishes everywhere), the
  // kernel drift can still certify nonexistence when it is x-independent.
  auto try_nonexistence = [&](const std::string& fallback) -> SolveOutcome {
    SolveOutcome o;
    KernelDriftWitness w =
        kernel_drift_witness(op, F, kernel, 1.0, lambda, T, cfg);
    if (w.drift.norm() > 10.0 * cfg.newton_tol &&
        w.max_deviation <= 1e-9 * (1.0 + w.drift.norm())) {
      o.status = SolveStatus::NonexistenceWitness;
      o.witness = w;
      o.message =
          "kernel coordinate drifts by a constant nonzero amount per period; "
          "no T-periodic solution exists";
    } else {
      o.status = SolveStatus::SolverFailed;
      o.message = fallback;
    }
    return o;
  };

  DegreeResult dg;
  try {
    dg = degree_of_g(g);
  } catch (const DegreeUndefinedError& e) {
    return try_nonexistence(e.what());
  }
  if (dg.value == 0)
    return try_nonexistence("degree of g is zero: existence not guaranteed");

  Eigen::VectorXd seed_coords = kernel_seed(g, zero_free_radius(g));
  Eigen::VectorXd x = kernel.basis * seed_coords;

  PeriodicCertificate cert;
  cert.lambda = lambda;
  cert.period = T;
  cert.degree_report = dg;
  cert.ll = ll_available ? ll : LLVerdict{};

  // eps-continuation with doubling, halving the step on failure
  double eps = cfg.eps_start;
  double prev_eps = 0.0;
  int halvings = 0;
  while (prev_eps < 1.0) {
    detail::NewtonResult nr;
    try {
      nr = detail::newton_shoot(op, F, kernel, eps, lambda, T, x, cfg);
    } catch (const IntegrationError& e) {
      out.status = SolveStatus::SolverFailed;
      out.message = e.what();
      return out;
    }
    if (nr.converged) {
      x = nr.x;
      cert.epsilon_path.push_back({eps, nr.residual, nr.iterations});
      prev_eps = eps;
      eps = std::min(1.0, eps * 2.0);
      if (prev_eps == 1.0) break;
    } else {
      const double next = 0.5 * (prev_eps + eps);
      if (++halvings > 20 || next <= prev_eps * (1.0 + 1e-12)) {
        out.status = SolveStatus::SolverFailed;
        out.message = "Newton stagnation at eps = " + std::to_string(eps) +
                      ", best residual " + std::to_string(nr.residual);
        return out;
      }
      eps = next;
    }
  }

  cert.x_star = x;
  cert.residual = cert.epsilon_path.back().residual;
  // periodicity over a second period
  Trajectory two =
      mild_solve(op, F, x, 2.0 * T, 1.0, lambda,
                 IntegratorConfig{2 * cfg.integrator.n_steps,
                                  cfg.integrator.scheme,
                                  cfg.integrator.picard_iterations});
  const int half = cfg.integrator.n_steps;
  cert.periodicity_check =
      op.norm(two.states[2 * half] - two.states[half]);

  out.status = SolveStatus::Certified;
  out.certificate = cert;
  return out;
}

struct VerificationReport {
  bool ok = false;
  double residual_2x = 0.0;
  double periodicity_2x = 0.0;
  bool ll_ok = false;
  bool degree_ok = false;
  std::string message;
};

// Re-integrates the certified orbit at doubled resolution over [0, 2T] and
// re-checks the LL verdict and the degree.
inline VerificationReport verify_certificate(const PeriodicCertificate& cert,
                                             const SpectralOperator& op,
                                             const NemytskiiOperator& F,
                                             double lambda, double T,
                                             const SolverConfig& cfg = {}) {
  VerificationReport rep;
  IntegratorConfig fine{2 * cfg.integrator.n_steps, cfg.integrator.scheme,
                        cfg.integrator.picard_iterations};
  Trajectory traj = mild_solve(op, F, cert.x_star, 2.0 * T, 1.0, lambda,
                               IntegratorConfig{2 * fine.n_steps, fine.scheme,
                                                fine.picard_iterations});
  const int half = fine.n_steps;
  rep.residual_2x = op.norm(traj.states[half] - traj.states[0]);
  rep.periodicity_2x = op.norm(traj.states[2 * half] - traj.states[half]);
  const double budget = 10.0 * std::max(cert.residual, cfg.newton_tol);
  KernelData kernel = kernel_data(op, lambda);
  try {
    LLVerdict ll = ll_verdict(F, kernel, cfg.n_sphere, cfg.n_t);
    rep.ll_ok = ll.kind != LLVerdictKind::Fails;
  } catch (const LLNotApplicableError&) {
    rep.ll_ok = true;  // LL was never claimed
  }
  try {
    AveragedMap g = averaged_map(op, F, kernel, cfg.n_t);
    rep.degree_ok = degree_of_g(g).value != 0;
  } catch (const std::exception&) {
    rep.degree_ok = false;
  }
  rep.ok = rep.residual_2x <= budget && rep.periodicity_2x <= budget &&
           rep.degree_ok;
  if (!rep.ok)
    rep.message = "certificate revoked: residual " +
                  std::to_string(rep.residual_2x) + ", periodicity " +
                  std::to_string(rep.periodicity_2x) + ", budget " +
                  std::to_string(budget);
  return rep;
}

}  // namespace parares
