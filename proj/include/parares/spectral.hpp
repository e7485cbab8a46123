#pragma once

// Finite-difference discretizations of self-adjoint elliptic operators on an
// interval or a rectangle, with full eigendecomposition. Everything downstream
// (semigroup, projections, eigenvalue counting) is spectral.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "parares/expression.hpp"

namespace parares {

enum class BoundaryCondition { Dirichlet, Neumann };

class GridError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class EllipticityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class NotAtResonanceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node coordinates and quadrature weights for the discrete L^2 inner product.
// Dirichlet uses the vertex-centered grid x_i = i*h, h = L/(n+1); Neumann uses
// cell centers x_i = (i-1/2)*h, h = L/n, so the constant vector is an exact
// null vector of the stiffness matrix. Weights are uniform, so weighted
// orthogonality statements reduce to scaled Euclidean ones.
struct SpatialGrid {
  int dim = 1;
  std::vector<double> lengths;    // per axis
  std::vector<int> n_axis;        // nodes per axis
  std::vector<double> h_axis;     // spacing per axis
  Eigen::VectorXd x1;             // flattened node coordinates
  Eigen::VectorXd x2;             // zero in 1D
  double node_weight = 0.0;       // uniform quadrature weight per node

  int size() const { return static_cast<int>(x1.size()); }
  // Discrete measure carried by the quadrature (sum of weights).
  double measure() const { return node_weight * size(); }
};

struct OperatorSpec {
  BoundaryCondition bc = BoundaryCondition::Neumann;
  int dim = 1;
  double length1 = 3.14159265358979323846;
  double length2 = 3.14159265358979323846;
  int n1 = 64;
  int n2 = 0;  // defaults to n1 in 2D
  Expression coefficient;  // a(x) in divergence form; empty means a == 1
};

struct SpectralOperator {
  SpatialGrid grid;
  BoundaryCondition bc;
  Eigen::MatrixXd stiffness;     // symmetric discretization of A
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd modes;         // columns orthonormal in the weighted product
  Eigen::VectorXd coefficient;   // a(x) sampled at nodes

  int size() const { return grid.size(); }

  Eigen::VectorXd to_modal(const Eigen::VectorXd& v) const {
    return grid.node_weight * (modes.transpose() * v);
  }
  Eigen::VectorXd from_modal(const Eigen::VectorXd& c) const {
    return modes * c;
  }
  double inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    return grid.node_weight * u.dot(v);
  }
  double norm(const Eigen::VectorXd& u) const {
    return std::sqrt(grid.node_weight) * u.norm();
  }
};

struct KernelData {
  double lambda = 0.0;
  Eigen::MatrixXd basis;       // n x dim_N, weighted-orthonormal
  int dim_N = 0;
  Eigen::MatrixXd projector;   // orthogonal projection onto N_lambda
  std::vector<int> mode_indices;  // eigenmode indices in the cluster
};

struct MultiplicityReport {
  int mu_lambda = 0;
  int dim_N = 0;
  int k = 0;           // index of lambda among distinct eigenvalues, 1-based
  int d_k = 0;         // sum of kernel dimensions of distinct eigenvalues below
  int parity_lhs = 1;  // (-1)^{d_k}
  int parity_rhs = 1;  // (-1)^{mu + dim_N}
};

struct ResonanceReport {
  bool a1_holds = false;       // dim Ker(lambda I - A) = dim Ker(I - e^{lambda T} S(T)) > 0
  bool a3_holds = false;       // same comparison; coincides for self-adjoint A
  int dim_ker_operator = 0;
  int dim_ker_monodromy = 0;
  double spectral_gap = 0.0;   // min over off-kernel modes of |1 - e^{(lambda-mu_j)T}|
};

inline double default_rank_tol(double lambda) {
  return 1e-8 * (1.0 + std::abs(lambda));
}

namespace detail {

// 1D stiffness matrix for -d/dx (a(x) du/dx) with the given BC, flux form.
inline Eigen::MatrixXd stiffness_1d(BoundaryCondition bc, double L, int n,
                                    const Expression& coef, double period) {
  const double h = bc == BoundaryCondition::Dirichlet ? L / (n + 1) : L / n;
  auto a_at = [&](double x) {
    if (coef.empty()) return 1.0;
    EvalEnv env;
    env.x1 = x;
    env.period = period;
    double v = coef.eval(env);
    if (!(v > 0.0))
      throw EllipticityError("coefficient a(x) = " + std::to_string(v) +
                             " at x = " + std::to_string(x) +
                             " violates ellipticity");
    return v;
  };
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  if (bc == BoundaryCondition::Dirichlet) {
    // faces between vertices, plus the two boundary faces
    for (int i = 0; i <= n; ++i) {
      const double aF = a_at((i + 0.5) * h);
      if (i > 0) A(i - 1, i - 1) += aF / (h * h);
      if (i < n) A(i, i) += aF / (h * h);
      if (i > 0 && i < n) {
        A(i - 1, i) -= aF / (h * h);
        A(i, i - 1) -= aF / (h * h);
      }
    }
  } else {
    // interior faces only; zero-flux boundary keeps row sums exactly zero
    for (int i = 1; i < n; ++i) {
      const double aF = a_at(i * h);
      A(i - 1, i - 1) += aF / (h * h);
      A(i, i) += aF / (h * h);
      A(i - 1, i) -= aF / (h * h);
      A(i, i - 1) -= aF / (h * h);
    }
  }
  return A;
}

inline SpatialGrid make_grid_1d(BoundaryCondition bc, double L, int n) {
  if (n < 3) throw GridError("grid needs n >= 3 points");
  if (!(L > 0.0)) throw GridError("domain length must be positive");
  SpatialGrid g;
  g.dim = 1;
  g.lengths = {L};
  g.n_axis = {n};
  const double h = bc == BoundaryCondition::Dirichlet ? L / (n + 1) : L / n;
  g.h_axis = {h};
  g.x1.resize(n);
  g.x2 = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i)
    g.x1[i] = bc == BoundaryCondition::Dirichlet ? (i + 1) * h : (i + 0.5) * h;
  g.node_weight = h;
  return g;
}

}  // namespace detail

inline SpectralOperator build_operator(const OperatorSpec& spec,
                                       double period = 1.0) {
  SpectralOperator op;
  op.bc = spec.bc;

  if (spec.dim == 1) {
    op.grid = detail::make_grid_1d(spec.bc, spec.length1, spec.n1);
    op.stiffness = detail::stiffness_1d(spec.bc, spec.length1, spec.n1,
                                        spec.coefficient, period);
  } else if (spec.dim == 2) {
    if (!spec.coefficient.empty())
      throw GridError("2D operators support constant coefficient only");
    const int n1 = spec.n1;
    const int n2 = spec.n2 > 0 ? spec.n2 : spec.n1;
    SpatialGrid gx = detail::make_grid_1d(spec.bc, spec.length1, n1);
    SpatialGrid gy = detail::make_grid_1d(spec.bc, spec.length2, n2);
    Eigen::MatrixXd Ax =
        detail::stiffness_1d(spec.bc, spec.length1, n1, {}, period);
    Eigen::MatrixXd Ay =
        detail::stiffness_1d(spec.bc, spec.length2, n2, {}, period);

    SpatialGrid g;
    g.dim = 2;
    g.lengths = {spec.length1, spec.length2};
    g.n_axis = {n1, n2};
    g.h_axis = {gx.h_axis[0], gy.h_axis[0]};
    const int n = n1 * n2;
    g.x1.resize(n);
    g.x2.resize(n);
    for (int j = 0; j < n2; ++j)
      for (int i = 0; i < n1; ++i) {
        g.x1[j * n1 + i] = gx.x1[i];
        g.x2[j * n1 + i] = gy.x1[j];
      }
    g.node_weight = gx.node_weight * gy.node_weight;
    op.grid = g;

    // 5-point stencil: A = Ax (x) I + I (x) Ay, x-index fastest
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n2; ++j)
      for (int i = 0; i < n1; ++i)
        for (int i2 = 0; i2 < n1; ++i2)
          A(j * n1 + i, j * n1 + i2) += Ax(i, i2);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j)
        for (int j2 = 0; j2 < n2; ++j2)
          A(j * n1 + i, j2 * n1 + i) += Ay(j, j2);
    op.stiffness = A;
  } else {
    throw GridError("dimension must be 1 or 2");
  }

  op.coefficient.resize(op.size());
  for (int i = 0; i < op.size(); ++i) {
    if (spec.coefficient.empty()) {
      op.coefficient[i] = 1.0;
    } else {
      EvalEnv env;
      env.x1 = op.grid.x1[i];
      env.x2 = op.grid.x2[i];
      env.period = period;
      op.coefficient[i] = spec.coefficient.eval(env);
      if (!(op.coefficient[i] > 0.0))
        throw EllipticityError("coefficient a(x) non-positive at node " +
                               std::to_string(i));
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.stiffness);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  op.eigenvalues = es.eigenvalues();
  // weighted-orthonormal columns: ||v||_w = 1 with uniform weight
  op.modes = es.eigenvectors() / std::sqrt(op.grid.node_weight);

  if (spec.bc == BoundaryCondition::Neumann) {
    // The constant vector is an exact null vector by construction; pin the
    // lowest pair so Ker A is represented exactly.
    op.eigenvalues[0] = 0.0;
    op.modes.col(0) =
        Eigen::VectorXd::Constant(op.size(),
                                  1.0 / std::sqrt(op.grid.measure()));
  }
  return op;
}

// e^{lambda t} S_A(t) v, computed mode by mode.
inline Eigen::VectorXd semigroup_apply(const SpectralOperator& op, double t,
                                       double lambda,
                                       const Eigen::VectorXd& v) {
  if (t < 0.0) throw std::invalid_argument("semigroup_apply: t must be >= 0");
  Eigen::VectorXd c = op.to_modal(v);
  for (int k = 0; k < c.size(); ++k)
    c[k] *= std::exp((lambda - op.eigenvalues[k]) * t);
  return op.from_modal(c);
}

inline std::vector<int> eigen_cluster(const SpectralOperator& op, double lambda,
                                      double rank_tol) {
  std::vector<int> idx;
  for (int k = 0; k < op.size(); ++k)
    if (std::abs(op.eigenvalues[k] - lambda) <= rank_tol) idx.push_back(k);
  return idx;
}

inline KernelData kernel_data(const SpectralOperator& op, double lambda,
                              double rank_tol = -1.0) {
  if (rank_tol < 0.0) rank_tol = default_rank_tol(lambda);
  KernelData kd;
  kd.lambda = lambda;
  kd.mode_indices = eigen_cluster(op, lambda, rank_tol);
  kd.dim_N = static_cast<int>(kd.mode_indices.size());
  if (kd.dim_N == 0)
    throw NotAtResonanceError(
        "lambda = " + std::to_string(lambda) +
        " is not an eigenvalue within tolerance; problem is not at resonance");
  kd.basis.resize(op.size(), kd.dim_N);
  for (int j = 0; j < kd.dim_N; ++j)
    kd.basis.col(j) = op.modes.col(kd.mode_indices[j]);
  kd.projector =
      op.grid.node_weight * (kd.basis * kd.basis.transpose());
  return kd;
}

// Distinct eigenvalues as clusters of the sorted spectrum.
inline std::vector<std::vector<int>> distinct_eigenvalue_clusters(
    const SpectralOperator& op, double rank_tol_scale = 1e-8) {
  std::vector<std::vector<int>> clusters;
  for (int k = 0; k < op.size(); ++k) {
    if (!clusters.empty()) {
      const double rep = op.eigenvalues[clusters.back().front()];
      if (std::abs(op.eigenvalues[k] - rep) <=
          rank_tol_scale * (1.0 + std::abs(rep))) {
        clusters.back().push_back(k);
        continue;
      }
    }
    clusters.push_back({k});
  }
  return clusters;
}

inline MultiplicityReport multiplicity_report(const SpectralOperator& op,
                                              double lambda, double T,
                                              double rank_tol = -1.0) {
  if (!(T > 0.0)) throw std::invalid_argument("period must be positive");
  if (rank_tol < 0.0) rank_tol = default_rank_tol(lambda);
  KernelData kd = kernel_data(op, lambda, rank_tol);
  MultiplicityReport r;
  r.dim_N = kd.dim_N;
  // e^{(lambda - mu_j) T} > 1  <=>  mu_j < lambda, for every T > 0
  r.mu_lambda = kd.mode_indices.front();
  auto clusters = distinct_eigenvalue_clusters(op);
  int below = 0;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (clusters[c].front() == kd.mode_indices.front()) {
      r.k = static_cast<int>(c) + 1;
      break;
    }
    below += static_cast<int>(clusters[c].size());
  }
  r.d_k = below;
  r.parity_lhs = r.d_k % 2 == 0 ? 1 : -1;
  r.parity_rhs = (r.mu_lambda + r.dim_N) % 2 == 0 ? 1 : -1;
  return r;
}

// Sign of det((I - e^{lambda T} S_A(T))|_M) with M the orthogonal complement
// of the kernel cluster: assemble the restricted matrix and run an LU.
inline int restricted_determinant_sign(const SpectralOperator& op,
                                       double lambda, double T,
                                       double rank_tol = -1.0) {
  if (rank_tol < 0.0) rank_tol = default_rank_tol(lambda);
  KernelData kd = kernel_data(op, lambda, rank_tol);
  const int n = op.size();
  const int m = n - kd.dim_N;
  Eigen::MatrixXd B(n, m);
  {
    int col = 0;
    std::vector<char> in_cluster(n, 0);
    for (int k : kd.mode_indices) in_cluster[k] = 1;
    for (int k = 0; k < n; ++k)
      if (!in_cluster[k]) B.col(col++) = op.modes.col(k);
  }
  // (I - e^{lambda T} S(T)) applied to each complement basis vector
  Eigen::MatrixXd img(n, m);
  for (int j = 0; j < m; ++j)
    img.col(j) = B.col(j) - semigroup_apply(op, T, lambda, B.col(j));
  Eigen::MatrixXd restricted =
      op.grid.node_weight * (B.transpose() * img);
  const double det = Eigen::PartialPivLU<Eigen::MatrixXd>(restricted)
                         .determinant();
  return det > 0.0 ? 1 : det < 0.0 ? -1 : 0;
}

inline ResonanceReport verify_resonance_conditions(const SpectralOperator& op,
                                                   double lambda, double T,
                                                   double rank_tol = -1.0) {
  if (rank_tol < 0.0) rank_tol = default_rank_tol(lambda);
  ResonanceReport rep;
  auto cluster = eigen_cluster(op, lambda, rank_tol);
  rep.dim_ker_operator = static_cast<int>(cluster.size());

  // Ker(I - e^{lambda T} S(T)) counted through the monodromy multipliers.
  const double mono_tol = rank_tol * T * 10.0 + 1e-12;
  double gap = std::numeric_limits<double>::infinity();
  int mono_dim = 0;
  for (int k = 0; k < op.size(); ++k) {
    const double mult = std::exp((lambda - op.eigenvalues[k]) * T);
    const double dist = std::abs(1.0 - mult);
    if (dist <= mono_tol) {
      ++mono_dim;
    } else {
      gap = std::min(gap, dist);
    }
  }
  rep.dim_ker_monodromy = mono_dim;
  rep.spectral_gap = gap;
  rep.a1_holds = rep.dim_ker_operator > 0 &&
                 rep.dim_ker_operator == rep.dim_ker_monodromy;
  rep.a3_holds = rep.a1_holds;  // A is self-adjoint by construction
  return rep;
}

}  // namespace parares
