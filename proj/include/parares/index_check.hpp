#pragma once

// Cross-check of the index formula: the Brouwer degree of I - Psi_T^eps on a
// small Galerkin truncation (kernel modes plus the dominant complement modes)
// against (-1)^{mu + dim N} * deg_B(g, ball in the kernel). Also records the
// two candidate parities from the d_k bookkeeping so the direct computation
// can adjudicate between them.

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "parares/averaged_map.hpp"
#include "parares/degree.hpp"
#include "parares/evolution.hpp"
#include "parares/nonlinearity.hpp"
#include "parares/spectral.hpp"

namespace parares {

class GalerkinTailError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexCheckResult {
  int lhs = 0;           // direct degree of I - Psi_T^eps on the truncation
  int rhs = 0;           // (-1)^{mu + dim N} * deg_B(g)
  bool match = false;
  int deg_g = 0;
  MultiplicityReport multiplicity;
  double boundary_margin = 0.0;
  int galerkin_dim = 0;
  double epsilon = 1.0;
  // which Corollary 4.5 parity agrees with the direct computation
  bool parity_dk_matches = false;
  bool parity_mu_dimN_matches = false;
};

inline IndexCheckResult index_formula_check(
    const SpectralOperator& op, const NemytskiiOperator& F, double lambda,
    double T, double R, int galerkin_dim, double epsilon = 1.0,
    const IntegratorConfig& cfg = {}, int n_t = 64) {
  if (galerkin_dim < 1 || galerkin_dim > 3)
    throw std::invalid_argument("galerkin_dim must be in {1,2,3}");
  if (epsilon <= 0.0)
    throw std::invalid_argument(
        "epsilon = 0 leaves Psi_T = identity on the kernel; the degree is "
        "undefined (fixed points on every sphere)");

  KernelData kernel = kernel_data(op, lambda);
  MultiplicityReport mult = multiplicity_report(op, lambda, T);
  if (kernel.dim_N > galerkin_dim)
    throw std::invalid_argument("galerkin_dim smaller than dim N");

  // Complement modes ordered by decreasing monodromy multiplier; every
  // non-contracting mode (multiplier > 1/2) must make it into the truncation.
  std::vector<int> subset = kernel.mode_indices;
  std::vector<int> complement;
  for (int k = 0; k < op.size(); ++k)
    if (std::find(subset.begin(), subset.end(), k) == subset.end())
      complement.push_back(k);
  std::sort(complement.begin(), complement.end(), [&](int a, int b) {
    return std::exp((lambda - op.eigenvalues[a]) * T) >
           std::exp((lambda - op.eigenvalues[b]) * T);
  });
  const int n_extra = galerkin_dim - kernel.dim_N;
  for (int j = 0; j < n_extra; ++j) subset.push_back(complement[j]);
  for (std::size_t j = n_extra; j < complement.size(); ++j) {
    const double mult_j = std::exp((lambda - op.eigenvalues[complement[j]]) * T);
    if (mult_j > 0.5)
      throw GalerkinTailError(
          "discarded tail is not contracting: mode multiplier " +
          std::to_string(mult_j) + " exceeds 1/2; enlarge galerkin_dim");
  }
  std::sort(subset.begin(), subset.end());

  // rhs from the averaged map on the kernel ball; resolve the radius here so
  // the direct degree below uses the same ball
  AveragedMap g = averaged_map(op, F, kernel, n_t);
  if (R <= 0.0) R = zero_free_radius(g);
  DegreeResult dg = degree_of_g(g, R);

  IndexCheckResult res;
  res.multiplicity = mult;
  res.deg_g = dg.value;
  res.galerkin_dim = galerkin_dim;
  res.epsilon = epsilon;
  res.rhs = mult.parity_rhs * dg.value;

  // lhs: G(c) = c - modal(Psi_T^eps(lift(c))) in the truncated coordinates
  auto big_g = [&](const Eigen::VectorXd& c) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(op.size());
    for (std::size_t j = 0; j < subset.size(); ++j)
      x += c[static_cast<int>(j)] * op.modes.col(subset[j]);
    Eigen::VectorXd image =
        translation_operator(op, F, x, epsilon, lambda, T, cfg, subset);
    Eigen::VectorXd image_modal = op.to_modal(image);
    Eigen::VectorXd out(c.size());
    for (std::size_t j = 0; j < subset.size(); ++j)
      out[static_cast<int>(j)] = c[static_cast<int>(j)] - image_modal[subset[j]];
    return out;
  };

  DegreeResult lhs_deg;
  if (galerkin_dim == 1) {
    auto scalar = [&](double c) {
      return big_g(Eigen::VectorXd::Constant(1, c))[0];
    };
    lhs_deg = brouwer_degree_1d(scalar, -R, R);
    lhs_deg.domain = "B(0," + std::to_string(R) + ")";
  } else if (galerkin_dim == 2) {
    auto planar = [&](const Eigen::Vector2d& c) {
      Eigen::VectorXd v = big_g(Eigen::VectorXd(c));
      return Eigen::Vector2d(v[0], v[1]);
    };
    lhs_deg = brouwer_degree_2d(planar, R, 128);
  } else {
    auto volumetric = [&](const Eigen::Vector3d& c) {
      Eigen::VectorXd v = big_g(Eigen::VectorXd(c));
      return Eigen::Vector3d(v[0], v[1], v[2]);
    };
    lhs_deg = brouwer_degree_3d(volumetric, R);
  }
  res.lhs = lhs_deg.value;
  res.boundary_margin = lhs_deg.boundary_margin;
  res.match = res.lhs == res.rhs;
  res.parity_dk_matches = mult.parity_lhs * dg.value == res.lhs;
  res.parity_mu_dimN_matches = mult.parity_rhs * dg.value == res.lhs;
  return res;
}

// Empirical epsilon threshold: the largest eps in a doubling schedule from
// eps0 for which the truncated degree still matches the index formula and no
// boundary fixed points appear. Reported, never asserted.
inline double epsilon_validity_threshold(
    const SpectralOperator& op, const NemytskiiOperator& F, double lambda,
    double T, double R, int galerkin_dim, double eps0 = 1.0 / 16.0,
    const IntegratorConfig& cfg = {}) {
  double last_ok = 0.0;
  for (double eps = eps0; eps <= 1.0; eps *= 2.0) {
    try {
      IndexCheckResult r =
          index_formula_check(op, F, lambda, T, R, galerkin_dim, eps, cfg);
      if (!r.match) break;
      last_ok = eps;
    } catch (const std::exception&) {
      break;
    }
  }
  return last_ok;
}

}  // namespace parares
