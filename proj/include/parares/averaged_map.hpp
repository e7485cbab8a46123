#pragma once

// The averaged kernel map g(u) = int_0^T P F(t,u) dt in kernel coordinates,
// and the scalar reduction g_0 for the constant-kernel (Neumann) setting.

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>

#include "parares/nonlinearity.hpp"
#include "parares/spectral.hpp"

namespace parares {

class AveragedMap {
 public:
  AveragedMap(const SpectralOperator& op, NemytskiiOperator F,
              KernelData kernel, int n_t = 64)
      : op_(&op), F_(std::move(F)), kernel_(std::move(kernel)), n_t_(n_t) {
    if (n_t_ < 4) throw std::invalid_argument("averaged map needs n_t >= 4");
  }

  const KernelData& kernel() const { return kernel_; }
  const NemytskiiOperator& nemytskii() const { return F_; }
  double period() const { return F_.field.period; }
  int dim() const { return kernel_.dim_N; }
  // || g(u) || <= T * m * nu(Omega)^{1/2} for every u
  double norm_bound() const {
    return period() * F_.field.bound_m * std::sqrt(F_.grid.measure());
  }

  // kernel coordinates in, kernel coordinates out
  Eigen::VectorXd operator()(const Eigen::VectorXd& coords) const {
    if (coords.size() != kernel_.dim_N)
      throw std::invalid_argument("averaged map: wrong coordinate dimension");
    const Eigen::VectorXd u = kernel_.basis * coords;
    auto integrand = [&](double t) {
      Eigen::VectorXd fu = apply_F(F_, t, u);
      Eigen::VectorXd g(kernel_.dim_N);
      for (int j = 0; j < kernel_.dim_N; ++j)
        g[j] = op_->grid.node_weight * kernel_.basis.col(j).dot(fu);
      return g;
    };
    // composite Simpson, vector-valued
    int n = n_t_ % 2 ? n_t_ + 1 : n_t_;
    const double T = period();
    const double h = T / n;
    Eigen::VectorXd acc = integrand(0.0) + integrand(T);
    for (int i = 1; i < n; ++i)
      acc += (i % 2 ? 4.0 : 2.0) * integrand(i * h);
    return acc * h / 3.0;
  }

 private:
  const SpectralOperator* op_;
  NemytskiiOperator F_;
  KernelData kernel_;
  int n_t_;
};

inline AveragedMap averaged_map(const SpectralOperator& op,
                                const NemytskiiOperator& F,
                                const KernelData& kernel, int n_t = 64) {
  return AveragedMap(op, F, kernel, n_t);
}

// g_0(y) = int_0^T int_Omega f(t,x,y) dx dt. In the Neumann constant-kernel
// setting, g_0(y) = nu(Omega) * K^{-1}(g(K(y))) with K(y) = y * e.
inline std::function<double(double)> g0_scalar(const NemytskiiOperator& F,
                                               int n_t = 64) {
  NemytskiiOperator Fc = F;
  return [Fc, n_t](double y) {
    auto space_sum = [&](double t) {
      double acc = 0.0;
      for (int i = 0; i < Fc.grid.size(); ++i)
        acc += Fc.grid.node_weight *
               Fc.field.eval(t, Fc.grid.x1[i], Fc.grid.x2[i], y);
      return acc;
    };
    return detail::simpson(space_sum, Fc.field.period, n_t);
  };
}

}  // namespace parares
