#pragma once

// Brouwer degree in dimensions 1-3: sign change on an interval, winding
// number on a circle with an under-sampling guard, and a solid-angle sum on
// a triangulated sphere (experimental, used only for Galerkin truncations).

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parares/averaged_map.hpp"

namespace parares {

class BoundaryZeroError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class UndersampledBoundaryError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class DegreeUndefinedError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DegreeMethod {
  SignChange1d,
  Winding2d,
  DetSignLinear,
  GalerkinBrute,
};

struct DegreeResult {
  int value = 0;
  DegreeMethod method = DegreeMethod::SignChange1d;
  std::string domain;           // e.g. "(-4,4)" or "B(0,8)"
  double boundary_margin = 0.0; // min |g| on the sampled boundary
  int n_boundary = 0;
};

inline const char* degree_method_name(DegreeMethod m) {
  switch (m) {
    case DegreeMethod::SignChange1d: return "sign-change-1d";
    case DegreeMethod::Winding2d: return "winding-2d";
    case DegreeMethod::DetSignLinear: return "det-sign-linear";
    case DegreeMethod::GalerkinBrute: return "galerkin-brute";
  }
  return "?";
}

inline DegreeResult brouwer_degree_1d(const std::function<double(double)>& g,
                                      double a, double b) {
  const double ga = g(a), gb = g(b);
  if (ga == 0.0 || gb == 0.0)
    throw BoundaryZeroError("degree undefined: g vanishes at an endpoint");
  DegreeResult r;
  r.method = DegreeMethod::SignChange1d;
  r.domain = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  r.boundary_margin = std::min(std::abs(ga), std::abs(gb));
  r.n_boundary = 2;
  const int sa = ga > 0.0 ? 1 : -1;
  const int sb = gb > 0.0 ? 1 : -1;
  r.value = (sb - sa) / 2;
  return r;
}

// Winding number of g around the circle of radius R. Any angle increment
// above pi/2 triggers re-sampling with doubled resolution, up to 2^16 points.
inline DegreeResult brouwer_degree_2d(
    const std::function<Eigen::Vector2d(const Eigen::Vector2d&)>& g, double R,
    int n_boundary = 256) {
  constexpr double kPi = 3.14159265358979323846;
  int n = std::max(n_boundary, 8);
  for (;;) {
    std::vector<double> angles(n);
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double th = 2.0 * kPi * i / n;
      const Eigen::Vector2d p(R * std::cos(th), R * std::sin(th));
      const Eigen::Vector2d v = g(p);
      const double nv = v.norm();
      margin = std::min(margin, nv);
      angles[i] = std::atan2(v.y(), v.x());
    }
    if (!(margin > 0.0))
      throw BoundaryZeroError("degree undefined: g vanishes on the boundary");
    double total = 0.0;
    bool undersampled = false;
    for (int i = 0; i < n; ++i) {
      double d = angles[(i + 1) % n] - angles[i];
      while (d > kPi) d -= 2.0 * kPi;
      while (d < -kPi) d += 2.0 * kPi;
      if (std::abs(d) > kPi / 2.0) {
        undersampled = true;
        break;
      }
      total += d;
    }
    if (undersampled) {
      if (2 * n > (1 << 16))
        throw UndersampledBoundaryError(
            "winding computation under-sampled even at 2^16 boundary points");
      n *= 2;
      continue;
    }
    DegreeResult r;
    r.method = DegreeMethod::Winding2d;
    r.domain = "B(0," + std::to_string(R) + ")";
    r.boundary_margin = margin;
    r.n_boundary = n;
    r.value = static_cast<int>(std::lround(total / (2.0 * kPi)));
    return r;
  }
}

namespace detail {

// Subdivided icosahedron as a triangulation of the unit sphere.
inline void icosphere(int subdivisions, std::vector<Eigen::Vector3d>& verts,
                      std::vector<std::array<int, 3>>& tris) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  verts = {{-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
           {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
           {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& v : verts) v.normalize();
  tris = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
          {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
          {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
          {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int s = 0; s < subdivisions; ++s) {
    std::vector<std::array<int, 3>> next;
    std::vector<std::int64_t> edge_keys;
    std::vector<int> edge_mid;
    auto midpoint = [&](int a, int b) {
      const std::int64_t key =
          (static_cast<std::int64_t>(std::min(a, b)) << 32) | std::max(a, b);
      for (std::size_t i = 0; i < edge_keys.size(); ++i)
        if (edge_keys[i] == key) return edge_mid[i];
      Eigen::Vector3d m = (verts[a] + verts[b]).normalized();
      verts.push_back(m);
      edge_keys.push_back(key);
      edge_mid.push_back(static_cast<int>(verts.size()) - 1);
      return edge_mid.back();
    };
    for (const auto& t : tris) {
      const int ab = midpoint(t[0], t[1]);
      const int bc = midpoint(t[1], t[2]);
      const int ca = midpoint(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }
}

// Signed solid angle of the triangle (a,b,c) seen from the origin.
inline double solid_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                          const Eigen::Vector3d& c) {
  const double num = a.dot(b.cross(c));
  const double den = a.norm() * b.norm() * c.norm() + a.dot(b) * c.norm() +
                     b.dot(c) * a.norm() + c.dot(a) * b.norm();
  return 2.0 * std::atan2(num, den);
}

}  // namespace detail

// Degree of a 3D map on a ball via the normalized-image solid-angle sum over
// a triangulated boundary sphere. Coarse; flagged experimental.
inline DegreeResult brouwer_degree_3d(
    const std::function<Eigen::Vector3d(const Eigen::Vector3d&)>& g, double R,
    int subdivisions = 3) {
  std::vector<Eigen::Vector3d> verts;
  std::vector<std::array<int, 3>> tris;
  detail::icosphere(subdivisions, verts, tris);
  std::vector<Eigen::Vector3d> img(verts.size());
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    img[i] = g(R * verts[i]);
    margin = std::min(margin, img[i].norm());
  }
  if (!(margin > 0.0))
    throw BoundaryZeroError("degree undefined: g vanishes on the boundary");
  double total = 0.0;
  for (const auto& t : tris)
    total += detail::solid_angle(img[t[0]], img[t[1]], img[t[2]]);
  constexpr double kFourPi = 4.0 * 3.14159265358979323846;
  DegreeResult r;
  r.method = DegreeMethod::GalerkinBrute;
  r.domain = "B(0," + std::to_string(R) + ")";
  r.boundary_margin = margin;
  r.n_boundary = static_cast<int>(verts.size());
  const double rounded = total / kFourPi;
  if (std::abs(rounded - std::lround(rounded)) > 0.1)
    throw UndersampledBoundaryError(
        "solid-angle degree did not round cleanly; refine the triangulation");
  r.value = static_cast<int>(std::lround(rounded));
  return r;
}

// Geometric zero-free radius sweep per Lemma 4.4: the LL condition guarantees
// a radius beyond which g has no zeros, but not its size.
inline double zero_free_radius(const AveragedMap& g, int n_sphere = 64,
                               double r_max = 1024.0) {
  const double margin_req =
      1e-6 * g.period() * g.nemytskii().field.bound_m;
  for (double R = 1.0; R <= r_max; R *= 2.0) {
    double margin = std::numeric_limits<double>::infinity();
    if (g.dim() == 1) {
      for (double s : {-R, R})
        margin = std::min(margin,
                          std::abs(g(Eigen::VectorXd::Constant(1, s))[0]));
    } else {
      for (int i = 0; i < n_sphere; ++i) {
        const double th = 2.0 * 3.14159265358979323846 * i / n_sphere;
        Eigen::VectorXd c(2);
        c << R * std::cos(th), R * std::sin(th);
        margin = std::min(margin, g(c).norm());
      }
    }
    if (margin > margin_req) return R;
  }
  throw DegreeUndefinedError(
      "degree undefined: g vanishes on all sampled spheres up to R = " +
      std::to_string(r_max));
}

// deg_B(g, B(0,R) cap N_lambda); R <= 0 requests the radius sweep.
inline DegreeResult degree_of_g(const AveragedMap& g, double R = -1.0,
                                int n_boundary = 256) {
  if (g.dim() < 1 || g.dim() > 2)
    throw std::invalid_argument("degree_of_g supports dim_N in {1,2}");
  if (R <= 0.0) R = zero_free_radius(g);
  if (g.dim() == 1) {
    auto scalar = [&](double c) {
      return g(Eigen::VectorXd::Constant(1, c))[0];
    };
    DegreeResult r = brouwer_degree_1d(scalar, -R, R);
    r.domain = "B(0," + std::to_string(R) + ")";
    return r;
  }
  auto planar = [&](const Eigen::Vector2d& c) {
    Eigen::VectorXd v = g(Eigen::VectorXd(c));
    return Eigen::Vector2d(v[0], v[1]);
  };
  return brouwer_degree_2d(planar, R, n_boundary);
}

}  // namespace parares
