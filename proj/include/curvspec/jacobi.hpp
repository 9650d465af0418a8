#pragma once

#include <Eigen/Dense>
#include <ostream>
#include <string>
#include <vector>

#include "curvspec/geometry.hpp"

namespace curvspec {

struct GeodesicState {
  double t = 0.0;
  Eigen::VectorXd x;  // position
  Eigen::VectorXd u;  // velocity dx/dt
};

struct GeodesicTrajectory {
  std::vector<std::string> coords;
  std::vector<GeodesicState> states;  // steps + 1 samples including t = 0
  double t_max = 0.0;
  int steps = 0;
};

struct JacobiState {
  double t = 0.0;
  Eigen::VectorXd v;  // deviation vector
  Eigen::VectorXd w;  // covariant derivative Dv/dt
  double v_norm_g = 0.0;  // sqrt(|g(v,v)|) at the geodesic point
};

struct DecoupledValue {
  double value = 0.0;
  double derivative = 0.0;
};

// Fixed-step RK4 on x'' = -Gamma(x) x' x'.
GeodesicTrajectory integrate_geodesic(const MetricSpec& spec,
                                      const Eigen::VectorXd& x0,
                                      const Eigen::VectorXd& u0, double t_max,
                                      int steps);

// Fixed-step RK4 on the coupled geodesic + Jacobi system
//   v' = w - Gamma(u, v),  w' = -Gamma(u, w) - R(u, v, u)
// re-integrated from the trajectory's initial data (same grid, no
// interpolation) so the combined scheme keeps fourth order.
std::vector<JacobiState> integrate_jacobi(const MetricSpec& spec,
                                          const GeodesicTrajectory& trajectory,
                                          const Eigen::VectorXd& v0,
                                          const Eigen::VectorXd& w0);

// Closed-form solution of the scalar comparison equation f'' + theta f = 0
// with f(0) = v0, f'(0) = w0.
DecoupledValue decoupled_solution(double theta, double v0, double w0, double t);

// One row per sample: t, x..., u..., and when Jacobi data is given v..., w...,
// |v|_g.
void write_trajectory_csv(std::ostream& os, const GeodesicTrajectory& trajectory,
                          const std::vector<JacobiState>* jacobi = nullptr);

}  // namespace curvspec
