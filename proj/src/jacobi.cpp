#include "curvspec/jacobi.hpp"

#include <cmath>
#include <iomanip>

namespace curvspec {
namespace {

template <class F>
Eigen::VectorXd rk4_step(const F& f, const Eigen::VectorXd& y, double h) {
  Eigen::VectorXd k1 = f(y);
  Eigen::VectorXd k2 = f(y + 0.5 * h * k1);
  Eigen::VectorXd k3 = f(y + 0.5 * h * k2);
  Eigen::VectorXd k4 = f(y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_inputs(const MetricSpec& spec, const Eigen::VectorXd& x0,
                  const Eigen::VectorXd& u0, int steps) {
  if (x0.size() != spec.dim() || u0.size() != spec.dim())
    throw Error("initial data dimension does not match metric");
  if (steps < 1) throw Error("step count must be at least 1");
}

}  // namespace

GeodesicTrajectory integrate_geodesic(const MetricSpec& spec,
                                      const Eigen::VectorXd& x0,
                                      const Eigen::VectorXd& u0, double t_max,
                                      int steps) {
  check_inputs(spec, x0, u0, steps);
  const int n = spec.dim();
  const double h = t_max / steps;

  auto deriv = [&](const Eigen::VectorXd& y) {
    Eigen::VectorXd x = y.head(n), u = y.segment(n, n);
    ChristoffelJet cj = christoffel(metric_at(spec, x));
    Eigen::VectorXd dy(2 * n);
    dy.head(n) = u;
    for (int l = 0; l < n; ++l) {
      double a = 0.0;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) a += cj.gamma(l, j, k) * u[j] * u[k];
      dy[n + l] = -a;
    }
    return dy;
  };

  GeodesicTrajectory traj;
  traj.coords = spec.coords();
  traj.t_max = t_max;
  traj.steps = steps;
  Eigen::VectorXd y(2 * n);
  y.head(n) = x0;
  y.segment(n, n) = u0;
  traj.states.push_back({0.0, x0, u0});
  for (int s = 1; s <= steps; ++s) {
    y = rk4_step(deriv, y, h);
    traj.states.push_back({s * h, y.head(n), y.segment(n, n)});
  }
  return traj;
}

std::vector<JacobiState> integrate_jacobi(const MetricSpec& spec,
                                          const GeodesicTrajectory& trajectory,
                                          const Eigen::VectorXd& v0,
                                          const Eigen::VectorXd& w0) {
  if (trajectory.states.empty()) throw Error("empty trajectory");
  const Eigen::VectorXd& x0 = trajectory.states.front().x;
  const Eigen::VectorXd& u0 = trajectory.states.front().u;
  check_inputs(spec, x0, u0, trajectory.steps);
  const int n = spec.dim();
  if (v0.size() != n || w0.size() != n)
    throw Error("Jacobi initial data dimension does not match metric");
  const double h = trajectory.t_max / trajectory.steps;

  auto deriv = [&](const Eigen::VectorXd& y) {
    Eigen::VectorXd x = y.head(n), u = y.segment(n, n), v = y.segment(2 * n, n),
                    w = y.segment(3 * n, n);
    RiemannTensor rt = riemann(spec, x);
    ChristoffelJet cj = christoffel(rt.jet);
    Eigen::VectorXd dy(4 * n);
    dy.head(n) = u;
    for (int l = 0; l < n; ++l) {
      double gu_u = 0.0, gu_v = 0.0, gu_w = 0.0, ruvu = 0.0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          gu_u += cj.gamma(l, a, b) * u[a] * u[b];
          gu_v += cj.gamma(l, a, b) * u[a] * v[b];
          gu_w += cj.gamma(l, a, b) * u[a] * w[b];
          for (int c = 0; c < n; ++c)
            ruvu += rt.r_up(l, a, b, c) * u[a] * v[b] * u[c];
        }
      dy[n + l] = -gu_u;
      dy[2 * n + l] = w[l] - gu_v;
      dy[3 * n + l] = -gu_w - ruvu;
    }
    return dy;
  };

  auto record = [&](double t, const Eigen::VectorXd& y) {
    JacobiState js;
    js.t = t;
    js.v = y.segment(2 * n, n);
    js.w = y.segment(3 * n, n);
    Eigen::MatrixXd g = metric_at(spec, y.head(n)).g;
    js.v_norm_g = std::sqrt(std::fabs(js.v.dot(g * js.v)));
    return js;
  };

  std::vector<JacobiState> out;
  out.reserve(static_cast<std::size_t>(trajectory.steps) + 1);
  Eigen::VectorXd y(4 * n);
  y.head(n) = x0;
  y.segment(n, n) = u0;
  y.segment(2 * n, n) = v0;
  y.segment(3 * n, n) = w0;
  out.push_back(record(0.0, y));
  for (int s = 1; s <= trajectory.steps; ++s) {
    y = rk4_step(deriv, y, h);
    out.push_back(record(s * h, y));
  }
  return out;
}

DecoupledValue decoupled_solution(double theta, double v0, double w0, double t) {
  DecoupledValue r;
  if (theta > 0.0) {
    double s = std::sqrt(theta);
    r.value = v0 * std::cos(s * t) + (w0 / s) * std::sin(s * t);
    r.derivative = -v0 * s * std::sin(s * t) + w0 * std::cos(s * t);
  } else if (theta < 0.0) {
    double s = std::sqrt(-theta);
    r.value = v0 * std::cosh(s * t) + (w0 / s) * std::sinh(s * t);
    r.derivative = v0 * s * std::sinh(s * t) + w0 * std::cosh(s * t);
  } else {
    r.value = v0 + w0 * t;
    r.derivative = w0;
  }
  return r;
}

void write_trajectory_csv(std::ostream& os, const GeodesicTrajectory& trajectory,
                          const std::vector<JacobiState>* jacobi) {
  if (jacobi && jacobi->size() != trajectory.states.size())
    throw Error("Jacobi samples do not match the trajectory grid");
  os << "t";
  for (const auto& c : trajectory.coords) os << "," << c;
  for (const auto& c : trajectory.coords) os << ",u_" << c;
  if (jacobi) {
    for (const auto& c : trajectory.coords) os << ",v_" << c;
    for (const auto& c : trajectory.coords) os << ",w_" << c;
    os << ",v_norm_g";
  }
  os << "\n";
  os << std::setprecision(17);
  for (std::size_t s = 0; s < trajectory.states.size(); ++s) {
    const GeodesicState& st = trajectory.states[s];
    os << st.t;
    for (int i = 0; i < st.x.size(); ++i) os << "," << st.x[i];
    for (int i = 0; i < st.u.size(); ++i) os << "," << st.u[i];
    if (jacobi) {
      const JacobiState& js = (*jacobi)[s];
      for (int i = 0; i < js.v.size(); ++i) os << "," << js.v[i];
      for (int i = 0; i < js.w.size(); ++i) os << "," << js.w[i];
      os << "," << js.v_norm_g;
    }
    os << "\n";
  }
}

}  // namespace curvspec
