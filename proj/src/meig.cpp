#include "curvspec/meig.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace curvspec {
namespace {

// w_h = sum_{ijk} T(h,i,j,k) a_i b_j c_k
Eigen::VectorXd contract3(const Tensor4& t, const Eigen::VectorXd& a,
                          const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
  const int n = t.dim();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  for (int h = 0; h < n; ++h) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) s += t(h, i, j, k) * a[i] * b[j] * c[k];
    w[h] = s;
  }
  return w;
}

struct KktProblem {
  const Tensor4& t;
  Eigen::MatrixXd g;
  double sigma_u;
  double sigma_v;
  int n;

  // z = [u; v; lambda; mu]
  Eigen::VectorXd residual(const Eigen::VectorXd& z) const {
    Eigen::VectorXd u = z.head(n), v = z.segment(n, n);
    double lam = z[2 * n], mu = z[2 * n + 1];
    Eigen::VectorXd f(2 * n + 2);
    f.head(n) = contract3(t, u, v, u) - lam * (g * v);
    f.segment(n, n) = contract3(t, v, u, v) - mu * (g * u);
    f[2 * n] = u.dot(g * u) - sigma_u;
    f[2 * n + 1] = v.dot(g * v) - sigma_v;
    return f;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& z) const {
    Eigen::VectorXd u = z.head(n), v = z.segment(n, n);
    double lam = z[2 * n], mu = z[2 * n + 1];
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n + 2, 2 * n + 2);
    for (int h = 0; h < n; ++h)
      for (int p = 0; p < n; ++p) {
        double f1u = 0.0, f1v = 0.0, f2u = 0.0, f2v = 0.0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            f1u += t(h, p, a, b) * v[a] * u[b] + t(h, a, b, p) * u[a] * v[b];
            f1v += t(h, a, p, b) * u[a] * u[b];
            f2u += t(h, a, p, b) * v[a] * v[b];
            f2v += t(h, p, a, b) * u[a] * v[b] + t(h, a, b, p) * v[a] * u[b];
          }
        j(h, p) = f1u;
        j(h, n + p) = f1v - lam * g(h, p);
        j(n + h, p) = f2u - mu * g(h, p);
        j(n + h, n + p) = f2v;
      }
    j.block(0, 2 * n, n, 1) = -(g * v);
    j.block(n, 2 * n + 1, n, 1) = -(g * u);
    j.block(2 * n, 0, 1, n) = 2.0 * (g * u).transpose();
    j.block(2 * n + 1, n, 1, n) = 2.0 * (g * v).transpose();
    return j;
  }
};

// Damped Newton from z0; returns true when the residual dropped below tol.
bool newton(const KktProblem& prob, Eigen::VectorXd& z, double tol,
            int max_iter) {
  Eigen::VectorXd f = prob.residual(z);
  double fn = f.norm();
  for (int iter = 0; iter < max_iter; ++iter) {
    if (fn <= tol) return true;
    Eigen::MatrixXd j = prob.jacobian(z);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
    Eigen::VectorXd step;
    if (lu.isInvertible()) {
      step = lu.solve(-f);
    } else {
      // Levenberg fallback near rank-deficient Jacobians
      double shift = 1e-10 * std::max(j.norm(), 1.0);
      Eigen::MatrixXd a = j.transpose() * j +
                          shift * Eigen::MatrixXd::Identity(j.rows(), j.cols());
      step = a.ldlt().solve(-j.transpose() * f);
    }
    double tstep = 1.0;
    bool moved = false;
    for (int half = 0; half < 40; ++half) {
      Eigen::VectorXd z_try = z + tstep * step;
      Eigen::VectorXd f_try = prob.residual(z_try);
      double fn_try = f_try.norm();
      if (std::isfinite(fn_try) && fn_try < fn) {
        z = z_try;
        f = f_try;
        fn = fn_try;
        moved = true;
        break;
      }
      tstep *= 0.5;
    }
    if (!moved) break;
  }
  return fn <= tol;
}

double lex_compare(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1.0 : 1.0;
  return 0.0;
}

void sign_fix(Eigen::VectorXd& w) {
  double scale = w.cwiseAbs().maxCoeff();
  for (int i = 0; i < w.size(); ++i) {
    if (std::fabs(w[i]) > 1e-12 * scale) {
      if (w[i] < 0.0) w = -w;
      return;
    }
  }
}

void canonicalize(MEigenpair& p, bool allow_swap) {
  sign_fix(p.u);
  sign_fix(p.v);
  if (allow_swap) {
    Eigen::VectorXd su = p.v, sv = p.u;
    sign_fix(su);
    sign_fix(sv);
    double cmp = lex_compare(su, p.u);
    if (cmp < 0.0 || (cmp == 0.0 && lex_compare(sv, p.v) < 0.0)) {
      p.u = su;
      p.v = sv;
      std::swap(p.norm_u, p.norm_v);
    }
  }
}

bool same_vector(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
  double scale = std::max(1.0, std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()));
  return (a - b).cwiseAbs().maxCoeff() <= tol * scale;
}

std::vector<MEigenpair> solve_core(const Tensor4& t, const Eigen::MatrixXd& g,
                                   const SolveOptions& opts) {
  const int n = t.dim();
  KktProblem prob{t, g, opts.sigma_u, opts.sigma_v, n};
  double tol_eff = opts.tol * std::max(1.0, t.max_abs());

  std::vector<MEigenpair> found;
  for (int start = 0; start < opts.starts; ++start) {
    std::mt19937_64 rng(opts.seed +
                        0x9E3779B97F4A7C15ull * static_cast<unsigned long long>(start + 1));
    std::normal_distribution<double> normal(0.0, 1.0);

    // sample u, v with g(u,u) = sigma_u, g(v,v) = sigma_v
    Eigen::VectorXd u(n), v(n);
    bool ok_u = false, ok_v = false;
    for (int attempt = 0; attempt < 100 && !ok_u; ++attempt) {
      for (int i = 0; i < n; ++i) u[i] = normal(rng);
      double q = u.dot(g * u);
      if (q * opts.sigma_u > 1e-12) {
        u /= std::sqrt(std::fabs(q));
        ok_u = true;
      }
    }
    for (int attempt = 0; attempt < 100 && !ok_v; ++attempt) {
      for (int i = 0; i < n; ++i) v[i] = normal(rng);
      // Start on the constraint manifold for the modified problem; without
      // this, flat directions (zero tensor) converge in place and the
      // orthogonality filter discards every start.
      if (opts.modified && ok_u) v -= (u.dot(g * v) / u.dot(g * u)) * u;
      double q = v.dot(g * v);
      if (q * opts.sigma_v > 1e-12) {
        v /= std::sqrt(std::fabs(q));
        ok_v = true;
      }
    }
    if (!ok_u || !ok_v) continue;

    double theta0 = u.dot(contract3(t, v, u, v));
    Eigen::VectorXd z(2 * n + 2);
    z.head(n) = u;
    z.segment(n, n) = v;
    z[2 * n] = theta0;
    z[2 * n + 1] = theta0;

    if (!newton(prob, z, tol_eff, opts.max_iter)) continue;

    MEigenpair p;
    p.u = z.head(n);
    p.v = z.segment(n, n);
    double lam = z[2 * n], mu = z[2 * n + 1];
    p.lambda_mu_gap = std::fabs(lam - mu);
    if (p.lambda_mu_gap >= 1e-8) continue;
    p.theta = 0.5 * (lam + mu);
    p.norm_u = p.u.dot(g * p.u);
    p.norm_v = p.v.dot(g * p.v);
    p.ortho = p.u.dot(g * p.v);
    if (opts.modified && std::fabs(p.ortho) >= 1e-8) continue;
    Eigen::VectorXd f1 = contract3(t, p.u, p.v, p.u) - p.theta * (g * p.v);
    Eigen::VectorXd f2 = contract3(t, p.v, p.u, p.v) - p.theta * (g * p.u);
    p.residual = std::sqrt(f1.squaredNorm() + f2.squaredNorm());
    found.push_back(std::move(p));
  }
  return dedupe(std::move(found), opts.dedupe_tol,
                opts.sigma_u == opts.sigma_v);
}

}  // namespace

ElasticityTensor ElasticityTensor::isotropic(double a, double b) {
  ElasticityTensor e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          e.t_(i, j, k, l) = a * (i == j) * (k == l) +
                             b * ((i == k) * (j == l) + (i == l) * (j == k));
  return e;
}

void ElasticityTensor::set(int i, int j, int k, int l, double value) {
  t_(i, j, k, l) = t_(j, i, k, l) = t_(i, j, l, k) = t_(j, i, l, k) = value;
  t_(k, l, i, j) = t_(l, k, i, j) = t_(k, l, j, i) = t_(l, k, j, i) = value;
}

double theta_of(const RiemannTensor& rt, const Eigen::VectorXd& u,
                const Eigen::VectorXd& v) {
  return u.dot(contract3(rt.r_down, v, u, v));
}

double meig_residual(const RiemannTensor& rt, const Eigen::VectorXd& u,
                     const Eigen::VectorXd& v, double theta) {
  const Eigen::MatrixXd& g = rt.jet.g;
  Eigen::VectorXd f1 = contract3(rt.r_down, u, v, u) - theta * (g * v);
  Eigen::VectorXd f2 = contract3(rt.r_down, v, u, v) - theta * (g * u);
  return std::sqrt(f1.squaredNorm() + f2.squaredNorm());
}

std::vector<MEigenpair> solve_meig(const RiemannTensor& rt,
                                   const SolveOptions& opts) {
  return solve_core(rt.r_down, rt.jet.g, opts);
}

std::vector<MEigenpair> elasticity_meig(const ElasticityTensor& e,
                                        const SolveOptions& opts) {
  return solve_core(e.data(), Eigen::MatrixXd::Identity(3, 3), opts);
}

std::vector<MEigenpair> dedupe(std::vector<MEigenpair> pairs, double tol,
                               bool allow_swap) {
  for (auto& p : pairs) canonicalize(p, allow_swap);
  std::vector<MEigenpair> out;
  for (auto& p : pairs) {
    bool merged = false;
    for (auto& q : out) {
      if (std::fabs(p.theta - q.theta) <= tol && same_vector(p.u, q.u, tol) &&
          same_vector(p.v, q.v, tol)) {
        if (p.residual < q.residual) q = p;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const MEigenpair& a, const MEigenpair& b) {
    if (a.theta != b.theta) return a.theta < b.theta;
    double cu = lex_compare(a.u, b.u);
    if (cu != 0.0) return cu < 0.0;
    return lex_compare(a.v, b.v) < 0.0;
  });
  return out;
}

}  // namespace curvspec
