#pragma once

#include <Eigen/Dense>
#include <vector>

#include "curvspec/geometry.hpp"
#include "curvspec/tensor.hpp"

namespace curvspec {

// One converged solution of the M-eigenproblem
//   R_{hijk} u^i v^j u^k = theta g_{hl} v^l
//   R_{hijk} v^i u^j v^k = theta g_{hl} u^l
// with g(u,u) = sigma_u and g(v,v) = sigma_v.
struct MEigenpair {
  double theta = 0.0;
  Eigen::VectorXd u;
  Eigen::VectorXd v;
  double residual = 0.0;       // norm of the two tensor equations at theta
  double lambda_mu_gap = 0.0;  // |lambda - mu| of the raw KKT multipliers
  double norm_u = 0.0;         // g(u,u)
  double norm_v = 0.0;         // g(v,v)
  double ortho = 0.0;          // g(u,v)
};

struct SolveOptions {
  int starts = 64;
  unsigned long long seed = 0;
  double tol = 1e-12;    // Newton convergence threshold (tensor-scaled)
  int max_iter = 100;
  double sigma_u = 1.0;  // required sign/value of g(u,u)
  double sigma_v = 1.0;  // required sign/value of g(v,v)
  bool modified = false; // additionally require g(u,v) = 0
  double dedupe_tol = 1e-6;
};

// Rank-4 tensor on R^3 with the minor and major elasticity symmetries
// E_ijkl = E_jikl = E_ijlk = E_klij held exactly as stored.
class ElasticityTensor {
 public:
  ElasticityTensor() : t_(3) {}

  // E_ijkl = a d_ij d_kl + b (d_ik d_jl + d_il d_jk)
  static ElasticityTensor isotropic(double a, double b);

  double operator()(int i, int j, int k, int l) const { return t_(i, j, k, l); }

  // Writes the value into all eight symmetry images of (i,j,k,l).
  void set(int i, int j, int k, int l, double value);

  const Tensor4& data() const { return t_; }

 private:
  Tensor4 t_;
};

// theta = R(u,v,u,v) = R_{hijk} u^h v^i u^j v^k.
double theta_of(const RiemannTensor& rt, const Eigen::VectorXd& u,
                const Eigen::VectorXd& v);

// Norm of the two reduced M-eigenproblem equations at (u, v, theta).
double meig_residual(const RiemannTensor& rt, const Eigen::VectorXd& u,
                     const Eigen::VectorXd& v, double theta);

// Multi-start damped Newton on the square KKT system in (u, v, lambda, mu).
// Converged solutions with lambda = mu (within 1e-8) are kept; when
// opts.modified is set, solutions additionally need |g(u,v)| < 1e-8.
// Deterministic for a fixed seed.  An empty result means no start converged
// to an admissible solution (a valid outcome, distinct from input errors).
std::vector<MEigenpair> solve_meig(const RiemannTensor& rt,
                                   const SolveOptions& opts = {});

// Same solver on an elasticity tensor with the Euclidean metric; sigma_u and
// sigma_v keep their defaults (unit vectors).
std::vector<MEigenpair> elasticity_meig(const ElasticityTensor& e,
                                        const SolveOptions& opts = {});

// Collapses the solution set modulo (u,v) -> (-u,v), (u,-v) and, when
// allow_swap is set (admissible only for sigma_u == sigma_v), (u,v) -> (v,u).
// The surviving representative has the first nonzero component of u (and v)
// positive and (u,v) lexicographically minimal; output is sorted by theta,
// then lexicographically.
std::vector<MEigenpair> dedupe(std::vector<MEigenpair> pairs, double tol,
                               bool allow_swap);

}  // namespace curvspec
