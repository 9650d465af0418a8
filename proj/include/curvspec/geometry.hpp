#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvspec/expr.hpp"
#include "curvspec/tensor.hpp"

namespace curvspec {

// Symbolic metric: coordinate names, parameter values, and one expression per
// independent component g_{ij}.  Omitted components are zero.
class MetricSpec {
 public:
  MetricSpec() = default;

  // `components` is keyed "i,j" with 0-based indices; either triangle may be
  // given (the metric is symmetric), but conflicting duplicates are an error.
  static MetricSpec make(std::string name, std::vector<std::string> coords,
                         std::map<std::string, double> params,
                         const std::map<std::string, std::string>& components);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::map<std::string, double>& params() const { return params_; }

  // Parsed expression for g_{ij}, or nullptr when the component is zero.
  const Expression* component(int i, int j) const;
  // Source text for g_{ij} ("0" when omitted).
  std::string component_source(int i, int j) const;

 private:
  std::size_t tri_index(int i, int j) const;

  std::string name_;
  std::vector<std::string> coords_;
  std::map<std::string, double> params_;
  std::vector<std::optional<Expression>> exprs_;  // lower triangle, row-major
  std::vector<std::string> sources_;
};

// Metric value and its first two coordinate derivatives at one point.
struct MetricJet {
  Eigen::VectorXd point;
  Eigen::MatrixXd g;
  Eigen::MatrixXd g_inv;
  double det = 0.0;
  Tensor3 dg;   // dg(i,j,k)    = d_k g_ij
  Tensor4 d2g;  // d2g(i,j,k,m) = d_k d_m g_ij
};

// Christoffel symbols of the second kind and their first derivatives.
struct ChristoffelJet {
  Tensor3 gamma;   // gamma(i,j,k)    = Gamma^i_{jk}
  Tensor4 dgamma;  // dgamma(i,j,k,m) = d_m Gamma^i_{jk}
};

// Riemann curvature in both index positions, with the metric jet it came from.
struct RiemannTensor {
  MetricJet jet;
  Tensor4 r_up;    // r_up(l,k,i,j)   = R^l_{kij}
  Tensor4 r_down;  // r_down(i,j,k,l) = R_{ijkl}
};

struct CurvatureInvariants {
  Eigen::MatrixXd ricci;      // R_ik = g^{hj} R_{hijk}
  double scalar = 0.0;        // R = g^{ik} R_ik
  double kretschmann = 0.0;   // R_{abcd} R^{abcd}
  double ricci_max_abs = 0.0;
};

// Residuals of the algebraic Riemann identities, scaled by max |R_{ijkl}|.
struct SymmetryReport {
  double antisym_first = 0.0;      // R_ijkl + R_jikl
  double antisym_last = 0.0;       // R_ijkl + R_ijlk
  double pair_swap = 0.0;          // R_ijkl - R_klij
  double bianchi = 0.0;            // R_ijkl + R_iklj + R_iljk
  double raise_consistency = 0.0;  // r_down - g . r_up
  double max_abs = 0.0;            // scale used for the residuals above
};

// Evaluates the metric and its derivatives; throws SingularPoint when the
// metric is degenerate (|det g| below 1e-12 at the metric's scale) or any
// component fails to be finite.
MetricJet metric_at(const MetricSpec& spec, const Eigen::VectorXd& point);

ChristoffelJet christoffel(const MetricJet& jet);

RiemannTensor riemann(const MetricSpec& spec, const Eigen::VectorXd& point);

CurvatureInvariants invariants(const RiemannTensor& rt);

// Sectional curvature K(u, v) = R(u,v,u,v) / |u ^ v|^2; throws DegeneratePlane
// when the squared area element is below 1e-12 in magnitude.
double sectional(const RiemannTensor& rt, const Eigen::VectorXd& u,
                 const Eigen::VectorXd& v);

SymmetryReport check_symmetries(const RiemannTensor& rt);

}  // namespace curvspec
