#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "curvspec/geometry.hpp"

namespace curvspec {

// Basis of the n(n-1)/2 dimensional space of antisymmetric index pairs.
// For n = 4 the order is (1,0),(2,0),(3,0),(2,3),(3,1),(1,2): the three
// pairs containing index 0 first, then their duals.  Other dimensions use
// (i,j) with i > j sorted by (i,j).
struct PairBasis {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  static PairBasis make(int n);
  int size() const { return static_cast<int>(pairs.size()); }
};

// Compressed pencil of the pair eigenproblem R_AB x = (zeta/2) G_AB x.
struct Pencil {
  PairBasis basis;
  Eigen::MatrixXd r_ab;  // R_AB = R_{ijkl} over basis pairs
  Eigen::MatrixXd g_ab;  // G_AB = g_ik g_jl - g_il g_jk
};

struct ClassicalEigenpair {
  std::complex<double> zeta;
  Eigen::VectorXcd x;      // pair-basis components, unit 2-norm
  double residual = 0.0;   // |R_AB x - (zeta/2) G_AB x|
};

// g-orthonormal frame: columns e_a with e^T g e = diag(signs), the -1 entries
// first.
struct Frame {
  Eigen::MatrixXd e;
  std::vector<int> signs;
};

// Block decomposition of the 4D pair-space curvature matrix in an orthonormal
// frame, R'_AB = [[M, N], [N^T, W]], with the residuals of the vacuum
// identities W = -M, N = N^T, tr N = 0 and tr M = -kappa.
struct VacuumBlockReport {
  Eigen::Matrix3d m_block;
  Eigen::Matrix3d n_block;
  Eigen::Matrix3d w_block;
  double max_structure_residual = 0.0;  // max entry of |W + M| and |N - N^T|
  double trace_n = 0.0;
  double trace_m = 0.0;
  double kappa = 0.0;  // (1/4) sum_a s_a Ric'_aa
  double trace_m_plus_kappa = 0.0;
};

Pencil assemble_pencil(const RiemannTensor& rt);

// Eigenvalues zeta of R_{ijkl} x^{kl} = zeta x_{ij} over antisymmetric x,
// solved as the dense pencil above (zeta = 2 * eig(G^-1 R)); complex parts
// are retained and results are sorted by (Re, Im).  Throws DegeneratePencil
// when G_AB is singular.
std::vector<ClassicalEigenpair> classical_eigen(const Pencil& p);

// Throws DegenerateMetric when the metric has a numerically zero eigenvalue.
Frame orthonormal_frame(const MetricJet& jet);

// Only defined for n = 4 (throws WrongDimension otherwise).
VacuumBlockReport vacuum_block_check(const RiemannTensor& rt);

// Antisymmetric matrix X with X_ij = x_A on the basis pair A = (i,j).
Eigen::MatrixXd pair_vector_to_matrix(const PairBasis& basis,
                                      const Eigen::VectorXd& x);

}  // namespace curvspec
