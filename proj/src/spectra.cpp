#include "curvspec/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace curvspec {

PairBasis PairBasis::make(int n) {
  if (n < 2) throw WrongDimension("pair basis needs dimension >= 2");
  PairBasis b;
  b.n = n;
  if (n == 4) {
    b.pairs = {{1, 0}, {2, 0}, {3, 0}, {2, 3}, {3, 1}, {1, 2}};
  } else {
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) b.pairs.emplace_back(i, j);
  }
  return b;
}

Pencil assemble_pencil(const RiemannTensor& rt) {
  const int n = static_cast<int>(rt.jet.g.rows());
  Pencil p;
  p.basis = PairBasis::make(n);
  const int m = p.basis.size();
  p.r_ab = Eigen::MatrixXd(m, m);
  p.g_ab = Eigen::MatrixXd(m, m);
  const Eigen::MatrixXd& g = rt.jet.g;
  for (int A = 0; A < m; ++A) {
    auto [i, j] = p.basis.pairs[static_cast<std::size_t>(A)];
    for (int B = 0; B < m; ++B) {
      auto [k, l] = p.basis.pairs[static_cast<std::size_t>(B)];
      p.r_ab(A, B) = rt.r_down(i, j, k, l);
      p.g_ab(A, B) = g(i, k) * g(j, l) - g(i, l) * g(j, k);
    }
  }
  return p;
}

std::vector<ClassicalEigenpair> classical_eigen(const Pencil& p) {
  const int m = static_cast<int>(p.g_ab.rows());
  double scale = p.g_ab.cwiseAbs().rowwise().sum().maxCoeff();
  double det = p.g_ab.determinant();
  if (!(std::fabs(det) > 1e-12 * std::pow(std::max(scale, 1e-300), m)))
    throw DegeneratePencil("pair-space Gram matrix is singular");

  Eigen::MatrixXd a = p.g_ab.partialPivLu().solve(p.r_ab);
  Eigen::EigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success)
    throw Error("classical eigenproblem failed to converge");

  std::vector<ClassicalEigenpair> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    ClassicalEigenpair pair;
    pair.zeta = 2.0 * es.eigenvalues()[c];
    pair.x = es.eigenvectors().col(c);
    pair.residual =
        (p.r_ab * pair.x - 0.5 * pair.zeta * (p.g_ab * pair.x)).norm();
    out.push_back(std::move(pair));
  }
  std::sort(out.begin(), out.end(),
            [](const ClassicalEigenpair& a, const ClassicalEigenpair& b) {
              if (a.zeta.real() != b.zeta.real())
                return a.zeta.real() < b.zeta.real();
              return a.zeta.imag() < b.zeta.imag();
            });
  return out;
}

Frame orthonormal_frame(const MetricJet& jet) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jet.g);
  if (es.info() != Eigen::Success)
    throw Error("metric eigendecomposition failed");
  const Eigen::VectorXd& lam = es.eigenvalues();  // ascending: negatives first
  double lam_max = lam.cwiseAbs().maxCoeff();
  if (lam.cwiseAbs().minCoeff() <= 1e-12 * lam_max)
    throw DegenerateMetric("metric has a numerically zero eigenvalue");
  Frame f;
  const int n = static_cast<int>(jet.g.rows());
  f.e = Eigen::MatrixXd(n, n);
  f.signs.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    f.e.col(k) = es.eigenvectors().col(k) / std::sqrt(std::fabs(lam[k]));
    f.signs[static_cast<std::size_t>(k)] = lam[k] < 0.0 ? -1 : 1;
  }
  return f;
}

VacuumBlockReport vacuum_block_check(const RiemannTensor& rt) {
  const int n = static_cast<int>(rt.jet.g.rows());
  if (n != 4) throw WrongDimension("block check is only defined in dimension 4");
  Frame f = orthonormal_frame(rt.jet);

  // frame components R'_abcd, one index at a time
  Tensor4 t0 = rt.r_down, t1(n);
  for (int pos = 0; pos < 4; ++pos) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            double s = 0.0;
            for (int h = 0; h < n; ++h) {
              switch (pos) {
                case 0: s += t0(h, b, c, d) * f.e(h, a); break;
                case 1: s += t0(a, h, c, d) * f.e(h, b); break;
                case 2: s += t0(a, b, h, d) * f.e(h, c); break;
                case 3: s += t0(a, b, c, h) * f.e(h, d); break;
              }
            }
            t1(a, b, c, d) = s;
          }
    t0 = t1;
  }

  PairBasis basis = PairBasis::make(4);
  Eigen::MatrixXd r_ab(6, 6);
  for (int A = 0; A < 6; ++A) {
    auto [i, j] = basis.pairs[static_cast<std::size_t>(A)];
    for (int B = 0; B < 6; ++B) {
      auto [k, l] = basis.pairs[static_cast<std::size_t>(B)];
      r_ab(A, B) = t0(i, j, k, l);
    }
  }

  VacuumBlockReport rep;
  rep.m_block = r_ab.block<3, 3>(0, 0);
  rep.n_block = r_ab.block<3, 3>(0, 3);
  rep.w_block = r_ab.block<3, 3>(3, 3);
  rep.max_structure_residual =
      std::max((rep.w_block + rep.m_block).cwiseAbs().maxCoeff(),
               (rep.n_block - rep.n_block.transpose()).cwiseAbs().maxCoeff());
  rep.trace_n = rep.n_block.trace();
  rep.trace_m = rep.m_block.trace();

  // Einstein constant from the frame Ricci tensor: Ric'_ab = s_c R'_cacb
  double kappa = 0.0;
  for (int a = 0; a < n; ++a) {
    double ric_aa = 0.0;
    for (int c = 0; c < n; ++c)
      ric_aa += f.signs[static_cast<std::size_t>(c)] * t0(c, a, c, a);
    kappa += f.signs[static_cast<std::size_t>(a)] * ric_aa;
  }
  rep.kappa = kappa / 4.0;
  rep.trace_m_plus_kappa = rep.trace_m + rep.kappa;
  return rep;
}

Eigen::MatrixXd pair_vector_to_matrix(const PairBasis& basis,
                                      const Eigen::VectorXd& x) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(basis.n, basis.n);
  for (int A = 0; A < basis.size(); ++A) {
    auto [i, j] = basis.pairs[static_cast<std::size_t>(A)];
    m(i, j) = x[A];
    m(j, i) = -x[A];
  }
  return m;
}

}  // namespace curvspec
