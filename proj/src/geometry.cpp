#include "curvspec/geometry.hpp"

#include <cmath>
#include <cstdio>

namespace curvspec {

// ------------------------------------------------------------ MetricSpec ----

std::size_t MetricSpec::tri_index(int i, int j) const {
  if (i < j) std::swap(i, j);
  return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
}

MetricSpec MetricSpec::make(std::string name, std::vector<std::string> coords,
                            std::map<std::string, double> params,
                            const std::map<std::string, std::string>& components) {
  MetricSpec m;
  m.name_ = std::move(name);
  m.coords_ = std::move(coords);
  m.params_ = std::move(params);
  const int n = m.dim();
  if (n == 0) throw Error("metric needs at least one coordinate");
  m.exprs_.resize(static_cast<std::size_t>(n) * (n + 1) / 2);
  m.sources_.resize(m.exprs_.size(), "0");
  for (const auto& [key, source] : components) {
    int i = -1, j = -1;
    if (std::sscanf(key.c_str(), "%d,%d", &i, &j) != 2 || i < 0 || j < 0 ||
        i >= n || j >= n)
      throw Error("bad metric component key '" + key + "'");
    std::size_t idx = m.tri_index(i, j);
    if (m.exprs_[idx].has_value() && m.sources_[idx] != source)
      throw Error("conflicting entries for metric component " + key);
    m.exprs_[idx] = Expression::parse(source, m.coords_, m.params_);
    m.sources_[idx] = source;
  }
  return m;
}

const Expression* MetricSpec::component(int i, int j) const {
  const auto& slot = exprs_[tri_index(i, j)];
  return slot.has_value() ? &*slot : nullptr;
}

std::string MetricSpec::component_source(int i, int j) const {
  return sources_[tri_index(i, j)];
}

// ------------------------------------------------------------- metric_at ----

MetricJet metric_at(const MetricSpec& spec, const Eigen::VectorXd& point) {
  const int n = spec.dim();
  if (point.size() != n) throw Error("point dimension does not match metric");
  MetricJet jet;
  jet.point = point;
  jet.g = Eigen::MatrixXd::Zero(n, n);
  jet.dg = Tensor3(n);
  jet.d2g = Tensor4(n);
  bool finite = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const Expression* e = spec.component(i, j);
      if (!e) continue;
      Jet2 c = e->eval_jet2(point);
      if (!std::isfinite(c.value)) finite = false;
      jet.g(i, j) = jet.g(j, i) = c.value;
      for (int k = 0; k < n; ++k) {
        if (!std::isfinite(c.grad[k])) finite = false;
        jet.dg(i, j, k) = jet.dg(j, i, k) = c.grad[k];
        for (int m = 0; m < n; ++m) {
          if (!std::isfinite(c.hess(k, m))) finite = false;
          jet.d2g(i, j, k, m) = jet.d2g(j, i, k, m) = c.hess(k, m);
        }
      }
    }
  }
  if (!finite)
    throw SingularPoint("metric component not finite at the requested point");
  jet.det = jet.g.determinant();
  double scale = jet.g.cwiseAbs().rowwise().sum().maxCoeff();
  double threshold = 1e-12 * std::pow(std::max(scale, 1e-300), n);
  if (!(std::fabs(jet.det) > threshold))
    throw SingularPoint("metric is degenerate at the requested point (|det g| = " +
                        std::to_string(jet.det) + ")");
  jet.g_inv = jet.g.inverse();
  return jet;
}

// ----------------------------------------------------------- christoffel ----

ChristoffelJet christoffel(const MetricJet& jet) {
  const int n = static_cast<int>(jet.g.rows());
  ChristoffelJet cj;
  cj.gamma = Tensor3(n);
  cj.dgamma = Tensor4(n);

  // d_m g^{ih} = -g^{ia} (d_m g_ab) g^{bh}
  Tensor3 dginv(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m) {
        double s = 0.0;
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            s += jet.g_inv(a, c) * jet.dg(c, d, m) * jet.g_inv(d, b);
        dginv(a, b, m) = -s;
      }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int h = 0; h < n; ++h)
          s += jet.g_inv(i, h) * (jet.dg(h, j, k) + jet.dg(h, k, j) - jet.dg(j, k, h));
        cj.gamma(i, j, k) = 0.5 * s;
        for (int m = 0; m < n; ++m) {
          double t = 0.0;
          for (int h = 0; h < n; ++h) {
            t += dginv(i, h, m) *
                 (jet.dg(h, j, k) + jet.dg(h, k, j) - jet.dg(j, k, h));
            t += jet.g_inv(i, h) * (jet.d2g(h, j, k, m) + jet.d2g(h, k, j, m) -
                                    jet.d2g(j, k, h, m));
          }
          cj.dgamma(i, j, k, m) = 0.5 * t;
        }
      }
  return cj;
}

// ---------------------------------------------------------------- riemann ----

RiemannTensor riemann(const MetricSpec& spec, const Eigen::VectorXd& point) {
  RiemannTensor rt;
  rt.jet = metric_at(spec, point);
  const int n = spec.dim();
  ChristoffelJet cj = christoffel(rt.jet);

  // R^l_{kij} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
  //           + Gamma^h_{jk} Gamma^l_{ih} - Gamma^h_{ik} Gamma^l_{jh}
  rt.r_up = Tensor4(n);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = cj.dgamma(l, j, k, i) - cj.dgamma(l, i, k, j);
          for (int h = 0; h < n; ++h)
            s += cj.gamma(h, j, k) * cj.gamma(l, i, h) -
                 cj.gamma(h, i, k) * cj.gamma(l, j, h);
          rt.r_up(l, k, i, j) = s;
        }

  rt.r_down = Tensor4(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int h = 0; h < n; ++h) s += rt.jet.g(i, h) * rt.r_up(h, j, k, l);
          rt.r_down(i, j, k, l) = s;
        }
  return rt;
}

// ------------------------------------------------------------- invariants ----

CurvatureInvariants invariants(const RiemannTensor& rt) {
  const int n = static_cast<int>(rt.jet.g.rows());
  CurvatureInvariants inv;
  inv.ricci = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int h = 0; h < n; ++h)
        for (int j = 0; j < n; ++j)
          s += rt.jet.g_inv(h, j) * rt.r_down(h, i, j, k);
      inv.ricci(i, k) = s;
    }
  inv.scalar = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) inv.scalar += rt.jet.g_inv(i, k) * inv.ricci(i, k);
  inv.ricci_max_abs = inv.ricci.cwiseAbs().maxCoeff();

  // raise the four indices one at a time
  Tensor4 a(n), b(n);
  const Tensor4* src = &rt.r_down;
  Tensor4* dst = &a;
  for (int pos = 0; pos < 4; ++pos) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double s = 0.0;
            for (int h = 0; h < n; ++h) {
              switch (pos) {
                case 0: s += rt.jet.g_inv(i, h) * (*src)(h, j, k, l); break;
                case 1: s += rt.jet.g_inv(j, h) * (*src)(i, h, k, l); break;
                case 2: s += rt.jet.g_inv(k, h) * (*src)(i, j, h, l); break;
                case 3: s += rt.jet.g_inv(l, h) * (*src)(i, j, k, h); break;
              }
            }
            (*dst)(i, j, k, l) = s;
          }
    src = dst;
    dst = (dst == &a) ? &b : &a;
  }
  inv.kretschmann = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          inv.kretschmann += rt.r_down(i, j, k, l) * (*src)(i, j, k, l);
  return inv;
}

// -------------------------------------------------------------- sectional ----

double sectional(const RiemannTensor& rt, const Eigen::VectorXd& u,
                 const Eigen::VectorXd& v) {
  const int n = static_cast<int>(rt.jet.g.rows());
  if (u.size() != n || v.size() != n)
    throw Error("vector dimension does not match metric");
  double guu = u.dot(rt.jet.g * u);
  double gvv = v.dot(rt.jet.g * v);
  double guv = u.dot(rt.jet.g * v);
  double area2 = guu * gvv - guv * guv;
  if (std::fabs(area2) <= 1e-12)
    throw DegeneratePlane("plane spanned by u, v has zero area element");
  double num = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          num += rt.r_down(i, j, k, l) * u[i] * v[j] * u[k] * v[l];
  return num / area2;
}

// ------------------------------------------------------- check_symmetries ----

SymmetryReport check_symmetries(const RiemannTensor& rt) {
  const int n = static_cast<int>(rt.jet.g.rows());
  SymmetryReport rep;
  rep.max_abs = rt.r_down.max_abs();
  double scale = std::max(rep.max_abs, 1e-30);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double r = rt.r_down(i, j, k, l);
          rep.antisym_first =
              std::max(rep.antisym_first, std::fabs(r + rt.r_down(j, i, k, l)));
          rep.antisym_last =
              std::max(rep.antisym_last, std::fabs(r + rt.r_down(i, j, l, k)));
          rep.pair_swap =
              std::max(rep.pair_swap, std::fabs(r - rt.r_down(k, l, i, j)));
          rep.bianchi = std::max(
              rep.bianchi,
              std::fabs(r + rt.r_down(i, k, l, j) + rt.r_down(i, l, j, k)));
          double lowered = 0.0;
          for (int h = 0; h < n; ++h)
            lowered += rt.jet.g(i, h) * rt.r_up(h, j, k, l);
          rep.raise_consistency =
              std::max(rep.raise_consistency, std::fabs(r - lowered));
        }
  rep.antisym_first /= scale;
  rep.antisym_last /= scale;
  rep.pair_swap /= scale;
  rep.bianchi /= scale;
  rep.raise_consistency /= scale;
  return rep;
}

}  // namespace curvspec
