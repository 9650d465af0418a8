#include "curvspec/cases.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvspec {
namespace {

std::map<std::string, double> merge_params(
    const std::string& name, const std::map<std::string, double>& given,
    const std::map<std::string, double>& defaults) {
  auto out = defaults;
  for (const auto& [k, v] : given) {
    auto it = out.find(k);
    if (it == out.end())
      throw BadParams("case '" + name + "' has no parameter '" + k + "'");
    it->second = v;
  }
  return out;
}

int int_param(double v, const std::string& what, int lo, int hi) {
  double r = std::round(v);
  if (std::fabs(v - r) > 1e-9 || r < lo || r > hi)
    throw BadParams(what + " must be an integer in [" + std::to_string(lo) +
                    ", " + std::to_string(hi) + "]");
  return static_cast<int>(r);
}

void require_positive(double v, const std::string& what) {
  if (!(v > 0.0)) throw BadParams(what + " must be positive");
}

const std::vector<std::string> kCoordNames = {"x", "y", "z", "w"};

Eigen::VectorXd vec(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

CatalogEntry make_euclidean(const std::map<std::string, double>& params) {
  auto p = merge_params("euclidean", params, {{"n", 3.0}});
  int n = int_param(p.at("n"), "dimension n", 2, 6);
  std::vector<std::string> coords(kCoordNames.begin(), kCoordNames.begin() + std::min(n, 4));
  for (int i = 4; i < n; ++i) coords.push_back("x" + std::to_string(i));
  std::map<std::string, std::string> comps;
  for (int i = 0; i < n; ++i) comps[std::to_string(i) + "," + std::to_string(i)] = "1";
  CatalogEntry e;
  e.spec = MetricSpec::make("euclidean", coords, {}, comps);
  e.oracles.scalar = [](const Eigen::VectorXd&) { return 0.0; };
  e.oracles.kretschmann = [](const Eigen::VectorXd&) { return 0.0; };
  e.oracles.constant_kappa = [](const Eigen::VectorXd&) { return 0.0; };
  e.oracles.ricci_eigenvalues = [n](const Eigen::VectorXd&) {
    return std::vector<double>(static_cast<std::size_t>(n), 0.0);
  };
  e.oracles.meig_modified = [](const Eigen::VectorXd&) {
    return std::vector<double>{0.0};
  };
  e.oracles.vacuum = true;
  e.box_lo = Eigen::VectorXd::Constant(n, -1.0);
  e.box_hi = Eigen::VectorXd::Constant(n, 1.0);
  return e;
}

CatalogEntry make_sphere2(const std::map<std::string, double>& params) {
  auto p = merge_params("sphere2", params, {{"a", 1.0}});
  double a = p.at("a");
  require_positive(a, "radius a");
  CatalogEntry e;
  e.spec = MetricSpec::make("sphere2", {"theta", "phi"}, {{"a", a}},
                            {{"0,0", "a^2"}, {"1,1", "a^2*sin(theta)^2"}});
  double k = 1.0 / (a * a);
  e.oracles.gaussian = [k](const Eigen::VectorXd&) { return k; };
  e.oracles.scalar = [k](const Eigen::VectorXd&) { return 2.0 * k; };
  e.oracles.kretschmann = [k](const Eigen::VectorXd&) { return 4.0 * k * k; };
  e.oracles.constant_kappa = [k](const Eigen::VectorXd&) { return k; };
  e.oracles.ricci_eigenvalues = [k](const Eigen::VectorXd&) {
    return std::vector<double>{k, k};
  };
  e.oracles.meig_modified = [k](const Eigen::VectorXd&) {
    return std::vector<double>{k};
  };
  e.box_lo = vec({0.35, 0.0});
  e.box_hi = vec({2.75, 6.2});
  return e;
}

CatalogEntry make_hyperbolic2(const std::map<std::string, double>& params) {
  auto p = merge_params("hyperbolic2", params, {{"a", 1.0}});
  double a = p.at("a");
  require_positive(a, "scale a");
  CatalogEntry e;
  e.spec = MetricSpec::make("hyperbolic2", {"x", "y"}, {{"a", a}},
                            {{"0,0", "a^2/y^2"}, {"1,1", "a^2/y^2"}});
  double k = -1.0 / (a * a);
  e.oracles.gaussian = [k](const Eigen::VectorXd&) { return k; };
  e.oracles.scalar = [k](const Eigen::VectorXd&) { return 2.0 * k; };
  e.oracles.kretschmann = [k](const Eigen::VectorXd&) { return 4.0 * k * k; };
  e.oracles.constant_kappa = [k](const Eigen::VectorXd&) { return k; };
  e.oracles.ricci_eigenvalues = [k](const Eigen::VectorXd&) {
    return std::vector<double>{k, k};
  };
  e.oracles.meig_modified = [k](const Eigen::VectorXd&) {
    return std::vector<double>{k};
  };
  e.box_lo = vec({-2.0, 0.5});
  e.box_hi = vec({2.0, 3.0});
  return e;
}

CatalogEntry make_sphere3(const std::map<std::string, double>& params) {
  auto p = merge_params("sphere3", params, {{"a", 1.0}});
  double a = p.at("a");
  require_positive(a, "radius a");
  CatalogEntry e;
  e.spec = MetricSpec::make("sphere3", {"psi", "theta", "phi"}, {{"a", a}},
                            {{"0,0", "a^2"},
                             {"1,1", "a^2*sin(psi)^2"},
                             {"2,2", "a^2*sin(psi)^2*sin(theta)^2"}});
  double k = 1.0 / (a * a);
  e.oracles.scalar = [k](const Eigen::VectorXd&) { return 6.0 * k; };
  e.oracles.kretschmann = [k](const Eigen::VectorXd&) { return 12.0 * k * k; };
  e.oracles.constant_kappa = [k](const Eigen::VectorXd&) { return k; };
  e.oracles.ricci_eigenvalues = [k](const Eigen::VectorXd&) {
    return std::vector<double>{2.0 * k, 2.0 * k, 2.0 * k};
  };
  e.oracles.meig_modified = [k](const Eigen::VectorXd&) {
    return std::vector<double>{k};
  };
  e.box_lo = vec({0.4, 0.4, 0.0});
  e.box_hi = vec({2.7, 2.7, 6.2});
  return e;
}

CatalogEntry make_constant_curvature_form(const std::map<std::string, double>& params) {
  auto p = merge_params("constant_curvature_form", params, {{"n", 3.0}, {"kappa", 1.0}});
  int n = int_param(p.at("n"), "dimension n", 2, 4);
  double kappa = p.at("kappa");
  std::vector<std::string> coords(kCoordNames.begin(), kCoordNames.begin() + n);
  std::string sum;
  for (int i = 0; i < n; ++i) {
    if (i) sum += " + ";
    sum += coords[static_cast<std::size_t>(i)] + "^2";
  }
  std::string comp = "1/(1 + (kappa/4)*(" + sum + "))^2";
  std::map<std::string, std::string> comps;
  for (int i = 0; i < n; ++i) comps[std::to_string(i) + "," + std::to_string(i)] = comp;
  CatalogEntry e;
  e.spec = MetricSpec::make("constant_curvature_form", coords, {{"kappa", kappa}}, comps);
  e.oracles.scalar = [n, kappa](const Eigen::VectorXd&) { return n * (n - 1) * kappa; };
  e.oracles.kretschmann = [n, kappa](const Eigen::VectorXd&) {
    return 2.0 * n * (n - 1) * kappa * kappa;
  };
  e.oracles.constant_kappa = [kappa](const Eigen::VectorXd&) { return kappa; };
  if (n == 2) e.oracles.gaussian = [kappa](const Eigen::VectorXd&) { return kappa; };
  e.oracles.ricci_eigenvalues = [n, kappa](const Eigen::VectorXd&) {
    return std::vector<double>(static_cast<std::size_t>(n), (n - 1) * kappa);
  };
  e.oracles.meig_modified = [kappa](const Eigen::VectorXd&) {
    return std::vector<double>{kappa};
  };
  e.box_lo = Eigen::VectorXd::Constant(n, -0.4);
  e.box_hi = Eigen::VectorXd::Constant(n, 0.4);
  return e;
}

CatalogEntry make_schwarzschild(const std::map<std::string, double>& params) {
  auto p = merge_params("schwarzschild", params, {{"rs", 2.0}, {"c", 1.0}});
  double rs = p.at("rs"), c = p.at("c");
  require_positive(rs, "radius rs");
  require_positive(c, "speed c");
  CatalogEntry e;
  e.spec = MetricSpec::make("schwarzschild", {"t", "r", "theta", "phi"},
                            {{"rs", rs}, {"c", c}},
                            {{"0,0", "-(c^2)*(1 - rs/r)"},
                             {"1,1", "1/(1 - rs/r)"},
                             {"2,2", "r^2"},
                             {"3,3", "r^2*sin(theta)^2"}});
  e.oracles.scalar = [](const Eigen::VectorXd&) { return 0.0; };
  e.oracles.kretschmann = [rs](const Eigen::VectorXd& pt) {
    double r = pt[1];
    return 12.0 * rs * rs / std::pow(r, 6);
  };
  e.oracles.meig_modified = [rs](const Eigen::VectorXd& pt) {
    double r = pt[1];
    return std::vector<double>{-rs / (2.0 * r * r * r)};
  };
  e.oracles.vacuum = true;
  e.box_lo = vec({-1.0, 1.25 * rs, 0.4, 0.0});
  e.box_hi = vec({1.0, 5.0 * rs, 2.7, 6.2});
  return e;
}

CatalogEntry make_reissner_nordstrom(const std::map<std::string, double>& params) {
  auto p = merge_params("reissner_nordstrom", params,
                        {{"rs", 2.0}, {"rq", 0.5}, {"c", 1.0}});
  double rs = p.at("rs"), rq = p.at("rq"), c = p.at("c");
  require_positive(rs, "radius rs");
  require_positive(c, "speed c");
  if (rq < 0.0) throw BadParams("charge radius rq must be non-negative");
  CatalogEntry e;
  e.spec = MetricSpec::make("reissner_nordstrom", {"t", "r", "theta", "phi"},
                            {{"rs", rs}, {"rq", rq}, {"c", c}},
                            {{"0,0", "-(c^2)*(1 - rs/r + rq^2/r^2)"},
                             {"1,1", "1/(1 - rs/r + rq^2/r^2)"},
                             {"2,2", "r^2"},
                             {"3,3", "r^2*sin(theta)^2"}});
  // electrovacuum: the stress tensor is trace-free, so R = 0 even though
  // the Ricci tensor is not
  e.oracles.scalar = [](const Eigen::VectorXd&) { return 0.0; };
  e.box_lo = vec({-1.0, 1.25 * rs, 0.4, 0.0});
  e.box_hi = vec({1.0, 5.0 * rs, 2.7, 6.2});
  return e;
}

CatalogEntry make_perturbed3(const std::map<std::string, double>& params) {
  merge_params("perturbed3", params, {});
  CatalogEntry e;
  e.spec = MetricSpec::make("perturbed3", {"r", "theta", "phi"}, {},
                            {{"0,0", "1 + r^2"},
                             {"1,1", "r^2"},
                             {"2,2", "r^2*sin(theta)^2"}});
  e.box_lo = vec({0.5, 0.4, 0.0});
  e.box_hi = vec({2.5, 2.7, 6.2});
  return e;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "euclidean",      "sphere2",       "hyperbolic2",
      "sphere3",        "constant_curvature_form", "schwarzschild",
      "reissner_nordstrom", "perturbed3"};
  return names;
}

CatalogEntry builtin(const std::string& name,
                     const std::map<std::string, double>& params) {
  if (name == "euclidean") return make_euclidean(params);
  if (name == "sphere2") return make_sphere2(params);
  if (name == "hyperbolic2") return make_hyperbolic2(params);
  if (name == "sphere3") return make_sphere3(params);
  if (name == "constant_curvature_form") return make_constant_curvature_form(params);
  if (name == "schwarzschild") return make_schwarzschild(params);
  if (name == "reissner_nordstrom") return make_reissner_nordstrom(params);
  if (name == "perturbed3") return make_perturbed3(params);
  throw UnknownCase(name);
}

Eigen::VectorXd random_regular_point(const CatalogEntry& entry,
                                     std::mt19937_64& rng) {
  const int n = entry.spec.dim();
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int attempt = 0; attempt < 50; ++attempt) {
    Eigen::VectorXd p(n);
    for (int i = 0; i < n; ++i)
      p[i] = entry.box_lo[i] + (entry.box_hi[i] - entry.box_lo[i]) * uniform(rng);
    try {
      metric_at(entry.spec, p);
      return p;
    } catch (const SingularPoint&) {
    }
  }
  throw Error("no regular point found in the sampling box of '" +
              entry.spec.name() + "'");
}

CheckReport run_checks(const CatalogEntry& entry, const Eigen::VectorXd& point,
                       const SolveOptions& opts, double tol) {
  CheckReport report;
  auto add = [&](const std::string& name, double expected, double computed) {
    CheckRow row;
    row.name = name;
    row.expected = expected;
    row.computed = computed;
    row.abs_err = std::fabs(computed - expected);
    row.rel_err = row.abs_err / std::max(1.0, std::fabs(expected));
    row.pass = row.rel_err < tol;
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(row);
  };

  RiemannTensor rt = riemann(entry.spec, point);
  CurvatureInvariants inv = invariants(rt);
  const int n = entry.spec.dim();
  const OracleSet& o = entry.oracles;

  if (o.scalar) add("scalar_curvature", (*o.scalar)(point), inv.scalar);
  if (o.kretschmann) add("kretschmann", (*o.kretschmann)(point), inv.kretschmann);
  if (o.vacuum) add("ricci_max_abs", 0.0, inv.ricci_max_abs);

  if (o.gaussian && n == 2) {
    Eigen::VectorXd e0 = Eigen::VectorXd::Unit(2, 0), e1 = Eigen::VectorXd::Unit(2, 1);
    add("gaussian", (*o.gaussian)(point), sectional(rt, e0, e1));
  }

  if (o.constant_kappa) {
    double kappa = (*o.constant_kappa)(point);
    double worst = kappa;
    double worst_dev = -1.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double k = sectional(rt, Eigen::VectorXd::Unit(n, i), Eigen::VectorXd::Unit(n, j));
        if (std::fabs(k - kappa) > worst_dev) {
          worst_dev = std::fabs(k - kappa);
          worst = k;
        }
      }
    add("sectional_kappa", kappa, worst);
  }

  if (o.ricci_eigenvalues) {
    std::vector<double> expected = (*o.ricci_eigenvalues)(point);
    Eigen::LLT<Eigen::MatrixXd> llt(rt.jet.g);
    Eigen::VectorXd lam;
    if (llt.info() == Eigen::Success) {
      Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(inv.ricci, rt.jet.g);
      lam = ges.eigenvalues();
    } else {
      Eigen::EigenSolver<Eigen::MatrixXd> es(rt.jet.g_inv * inv.ricci);
      lam = es.eigenvalues().real();
      std::sort(lam.data(), lam.data() + lam.size());
    }
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < n; ++i)
      add("ricci_eig_" + std::to_string(i), expected[static_cast<std::size_t>(i)], lam[i]);
  }

  if (o.meig_modified) {
    SolveOptions mo = opts;
    mo.modified = true;
    std::vector<MEigenpair> sol = solve_meig(rt, mo);
    std::vector<double> expected = (*o.meig_modified)(point);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      double target = expected[i];
      double best = std::numeric_limits<double>::quiet_NaN();
      double best_dev = std::numeric_limits<double>::infinity();
      for (const auto& p : sol) {
        double dev = std::fabs(p.theta - target);
        if (dev < best_dev) {
          best_dev = dev;
          best = p.theta;
        }
      }
      add("meig_contains_" + std::to_string(i), target, best);
    }
  }
  return report;
}

}  // namespace curvspec
