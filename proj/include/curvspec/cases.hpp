#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curvspec/geometry.hpp"
#include "curvspec/meig.hpp"

namespace curvspec {

// Closed-form reference values for a catalog metric, as functions of the
// evaluation point so r-dependent quantities stay exact.
struct OracleSet {
  std::optional<std::function<double(const Eigen::VectorXd&)>> gaussian;
  std::optional<std::function<double(const Eigen::VectorXd&)>> scalar;
  std::optional<std::function<double(const Eigen::VectorXd&)>> kretschmann;
  // sectional curvature of every plane (constant-curvature spaces)
  std::optional<std::function<double(const Eigen::VectorXd&)>> constant_kappa;
  std::optional<std::function<std::vector<double>(const Eigen::VectorXd&)>>
      ricci_eigenvalues;  // of Ric x = lambda g x, ascending
  // values the modified M-eigenvalue set must contain
  std::optional<std::function<std::vector<double>(const Eigen::VectorXd&)>>
      meig_modified;
  bool vacuum = false;
};

struct CatalogEntry {
  MetricSpec spec;
  OracleSet oracles;
  // box of regular points used for randomized sampling
  Eigen::VectorXd box_lo;
  Eigen::VectorXd box_hi;
};

// Built-in metrics: euclidean(n), sphere2(a), hyperbolic2(a), sphere3(a),
// constant_curvature_form(n, kappa), schwarzschild(rs, c),
// reissner_nordstrom(rs, rq, c), perturbed3.  Unknown names throw
// UnknownCase; out-of-range or unknown parameters throw BadParams.
CatalogEntry builtin(const std::string& name,
                     const std::map<std::string, double>& params = {});

const std::vector<std::string>& builtin_names();

// Uniform sample from the entry's box, rejecting points where the metric is
// singular.
Eigen::VectorXd random_regular_point(const CatalogEntry& entry,
                                     std::mt19937_64& rng);

struct CheckRow {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;  // abs_err / max(1, |expected|)
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckRow> rows;
  bool all_pass = true;
};

// Compares every oracle the entry provides against the computed values at
// `point`; M-eigenvalue oracles are checked by containment in the modified
// solution set.
CheckReport run_checks(const CatalogEntry& entry, const Eigen::VectorXd& point,
                       const SolveOptions& opts = {}, double tol = 1e-8);

}  // namespace curvspec
