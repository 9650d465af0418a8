#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "CLI11.hpp"
#include "curvspec/cases.hpp"
#include "curvspec/geometry.hpp"
#include "curvspec/jacobi.hpp"
#include "curvspec/meig.hpp"
#include "curvspec/metric_io.hpp"
#include "curvspec/spectra.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

using curvspec::Error;
using nlohmann::json;

std::string fmt12(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("cannot parse " + what + " '" + s + "' as a number");
  }
}

std::map<std::string, double> parse_assignments(const std::vector<std::string>& items,
                                                const std::string& what) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error("expected name=value in " + what + ", got '" + item + "'");
    out[item.substr(0, eq)] = parse_double(item.substr(eq + 1), what);
  }
  return out;
}

Eigen::VectorXd parse_vector(const std::string& s, int n, const std::string& what) {
  auto parts = split(s, ',');
  if (static_cast<int>(parts.size()) != n)
    throw Error(what + " needs " + std::to_string(n) + " comma-separated values");
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = parse_double(parts[static_cast<std::size_t>(i)], what);
  return v;
}

// --------------------------------------------------------- shared options ----

struct MetricArgs {
  std::string builtin_name;
  std::string metric_file;
  std::vector<std::string> param_items;
  std::string at;
  std::string format = "text";
};

void add_metric_options(CLI::App* cmd, MetricArgs& args, bool need_point = true) {
  auto* b = cmd->add_option("--builtin", args.builtin_name,
                            "built-in case name (see 'curvspec check --help')");
  auto* m = cmd->add_option("--metric", args.metric_file, "metric JSON file");
  b->excludes(m);
  m->excludes(b);
  cmd->add_option("--param", args.param_items,
                  "parameter override name=value (repeatable)");
  auto* at = cmd->add_option("--at", args.at,
                             "evaluation point, e.g. --at t=0,r=3,theta=1.2,phi=0");
  if (need_point) at->required();
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

curvspec::MetricSpec resolve_metric(const MetricArgs& args,
                                    curvspec::CatalogEntry* entry_out = nullptr) {
  auto params = parse_assignments(args.param_items, "--param");
  if (!args.builtin_name.empty()) {
    curvspec::CatalogEntry entry = curvspec::builtin(args.builtin_name, params);
    if (entry_out) *entry_out = entry;
    return entry.spec;
  }
  if (args.metric_file.empty())
    throw Error("one of --builtin or --metric is required");
  std::ifstream in(args.metric_file);
  if (!in) throw Error("cannot open metric file '" + args.metric_file + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw Error("cannot parse metric file: " + std::string(ex.what()));
  }
  for (const auto& [k, v] : params) j["params"][k] = v;
  return curvspec::metric_from_json(j);
}

Eigen::VectorXd resolve_point(const curvspec::MetricSpec& spec, const std::string& at) {
  auto values = parse_assignments(split(at, ','), "--at");
  Eigen::VectorXd point(spec.dim());
  for (int i = 0; i < spec.dim(); ++i) {
    auto it = values.find(spec.coords()[static_cast<std::size_t>(i)]);
    if (it == values.end())
      throw Error("--at is missing coordinate '" +
                  spec.coords()[static_cast<std::size_t>(i)] + "'");
    point[i] = it->second;
    values.erase(it);
  }
  if (!values.empty())
    throw Error("--at has unknown coordinate '" + values.begin()->first + "'");
  return point;
}

json metric_header(const curvspec::MetricSpec& spec, const Eigen::VectorXd& point) {
  json j;
  j["name"] = spec.name();
  j["coords"] = spec.coords();
  j["params"] = spec.params();
  json pt = json::object();
  for (int i = 0; i < spec.dim(); ++i)
    pt[spec.coords()[static_cast<std::size_t>(i)]] = point[i];
  return json{{"metric", j}, {"point", pt}};
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

void emit(const std::string& format, const std::string& command,
          const curvspec::MetricSpec& spec, const Eigen::VectorXd& point,
          const json& results, const json& residuals,
          const std::function<void(std::ostream&)>& text_writer) {
  if (format == "json") {
    json out = metric_header(spec, point);
    out["command"] = command;
    out["results"] = results;
    out["residuals"] = residuals;
    out["version"] = kVersion;
    std::cout << out.dump(2) << "\n";
  } else {
    text_writer(std::cout);
  }
}

// ------------------------------------------------------------ solver opts ----

struct SolverArgs {
  int starts = 64;
  unsigned long long seed = 0;
  double tol = 1e-12;
  int max_iter = 100;
  int sigma_u = 1;
  int sigma_v = 1;
  bool modified = false;
};

void add_solver_options(CLI::App* cmd, SolverArgs& args) {
  cmd->add_option("--starts", args.starts, "number of random starts")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", args.seed, "random seed");
  cmd->add_option("--tol", args.tol, "Newton convergence tolerance");
  cmd->add_option("--max-iter", args.max_iter, "Newton iteration cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--sigma-u", args.sigma_u, "required sign of g(u,u)")
      ->check(CLI::IsMember({-1, 1}));
  cmd->add_option("--sigma-v", args.sigma_v, "required sign of g(v,v)")
      ->check(CLI::IsMember({-1, 1}));
  cmd->add_flag("--modified", args.modified, "require g(u,v) = 0");
}

curvspec::SolveOptions to_options(const SolverArgs& args, const CLI::App* cmd) {
  curvspec::SolveOptions opts;
  opts.starts = args.starts;
  if (cmd->count("--starts") == 0) {
    if (const char* env = std::getenv("CURVSPEC_STARTS")) {
      int v = static_cast<int>(parse_double(env, "CURVSPEC_STARTS"));
      if (v < 1) throw Error("CURVSPEC_STARTS must be positive");
      opts.starts = v;
    }
  }
  opts.seed = args.seed;
  opts.tol = args.tol;
  opts.max_iter = args.max_iter;
  opts.sigma_u = args.sigma_u;
  opts.sigma_v = args.sigma_v;
  opts.modified = args.modified;
  return opts;
}

// -------------------------------------------------------------- commands ----

int run_curvature(const MetricArgs& margs) {
  curvspec::MetricSpec spec = resolve_metric(margs);
  Eigen::VectorXd point = resolve_point(spec, margs.at);
  curvspec::RiemannTensor rt = curvspec::riemann(spec, point);
  curvspec::CurvatureInvariants inv = curvspec::invariants(rt);
  curvspec::SymmetryReport sym = curvspec::check_symmetries(rt);
  const int n = spec.dim();

  json results;
  results["metric_det"] = rt.jet.det;
  results["g"] = matrix_to_json(rt.jet.g);
  results["g_inv"] = matrix_to_json(rt.jet.g_inv);
  results["ricci"] = matrix_to_json(inv.ricci);
  results["scalar_curvature"] = inv.scalar;
  results["kretschmann"] = inv.kretschmann;
  results["ricci_max_abs"] = inv.ricci_max_abs;
  json rdown = json::array();
  for (int i = 0; i < n; ++i) {
    json ji = json::array();
    for (int j = 0; j < n; ++j) {
      json jj = json::array();
      for (int k = 0; k < n; ++k) {
        json jk = json::array();
        for (int l = 0; l < n; ++l) jk.push_back(rt.r_down(i, j, k, l));
        jj.push_back(jk);
      }
      ji.push_back(jj);
    }
    rdown.push_back(ji);
  }
  results["riemann_down"] = rdown;
  json residuals;
  residuals["antisym_first"] = sym.antisym_first;
  residuals["antisym_last"] = sym.antisym_last;
  residuals["pair_swap"] = sym.pair_swap;
  residuals["bianchi"] = sym.bianchi;
  residuals["raise_consistency"] = sym.raise_consistency;
  residuals["riemann_max_abs"] = sym.max_abs;

  emit(margs.format, "curvature", spec, point, results, residuals, [&](std::ostream& os) {
    os << "metric: " << spec.name() << "  det g = " << fmt12(rt.jet.det) << "\n";
    os << "scalar curvature R = " << fmt12(inv.scalar) << "\n";
    os << "kretschmann K1     = " << fmt12(inv.kretschmann) << "\n";
    os << "max |Ricci|        = " << fmt12(inv.ricci_max_abs) << "\n";
    os << "independent nonzero R_ijkl (i<j, k<l):\n";
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = i; k < n; ++k)
          for (int l = k + 1; l < n; ++l) {
            if (k < i || (k == i && l < j)) continue;
            double val = rt.r_down(i, j, k, l);
            if (std::fabs(val) > 1e-14 * std::max(1.0, sym.max_abs))
              os << "  R_" << i << j << k << l << " = " << fmt12(val) << "\n";
          }
    os << "symmetry residuals (scaled): antisym " << fmt12(sym.antisym_first)
       << ", " << fmt12(sym.antisym_last) << ", pair " << fmt12(sym.pair_swap)
       << ", bianchi " << fmt12(sym.bianchi) << ", raise "
       << fmt12(sym.raise_consistency) << "\n";
  });
  return kExitOk;
}

int run_classical(const MetricArgs& margs) {
  curvspec::MetricSpec spec = resolve_metric(margs);
  Eigen::VectorXd point = resolve_point(spec, margs.at);
  curvspec::RiemannTensor rt = curvspec::riemann(spec, point);
  curvspec::Pencil pencil = curvspec::assemble_pencil(rt);
  std::vector<curvspec::ClassicalEigenpair> pairs = curvspec::classical_eigen(pencil);

  json results;
  json basis = json::array();
  for (auto [i, j] : pencil.basis.pairs) basis.push_back(json::array({i, j}));
  results["pair_basis"] = basis;
  double max_residual = 0.0;
  json eigen = json::array();
  for (const auto& p : pairs) {
    json e;
    e["zeta_re"] = p.zeta.real();
    e["zeta_im"] = p.zeta.imag();
    e["residual"] = p.residual;
    json xr = json::array(), xi = json::array();
    for (Eigen::Index k = 0; k < p.x.size(); ++k) {
      xr.push_back(p.x[k].real());
      xi.push_back(p.x[k].imag());
    }
    e["x_re"] = xr;
    e["x_im"] = xi;
    eigen.push_back(e);
    max_residual = std::max(max_residual, p.residual);
  }
  results["eigenpairs"] = eigen;
  if (spec.dim() == 4) {
    curvspec::VacuumBlockReport rep = curvspec::vacuum_block_check(rt);
    json vb;
    vb["m_block"] = matrix_to_json(rep.m_block);
    vb["n_block"] = matrix_to_json(rep.n_block);
    vb["w_block"] = matrix_to_json(rep.w_block);
    vb["max_structure_residual"] = rep.max_structure_residual;
    vb["trace_n"] = rep.trace_n;
    vb["trace_m"] = rep.trace_m;
    vb["kappa"] = rep.kappa;
    vb["trace_m_plus_kappa"] = rep.trace_m_plus_kappa;
    results["vacuum_block"] = vb;
  }
  json residuals;
  residuals["max_residual"] = max_residual;

  emit(margs.format, "classical", spec, point, results, residuals, [&](std::ostream& os) {
    os << "classical eigenvalues zeta of R x = zeta x (antisymmetric x):\n";
    for (const auto& p : pairs) {
      os << "  zeta = " << fmt12(p.zeta.real());
      if (p.zeta.imag() != 0.0) os << " + " << fmt12(p.zeta.imag()) << "i";
      os << "   residual " << fmt12(p.residual) << "\n";
    }
    if (spec.dim() == 4) {
      curvspec::VacuumBlockReport rep = curvspec::vacuum_block_check(rt);
      os << "frame block check: max structure residual "
         << fmt12(rep.max_structure_residual) << ", tr N = " << fmt12(rep.trace_n)
         << ", tr M = " << fmt12(rep.trace_m) << ", tr M + kappa = "
         << fmt12(rep.trace_m_plus_kappa) << "\n";
    }
  });
  return kExitOk;
}

int run_meig(const MetricArgs& margs, const SolverArgs& sargs, const CLI::App* cmd) {
  curvspec::MetricSpec spec = resolve_metric(margs);
  Eigen::VectorXd point = resolve_point(spec, margs.at);
  curvspec::RiemannTensor rt = curvspec::riemann(spec, point);
  curvspec::SolveOptions opts = to_options(sargs, cmd);
  std::vector<curvspec::MEigenpair> pairs = curvspec::solve_meig(rt, opts);

  json results;
  json eigen = json::array();
  double max_residual = 0.0;
  for (const auto& p : pairs) {
    json e;
    e["theta"] = p.theta;
    e["u"] = vector_to_json(p.u);
    e["v"] = vector_to_json(p.v);
    e["residual"] = p.residual;
    e["lambda_mu_gap"] = p.lambda_mu_gap;
    e["norm_u"] = p.norm_u;
    e["norm_v"] = p.norm_v;
    e["ortho"] = p.ortho;
    eigen.push_back(e);
    max_residual = std::max(max_residual, p.residual);
  }
  results["eigenpairs"] = eigen;
  results["count"] = pairs.size();
  results["modified"] = opts.modified;
  json residuals;
  residuals["max_residual"] = max_residual;

  emit(margs.format, "meig", spec, point, results, residuals, [&](std::ostream& os) {
    os << (opts.modified ? "modified " : "") << "M-eigenvalues ("
       << pairs.size() << " distinct pairs):\n";
    for (const auto& p : pairs) {
      os << "  theta = " << fmt12(p.theta) << "   residual " << fmt12(p.residual)
         << "  g(u,v) = " << fmt12(p.ortho) << "\n";
      os << "    u = (";
      for (int i = 0; i < p.u.size(); ++i) os << (i ? ", " : "") << fmt12(p.u[i]);
      os << ")\n    v = (";
      for (int i = 0; i < p.v.size(); ++i) os << (i ? ", " : "") << fmt12(p.v[i]);
      os << ")\n";
    }
    if (pairs.empty()) os << "  (no start converged to an admissible pair)\n";
  });
  return kExitOk;
}

int run_sectional(const MetricArgs& margs, const std::string& u_str,
                  const std::string& v_str) {
  curvspec::MetricSpec spec = resolve_metric(margs);
  Eigen::VectorXd point = resolve_point(spec, margs.at);
  curvspec::RiemannTensor rt = curvspec::riemann(spec, point);
  Eigen::VectorXd u = parse_vector(u_str, spec.dim(), "--u");
  Eigen::VectorXd v = parse_vector(v_str, spec.dim(), "--v");
  double k = curvspec::sectional(rt, u, v);

  json results;
  results["sectional"] = k;
  results["u"] = vector_to_json(u);
  results["v"] = vector_to_json(v);

  emit(margs.format, "sectional", spec, point, results, json::object(),
       [&](std::ostream& os) { os << "K(u, v) = " << fmt12(k) << "\n"; });
  return kExitOk;
}

int run_jacobi(const MetricArgs& margs, const std::string& u0_str,
               const std::string& v0_str, const std::string& w0_str,
               double t_max, int steps, const std::string& csv_path) {
  curvspec::MetricSpec spec = resolve_metric(margs);
  Eigen::VectorXd x0 = resolve_point(spec, margs.at);
  const int n = spec.dim();
  Eigen::VectorXd u0 = parse_vector(u0_str, n, "--u0");
  Eigen::VectorXd v0 = v0_str.empty() ? Eigen::VectorXd::Zero(n).eval()
                                      : parse_vector(v0_str, n, "--v0");
  Eigen::VectorXd w0 = w0_str.empty() ? Eigen::VectorXd::Zero(n).eval()
                                      : parse_vector(w0_str, n, "--w0");

  curvspec::GeodesicTrajectory traj =
      curvspec::integrate_geodesic(spec, x0, u0, t_max, steps);
  std::vector<curvspec::JacobiState> jac =
      curvspec::integrate_jacobi(spec, traj, v0, w0);

  double u_norm_0 = u0.dot(curvspec::metric_at(spec, x0).g * u0);
  double drift = 0.0;
  for (const auto& st : traj.states) {
    double un = st.u.dot(curvspec::metric_at(spec, st.x).g * st.u);
    drift = std::max(drift, std::fabs(un - u_norm_0));
  }

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw Error("cannot write CSV file '" + csv_path + "'");
    curvspec::write_trajectory_csv(out, traj, &jac);
  }

  const curvspec::GeodesicState& last = traj.states.back();
  const curvspec::JacobiState& jlast = jac.back();
  json results;
  results["t_max"] = t_max;
  results["steps"] = steps;
  json fin;
  fin["t"] = last.t;
  fin["x"] = vector_to_json(last.x);
  fin["u"] = vector_to_json(last.u);
  fin["v"] = vector_to_json(jlast.v);
  fin["w"] = vector_to_json(jlast.w);
  fin["v_norm_g"] = jlast.v_norm_g;
  results["final"] = fin;
  if (!csv_path.empty()) results["csv"] = csv_path;
  json residuals;
  residuals["u_norm_drift"] = drift;

  emit(margs.format, "jacobi", spec, x0, results, residuals, [&](std::ostream& os) {
    os << "geodesic integrated to t = " << fmt12(last.t) << " in " << steps
       << " steps (|g(u,u)| drift " << fmt12(drift) << ")\n";
    os << "final x = (";
    for (int i = 0; i < n; ++i) os << (i ? ", " : "") << fmt12(last.x[i]);
    os << ")\nfinal |v|_g = " << fmt12(jlast.v_norm_g) << "\n";
    if (!csv_path.empty()) os << "samples written to " << csv_path << "\n";
  });
  return kExitOk;
}

int run_check(const MetricArgs& margs, const SolverArgs& sargs, const CLI::App* cmd) {
  if (margs.builtin_name.empty())
    throw Error("check needs --builtin (closed-form references only exist "
                "for catalog metrics)");
  curvspec::CatalogEntry entry =
      curvspec::builtin(margs.builtin_name, parse_assignments(margs.param_items, "--param"));
  Eigen::VectorXd point = resolve_point(entry.spec, margs.at);
  curvspec::SolveOptions opts = to_options(sargs, cmd);
  curvspec::CheckReport report = curvspec::run_checks(entry, point, opts);

  json results;
  json checks = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["name"] = row.name;
    r["expected"] = row.expected;
    r["computed"] = row.computed;
    r["abs_err"] = row.abs_err;
    r["rel_err"] = row.rel_err;
    r["pass"] = row.pass;
    checks.push_back(r);
  }
  results["checks"] = checks;
  results["all_pass"] = report.all_pass;

  emit(margs.format, "check", entry.spec, point, results, json::object(),
       [&](std::ostream& os) {
         for (const auto& row : report.rows)
           os << (row.pass ? "  ok  " : " FAIL ") << row.name << ": expected "
              << fmt12(row.expected) << ", computed " << fmt12(row.computed)
              << ", |err| " << fmt12(row.abs_err) << "\n";
         os << (report.all_pass ? "all checks passed" : "some checks FAILED")
            << "\n";
       });
  return report.all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature tensors and Riemann eigenproblems for symbolic metrics"};
  app.require_subcommand(1);

  MetricArgs curvature_args;
  auto* curvature_cmd = app.add_subcommand("curvature", "metric, Riemann tensor and invariants");
  add_metric_options(curvature_cmd, curvature_args);

  MetricArgs classical_args;
  auto* classical_cmd =
      app.add_subcommand("classical", "eigenvalues over antisymmetric pairs");
  add_metric_options(classical_cmd, classical_args);

  MetricArgs meig_args;
  SolverArgs meig_solver;
  auto* meig_cmd = app.add_subcommand("meig", "M-eigenpairs of the curvature tensor");
  add_metric_options(meig_cmd, meig_args);
  add_solver_options(meig_cmd, meig_solver);

  MetricArgs sectional_args;
  std::string sectional_u, sectional_v;
  auto* sectional_cmd = app.add_subcommand("sectional", "sectional curvature of a plane");
  add_metric_options(sectional_cmd, sectional_args);
  sectional_cmd->add_option("--u", sectional_u, "first plane vector, comma-separated")
      ->required();
  sectional_cmd->add_option("--v", sectional_v, "second plane vector, comma-separated")
      ->required();

  MetricArgs jacobi_args;
  std::string jacobi_u0, jacobi_v0, jacobi_w0, jacobi_csv;
  double jacobi_tmax = 1.0;
  int jacobi_steps = 1000;
  auto* jacobi_cmd =
      app.add_subcommand("jacobi", "geodesic and Jacobi field integration");
  add_metric_options(jacobi_cmd, jacobi_args);
  jacobi_cmd->add_option("--u0", jacobi_u0, "initial velocity, comma-separated")
      ->required();
  jacobi_cmd->add_option("--v0", jacobi_v0, "initial deviation vector");
  jacobi_cmd->add_option("--w0", jacobi_w0, "initial covariant derivative of v");
  jacobi_cmd->add_option("--t-max", jacobi_tmax, "integration time");
  jacobi_cmd->add_option("--steps", jacobi_steps, "RK4 step count")
      ->check(CLI::PositiveNumber);
  jacobi_cmd->add_option("--csv", jacobi_csv, "write per-step samples to this file");

  MetricArgs check_args;
  SolverArgs check_solver;
  auto* check_cmd =
      app.add_subcommand("check", "compare a built-in case against its references");
  add_metric_options(check_cmd, check_args);
  add_solver_options(check_cmd, check_solver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (curvature_cmd->parsed()) return run_curvature(curvature_args);
    if (classical_cmd->parsed()) return run_classical(classical_args);
    if (meig_cmd->parsed()) return run_meig(meig_args, meig_solver, meig_cmd);
    if (sectional_cmd->parsed())
      return run_sectional(sectional_args, sectional_u, sectional_v);
    if (jacobi_cmd->parsed())
      return run_jacobi(jacobi_args, jacobi_u0, jacobi_v0, jacobi_w0, jacobi_tmax,
                        jacobi_steps, jacobi_csv);
    if (check_cmd->parsed()) return run_check(check_args, check_solver, check_cmd);
  } catch (const curvspec::SingularPoint& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const curvspec::DegeneratePlane& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const curvspec::DegeneratePencil& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const curvspec::DegenerateMetric& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const curvspec::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const curvspec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
