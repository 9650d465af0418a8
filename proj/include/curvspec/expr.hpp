#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "curvspec/errors.hpp"

namespace curvspec {

// Value, gradient and (symmetric) Hessian of a scalar field at one point.
struct Jet2 {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

namespace detail {
struct ExprNode;
}

// A parsed scalar expression in a fixed coordinate chart.
//
// Grammar (usual precedence, ^ binds tightest and is right-associative,
// unary minus sits between ^ and *,/):
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | ident | ident '(' expr ')' | '(' expr ')'
// Known functions: sin cos tan sinh cosh tanh exp log sqrt abs.
// Identifiers must be coordinates, parameters, or function names; parameter
// values are captured at parse time, so an Expression is immutable.
class Expression {
 public:
  Expression() = default;

  static Expression parse(const std::string& text,
                          const std::vector<std::string>& coords,
                          const std::map<std::string, double>& params = {});

  // Plain evaluation; Inf/NaN propagate, log/sqrt of a negative throw.
  double eval(const Eigen::VectorXd& point) const;

  // Extended-precision evaluation (used by finite-difference cross-checks).
  long double eval_ld(const std::vector<long double>& point) const;

  // Exact value/gradient/Hessian via hyper-dual propagation, one pass per
  // unordered coordinate pair.
  Jet2 eval_jet2(const Eigen::VectorXd& point) const;

  // Serialization; parse(str()) evaluates identically.
  std::string str() const;

  const std::vector<std::string>& coords() const { return coords_; }
  const std::map<std::string, double>& params() const { return params_; }

  bool empty() const { return root_ == nullptr; }

 private:
  std::shared_ptr<const detail::ExprNode> root_;
  std::vector<std::string> coords_;
  std::map<std::string, double> params_;
  std::vector<double> param_values_;  // in slot order used by the AST
};

}  // namespace curvspec
