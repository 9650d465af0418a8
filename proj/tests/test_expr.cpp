#include "curvspec/expr.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using curvspec::DomainError;
using curvspec::Expression;
using curvspec::Jet2;
using curvspec::SyntaxError;
using curvspec::UnknownIdentifier;

namespace {

Eigen::VectorXd pt(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

//------------------------------------------------------------------------
// hand-derived jets
//------------------------------------------------------------------------

TEST(ExprJet, SphereAreaFactor) {
  // f = r^2 sin(theta)^2 at (r, theta) = (2, pi/2):
  // f = 4, f_r = 2 r sin^2 = 4, f_theta = 2 r^2 sin cos = 0,
  // f_rr = 2 sin^2 = 2, f_tt = 2 r^2 cos(2 theta) = -8, f_rt = 4 r sin cos = 0
  auto e = Expression::parse("r^2*sin(theta)^2", {"r", "theta"});
  Jet2 j = e.eval_jet2(pt({2.0, M_PI_2}));
  EXPECT_NEAR(j.value, 4.0, 1e-14);
  EXPECT_NEAR(j.grad[0], 4.0, 1e-14);
  EXPECT_NEAR(j.grad[1], 0.0, 1e-14);
  EXPECT_NEAR(j.hess(0, 0), 2.0, 1e-14);
  EXPECT_NEAR(j.hess(1, 1), -8.0, 1e-13);
  EXPECT_NEAR(j.hess(0, 1), 0.0, 1e-14);
  EXPECT_NEAR(j.hess(1, 0), 0.0, 1e-14);
}

TEST(ExprJet, RadialMetricComponent) {
  // f = 1/(1 - rs/r) with rs = 2 at r = 3: f = 3, f' = -2, f'' = 4
  auto e = Expression::parse("1/(1 - rs/r)", {"r"}, {{"rs", 2.0}});
  Jet2 j = e.eval_jet2(pt({3.0}));
  EXPECT_NEAR(j.value, 3.0, 1e-13);
  EXPECT_NEAR(j.grad[0], -2.0, 1e-13);
  EXPECT_NEAR(j.hess(0, 0), 4.0, 1e-12);
}

TEST(ExprJet, SqrtLogDerivatives) {
  auto s = Expression::parse("sqrt(x)", {"x"});
  Jet2 js = s.eval_jet2(pt({9.0}));
  EXPECT_NEAR(js.value, 3.0, 1e-14);
  EXPECT_NEAR(js.grad[0], 1.0 / 6.0, 1e-14);
  EXPECT_NEAR(js.hess(0, 0), -1.0 / 108.0, 1e-15);

  auto l = Expression::parse("log(x)", {"x"});
  Jet2 jl = l.eval_jet2(pt({2.0}));
  EXPECT_NEAR(jl.value, std::log(2.0), 1e-14);
  EXPECT_NEAR(jl.grad[0], 0.5, 1e-14);
  EXPECT_NEAR(jl.hess(0, 0), -0.25, 1e-14);
}

TEST(ExprJet, GeneralPower) {
  // f = x^y at (2, 3): f = 8, f_x = 12, f_y = 8 ln 2,
  // f_xx = 12, f_yy = 8 ln^2 2, f_xy = x^(y-1) + y x^(y-1) ln x = 4 + 12 ln 2
  auto e = Expression::parse("x^y", {"x", "y"});
  Jet2 j = e.eval_jet2(pt({2.0, 3.0}));
  double ln2 = std::log(2.0);
  EXPECT_NEAR(j.value, 8.0, 1e-13);
  EXPECT_NEAR(j.grad[0], 12.0, 1e-13);
  EXPECT_NEAR(j.grad[1], 8.0 * ln2, 1e-13);
  EXPECT_NEAR(j.hess(0, 0), 12.0, 1e-12);
  EXPECT_NEAR(j.hess(1, 1), 8.0 * ln2 * ln2, 1e-12);
  EXPECT_NEAR(j.hess(0, 1), 4.0 + 12.0 * ln2, 1e-12);
}

TEST(ExprJet, IntegerPowerNegativeBase) {
  auto e = Expression::parse("x^3", {"x"});
  Jet2 j = e.eval_jet2(pt({-2.0}));
  EXPECT_NEAR(j.value, -8.0, 1e-14);
  EXPECT_NEAR(j.grad[0], 12.0, 1e-14);
  EXPECT_NEAR(j.hess(0, 0), -12.0, 1e-13);

  auto sq = Expression::parse("x^2", {"x"});
  EXPECT_NEAR(sq.eval(pt({-3.0})), 9.0, 1e-14);
}

TEST(ExprJet, ParameterExponent) {
  auto e = Expression::parse("x^n", {"x"}, {{"n", 2.0}});
  EXPECT_NEAR(e.eval(pt({-3.0})), 9.0, 1e-14);
  Jet2 j = e.eval_jet2(pt({-3.0}));
  EXPECT_NEAR(j.grad[0], -6.0, 1e-14);
}

//------------------------------------------------------------------------
// parsing semantics
//------------------------------------------------------------------------

TEST(ExprParse, Precedence) {
  std::vector<std::string> none;
  EXPECT_NEAR(Expression::parse("2*3 + 4*5", none).eval(pt({})), 26.0, 0);
  EXPECT_NEAR(Expression::parse("1 - 2 - 3", none).eval(pt({})), -4.0, 0);
  EXPECT_NEAR(Expression::parse("6/3/2", none).eval(pt({})), 1.0, 0);
  EXPECT_NEAR(Expression::parse("2^3^2", none).eval(pt({})), 512.0, 1e-11);
  EXPECT_NEAR(Expression::parse("-2^2", none).eval(pt({})), -4.0, 0);
  EXPECT_NEAR(Expression::parse("2^-2", none).eval(pt({})), 0.25, 0);
  EXPECT_NEAR(Expression::parse("(1 + 2)*3", none).eval(pt({})), 9.0, 0);
  EXPECT_NEAR(Expression::parse("2 - -3", none).eval(pt({})), 5.0, 0);
}

TEST(ExprParse, SyntaxErrorOffset) {
  try {
    Expression::parse("2 +* 3", {});
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  EXPECT_THROW(Expression::parse("(1 + 2", {}), SyntaxError);
  EXPECT_THROW(Expression::parse("1 2", {}), SyntaxError);
  EXPECT_THROW(Expression::parse("", {}), SyntaxError);
  EXPECT_THROW(Expression::parse("sin()", {}), SyntaxError);
}

TEST(ExprParse, UnknownIdentifiers) {
  EXPECT_THROW(Expression::parse("bogus + 1", {"x"}), UnknownIdentifier);
  EXPECT_THROW(Expression::parse("frob(x)", {"x"}), UnknownIdentifier);
  // a function name without a call is just an unknown variable
  EXPECT_THROW(Expression::parse("sin + 1", {"x"}), UnknownIdentifier);
}

TEST(ExprParse, DomainErrors) {
  auto lg = Expression::parse("log(0 - x)", {"x"});
  EXPECT_THROW(lg.eval(pt({1.0})), DomainError);
  auto sq = Expression::parse("sqrt(0 - x)", {"x"});
  EXPECT_THROW(sq.eval(pt({1.0})), DomainError);
  EXPECT_THROW(sq.eval_jet2(pt({1.0})), DomainError);
}

TEST(ExprParse, NonFinitePropagates) {
  auto e = Expression::parse("1/x", {"x"});
  EXPECT_TRUE(std::isinf(e.eval(pt({0.0}))));
  auto nn = Expression::parse("x/x", {"x"});
  EXPECT_TRUE(std::isnan(nn.eval(pt({0.0}))));
}

TEST(ExprParse, DimensionMismatch) {
  auto e = Expression::parse("x + y", {"x", "y"});
  EXPECT_THROW(e.eval(pt({1.0})), curvspec::Error);
  EXPECT_THROW(e.eval_jet2(pt({1.0, 2.0, 3.0})), curvspec::Error);
}

TEST(ExprParse, ParameterCapture) {
  std::map<std::string, double> params{{"a", 3.0}};
  auto e = Expression::parse("a^2*x", {"x"}, params);
  params["a"] = 100.0;  // must not affect the parsed expression
  EXPECT_NEAR(e.eval(pt({2.0})), 18.0, 1e-14);
  EXPECT_EQ(e.params().at("a"), 3.0);
}

//------------------------------------------------------------------------
// randomized properties
//------------------------------------------------------------------------

struct RandomExprGen {
  std::mt19937_64 rng;
  std::vector<std::string> coords;

  explicit RandomExprGen(unsigned long long seed) : rng(seed), coords({"x", "y", "z"}) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  int pick(int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

  std::string atom() {
    if (pick(2) == 0) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", uniform(0.5, 2.5));
      return buf;
    }
    return coords[static_cast<std::size_t>(pick(static_cast<int>(coords.size())))];
  }

  std::string gen(int depth) {
    if (depth <= 0) return atom();
    static const char* funcs[] = {"sin", "cos", "tan", "sinh", "cosh", "tanh", "exp"};
    switch (pick(8)) {
      case 0: return "(" + gen(depth - 1) + " + " + gen(depth - 1) + ")";
      case 1: return "(" + gen(depth - 1) + " - " + gen(depth - 1) + ")";
      case 2: return gen(depth - 1) + "*" + gen(depth - 1);
      case 3: return gen(depth - 1) + "/(" + gen(depth - 1) + " + 3)";
      case 4: return "-" + gen(depth - 1);
      case 5: return "(" + gen(depth - 1) + ")^" + (pick(2) == 0 ? "2" : "3");
      case 6:
      case 7: {
        const char* f = funcs[pick(7)];
        return std::string(f) + "(" + gen(depth - 1) + ")";
      }
    }
    return atom();
  }
};

// Finite differences of extended-precision values keep the h = 1e-5 stencils
// well above roundoff for both first and second derivatives.
bool fd_reference(const Expression& e, const Eigen::VectorXd& x,
                  Eigen::VectorXd& grad, Eigen::MatrixXd& hess) {
  const int n = static_cast<int>(x.size());
  const long double h = 1e-5L;
  std::vector<long double> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = x[i];
  auto f = [&](const std::vector<long double>& q) { return e.eval_ld(q); };
  grad.resize(n);
  hess.resize(n, n);
  long double f0 = f(p);
  if (!std::isfinite(static_cast<double>(f0))) return false;
  for (int k = 0; k < n; ++k) {
    auto pp = p, pm = p;
    pp[static_cast<std::size_t>(k)] += h;
    pm[static_cast<std::size_t>(k)] -= h;
    grad[k] = static_cast<double>((f(pp) - f(pm)) / (2.0L * h));
    hess(k, k) = static_cast<double>((f(pp) - 2.0L * f0 + f(pm)) / (h * h));
    for (int m = k + 1; m < n; ++m) {
      auto q1 = p, q2 = p, q3 = p, q4 = p;
      q1[static_cast<std::size_t>(k)] += h; q1[static_cast<std::size_t>(m)] += h;
      q2[static_cast<std::size_t>(k)] += h; q2[static_cast<std::size_t>(m)] -= h;
      q3[static_cast<std::size_t>(k)] -= h; q3[static_cast<std::size_t>(m)] += h;
      q4[static_cast<std::size_t>(k)] -= h; q4[static_cast<std::size_t>(m)] -= h;
      double v = static_cast<double>((f(q1) - f(q2) - f(q3) + f(q4)) / (4.0L * h * h));
      hess(k, m) = v;
      hess(m, k) = v;
    }
  }
  return grad.allFinite() && hess.allFinite();
}

TEST(ExprProperty, JetMatchesFiniteDifferences) {
  RandomExprGen gen(20240817);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::string text = gen.gen(1 + gen.pick(4));  // depth <= 5
    Expression e = Expression::parse(text, gen.coords);
    bool done = false;
    for (int attempt = 0; attempt < 10 && !done; ++attempt) {
      Eigen::VectorXd x(3);
      for (int i = 0; i < 3; ++i) x[i] = gen.uniform(0.4, 1.6);
      Jet2 jet;
      try {
        jet = e.eval_jet2(x);
      } catch (const DomainError&) {
        continue;
      }
      // the second-difference stencil amplifies value roundoff by 4*eps/h^2,
      // so bound the magnitudes to keep the reference itself below 1e-6
      double mag = std::max({std::fabs(jet.value), jet.grad.cwiseAbs().maxCoeff(),
                             jet.hess.cwiseAbs().maxCoeff()});
      if (!std::isfinite(mag) || mag > 100.0) continue;

      Eigen::VectorXd fd_grad;
      Eigen::MatrixXd fd_hess;
      if (!fd_reference(e, x, fd_grad, fd_hess)) continue;
      for (int k = 0; k < 3; ++k) {
        double ge = std::fabs(jet.grad[k] - fd_grad[k]) /
                    std::max(1.0, std::fabs(fd_grad[k]));
        ASSERT_LT(ge, 1e-6) << text << " grad[" << k << "]";
        for (int m = 0; m < 3; ++m) {
          double he = std::fabs(jet.hess(k, m) - fd_hess(k, m)) /
                      std::max(1.0, std::fabs(fd_hess(k, m)));
          ASSERT_LT(he, 1e-6) << text << " hess(" << k << "," << m << ")";
        }
      }
      ++checked;
      done = true;
    }
  }
  // nearly every random expression must actually get validated
  EXPECT_GT(checked, 900);
}

TEST(ExprProperty, SerializeRoundTrip) {
  RandomExprGen gen(99173);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text = gen.gen(1 + gen.pick(4));
    Expression e1 = Expression::parse(text, gen.coords);
    Expression e2 = Expression::parse(e1.str(), gen.coords);
    for (int s = 0; s < 3; ++s) {
      Eigen::VectorXd x(3);
      for (int i = 0; i < 3; ++i) x[i] = gen.uniform(0.4, 1.6);
      double v1, v2;
      try {
        v1 = e1.eval(x);
        v2 = e2.eval(x);
      } catch (const DomainError&) {
        continue;
      }
      if (!std::isfinite(v1)) continue;
      ASSERT_NEAR(v1, v2, 1e-12 * std::max(1.0, std::fabs(v1)))
          << text << "  ->  " << e1.str();
    }
  }
}

TEST(ExprProperty, SerializeSpecificShapes) {
  std::vector<std::string> cases = {
      "-(x + y)*z",      "x - (y - z)",   "(x + y)^2",     "x^(y + z)",
      "x^2^3",           "-x^2",          "1/(x*y)",       "x - -y",
      "sin(x)*cos(y)/tanh(z + 2)", "sqrt(x + 2)*log(y + 3)", "abs(0 - x)"};
  std::vector<std::string> coords = {"x", "y", "z"};
  Eigen::VectorXd x = pt({1.3, 0.7, 2.1});
  for (const auto& text : cases) {
    Expression e1 = Expression::parse(text, coords);
    Expression e2 = Expression::parse(e1.str(), coords);
    EXPECT_NEAR(e1.eval(x), e2.eval(x), 1e-13) << text << " -> " << e1.str();
  }
}

TEST(ExprProperty, ExtendedPrecisionAgrees) {
  std::vector<std::string> coords = {"x", "y"};
  auto e = Expression::parse("sin(x)*exp(y) + x^3/(y + 2)", coords);
  Eigen::VectorXd x = pt({0.83, 1.21});
  long double v = e.eval_ld({0.83L, 1.21L});
  EXPECT_NEAR(e.eval(x), static_cast<double>(v), 1e-13);
}

}  // namespace
