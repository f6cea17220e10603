#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "slg/galerkin.hpp"

using namespace slg;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

BoundaryFunction f1 = [](double, cplx z) { return rhs_f1(z); };
BoundaryFunction f2 = [](double, cplx z) { return rhs_f2(z); };

GalerkinSolution solve_plain(const Contour& c, int n, const BoundaryFunction& f) {
  GalerkinOptions o;
  o.kind = OperatorKind::plain;
  const SplineSpace sp(c, n, 0);
  return solve(sp, assemble(sp, f, o), SolveOptions{.compute_cond = false});
}

}  // namespace

TEST_CASE("identity hook: boxes give the identity") {
  GalerkinOptions o;
  o.kind = OperatorKind::identity;
  const SplineSpace sp(Contour(UnitSquare{}), 32, 0);
  const RealBlockSystem sys = assemble(sp, f1, o);
  CHECK(sys.N == 32);
  CHECK((sys.matrix - Eigen::MatrixXd::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("identity hook: hats give the Gram matrix on both diagonal blocks") {
  GalerkinOptions o;
  o.kind = OperatorKind::identity;
  const SplineSpace sp(Contour(Rhombus{pi / 3}), 32, 1);
  const RealBlockSystem sys = assemble(sp, f1, o);
  const Eigen::MatrixXd g = gram(sp);
  const int N = sp.size();
  CHECK((sys.matrix.topLeftCorner(N, N) - g).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((sys.matrix.bottomRightCorner(N, N) - g).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(sys.matrix.topRightCorner(N, N).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(sys.matrix.bottomLeftCorner(N, N).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("identity hook solve returns the inner products of f") {
  GalerkinOptions o;
  o.kind = OperatorKind::identity;
  const SplineSpace sp(Contour(UnitSquare{}), 16, 0);
  const GalerkinSolution sol = solve(sp, assemble(sp, f1, o));
  const QuadRule base = gauss_legendre(24);
  for (int k = 0; k < sp.size(); ++k) {
    const int j = sp.indices()[k];
    const QuadRule r = map_rule(base, j / 16.0, (j + 1) / 16.0);
    const cplx expected = integrate(r, [&](double s) {
      return sp.basis(k, s) * rhs_f1(sp.contour().eval(s, Side::right).z);
    });
    CHECK(std::abs(sol.coeffs[k] - expected) < 1e-13);
  }
}

TEST_CASE("real-block encoding: multiplying f by i rotates the right-hand side") {
  const SplineSpace sp(Contour(Rhombus{pi / 3}), 32, 1);
  BoundaryFunction if1 = [](double, cplx z) { return I * rhs_f1(z); };
  GalerkinOptions o;
  o.kind = OperatorKind::identity;
  const RealBlockSystem a = assemble(sp, f1, o), b = assemble(sp, if1, o);
  const int N = sp.size();
  CHECK((b.rhs.head(N) + a.rhs.tail(N)).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((b.rhs.tail(N) - a.rhs.head(N)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("real-block encoding matches apply_B on a basis function") {
  // row a of the system applied to e_b reproduces (B phi_b, phi_a)
  const Contour sq(UnitSquare{});
  const SplineSpace sp(sq, 16, 0);
  const RealBlockSystem sys = assemble(sp, f1);
  const ShermanLauricella op(sq);
  const int N = sp.size();
  for (cplx coeff : {cplx(1.0, 0.0), cplx(0.0, 1.0)}) {
    const int b = 5;
    CoefficientVector x(N);
    x[b] = coeff;
    Eigen::VectorXd xr = Eigen::VectorXd::Zero(2 * N);
    xr(b) = coeff.real();
    xr(N + b) = coeff.imag();
    const Eigen::VectorXd y = sys.matrix * xr;
    for (int a : {2, 5, 11}) {
      const int j = sp.indices()[a];
      const QuadRule r = map_rule(gauss_legendre(24), j / 16.0, (j + 1) / 16.0);
      const cplx expected = integrate(r, [&](double s) { return sp.basis(a, s) * apply_B(sp, x, s, op); });
      CHECK(std::abs(cplx(y(a), y(N + a)) - expected) < 1e-10);
    }
  }
}

TEST_CASE("solve: random SPD system") {
  const SplineSpace sp(Contour(UnitSquare{}), 32, 0);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  RealBlockSystem sys;
  sys.N = 32;
  Eigen::MatrixXd q(64, 64);
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) q(i, j) = g(rng);
  sys.matrix = q * q.transpose() + 64.0 * Eigen::MatrixXd::Identity(64, 64);
  sys.rhs = Eigen::VectorXd::NullaryExpr(64, [&] { return g(rng); });
  const GalerkinSolution sol = solve(sp, sys);
  CHECK(sol.residual < 1e-12);
  CHECK(sol.cond >= 1.0);
}

TEST_CASE("solve: singular systems are reported with their condition number") {
  const SplineSpace sp(Contour(UnitSquare{}), 8, 0);
  RealBlockSystem sys;
  sys.N = 8;
  sys.matrix = Eigen::MatrixXd::Identity(16, 16);
  sys.matrix(3, 3) = 0.0;
  sys.rhs = Eigen::VectorXd::Ones(16);
  CHECK_THROWS_AS(solve(sp, sys), SingularSystem);
  try {
    solve(sp, sys, SolveOptions{.compute_cond = false});
    FAIL("expected SingularSystem");
  } catch (const SingularSystem& e) {
    CHECK(e.cond() > 1e13);
  }
  RealBlockSystem wrong = sys;
  wrong.N = 7;
  CHECK_THROWS_AS(solve(sp, wrong), std::invalid_argument);
}

TEST_CASE("condition_number: SVD and LU estimate agree on a diagonal matrix") {
  Eigen::VectorXd diag = Eigen::VectorXd::LinSpaced(2050, 1.0, 50.0);
  const Eigen::MatrixXd big = diag.asDiagonal();
  CHECK(condition_number(big) == Approx(50.0).epsilon(1e-12));
  const Eigen::MatrixXd small = diag.head(100).asDiagonal();
  CHECK(condition_number(small) == Approx(diag(99)).epsilon(1e-12));
}

TEST_CASE("square, n=128, d=0, f1: solvable with frozen condition number") {
  const SplineSpace sp(Contour(UnitSquare{}), 128, 0);
  const GalerkinSolution sol = solve(sp, assemble(sp, f1));
  CHECK(sol.residual < 1e-10);
  CHECK(sol.cond == Approx(48.3918).epsilon(1e-4));
}

TEST_CASE("square density is four-fold symmetric with its extremes at corners and mid-sides") {
  const SplineSpace sp(Contour(UnitSquare{}), 128, 0);
  const GalerkinSolution sol = solve(sp, assemble(sp, f1));
  const CompositeRule rule = composite_rule(128, 4);
  double lo = 1e300, lo_s = 0.0, hi = 0.0, hi_s = 0.0;
  for (double s : rule.nodes) {
    const double v = std::abs(synth(sp, sol.coeffs, s));
    if (v < lo) lo = v, lo_s = s;
    if (v > hi) hi = v, hi_s = s;
    for (int k = 1; k < 4; ++k) CHECK(std::abs(std::abs(synth(sp, sol.coeffs, s + 0.25 * k)) - v) < 1e-10);
    // mirror symmetry of each side about its midpoint
    CHECK(std::abs(std::abs(synth(sp, sol.coeffs, 0.25 - s)) - v) < 1e-10);
  }
  auto to_corner = [](double s) { return std::abs(s * 4.0 - std::round(s * 4.0)) / 4.0; };
  CHECK(to_corner(lo_s) < 1.0 / 128);
  CHECK(to_corner(hi_s) > 0.125 - 2.0 / 128);
  // frozen regression values of |omega_128|
  CHECK(lo == Approx(0.736009).epsilon(1e-5));
  CHECK(hi == Approx(0.783434).epsilon(1e-5));
}

TEST_CASE("relative_error: identical functions and mismatched inputs") {
  const Contour sq(UnitSquare{});
  const GalerkinSolution coarse = solve_plain(sq, 32, f1);
  const SplineSpace fine_space(sq, 64, 0);
  CoefficientVector b(fine_space.size());
  for (int k = 0; k < 32; ++k) b[2 * k] = b[2 * k + 1] = coarse.coeffs[k] / std::sqrt(2.0);
  const GalerkinSolution fine{fine_space, b};
  CHECK(relative_error(coarse, fine) < 1e-14);

  const GalerkinSolution other = solve_plain(Contour(Rhombus{pi / 3}), 64, f1);
  CHECK_THROWS_AS(relative_error(coarse, other), std::invalid_argument);
  CHECK_THROWS_AS(relative_error(coarse, solve_plain(sq, 128, f1)), std::invalid_argument);
}

TEST_CASE("relative errors match the published values") {
  const Contour sq(UnitSquare{});
  const GalerkinSolution s128 = solve_plain(sq, 128, f1), s256 = solve_plain(sq, 256, f1);
  const GalerkinSolution s512 = solve_plain(sq, 512, f1);
  const double e128 = relative_error(s128, s256), e256 = relative_error(s256, s512);
  CHECK(e128 == Approx(0.0373).epsilon(0.05));
  CHECK(e256 == Approx(0.0198).epsilon(0.05));
  CHECK(e256 < e128);

  const Contour r3(Rhombus{pi / 3});
  const double e = relative_error(solve_plain(r3, 256, f2), solve_plain(r3, 512, f2));
  CHECK(e == Approx(0.0112).epsilon(0.05));
}

TEST_CASE("density CSV") {
  const SplineSpace sp(Contour(UnitSquare{}), 16, 0);
  const GalerkinSolution sol = solve(sp, assemble(sp, f1));
  std::ostringstream out;
  write_density_csv(out, sol, composite_rule(2, 2));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "s,re_omega,im_omega,abs_omega");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);
}
