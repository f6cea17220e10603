#include "slg/galerkin.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>

#include "slg/parallel.hpp"

namespace slg {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

struct OuterCell {
  std::vector<double> s;
  std::vector<double> w;
  std::vector<ContourPoint> pts;
};

struct InnerEntry {
  int slot;
  double value;
};

/// 1-norm condition estimate from an LU factorization. rcond() alone is not
/// reliable for exactly singular factors, so the pivot spread is a floor.
double lu_condition(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu) {
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double pmin = pivots.minCoeff(), pmax = pivots.maxCoeff();
  if (!(pmin > 0.0) || !std::isfinite(pmax)) return std::numeric_limits<double>::infinity();
  const double rc = lu.rcond();
  const double estimate = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
  return std::max(estimate, pmax / pmin);
}

}  // namespace

RealBlockSystem assemble(const SplineSpace& space, const BoundaryFunction& f,
                         const GalerkinOptions& options) {
  const Contour& contour = space.contour();
  const int n = space.n();
  const int N = space.size();
  const bool integral_part = options.kind != OperatorKind::identity;

  std::optional<ShermanLauricella> op;
  if (integral_part) {
    ShermanLauricella::Options o;
    o.inner = options.inner;
    o.orientation = options.orientation;
    o.with_correction = options.kind == OperatorKind::corrected;
    op.emplace(contour, options.correction, o);
  }

  // outer rule: outer_order Gauss points on every knot cell
  const QuadRule base = gauss_legendre(options.outer_order);
  std::vector<OuterCell> cells(n);
  for (int c = 0; c < n; ++c) {
    const QuadRule r = map_rule(base, static_cast<double>(c) / n, static_cast<double>(c + 1) / n);
    cells[c].s = r.nodes;
    cells[c].w = r.weights;
    for (double s : r.nodes) cells[c].pts.push_back(contour.eval(s, Side::right));
  }

  // inner rule: basis values and correction moments
  const std::size_t P = integral_part ? op->inner_size() : 0;
  std::vector<std::vector<InnerEntry>> inner_basis(P);
  std::vector<cplx> moments(N);
  if (integral_part) {
    for (std::size_t p = 0; p < P; ++p) {
      const double s = op->inner_node(p);
      for (int slot : space.slots_on_cell(space.cell_of(s))) {
        const double v = space.basis(slot, s);
        if (v != 0.0) inner_basis[p].push_back({slot, v});
      }
    }
    if (options.kind == OperatorKind::corrected) {
      for (std::size_t p = 0; p < P; ++p) {
        const ContourPoint& g = op->inner_point(p);
        const cplx d = g.z - op->correction().a;
        const cplx base_moment = op->inner_weight(p) * g.d1 / (d * d);
        for (const auto& e : inner_basis[p]) moments[e.slot] += e.value * base_moment;
      }
    }
  }

  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  Eigen::MatrixXcd Nc = Eigen::MatrixXcd::Zero(N, N);
  Eigen::VectorXcd F = Eigen::VectorXcd::Zero(N);

  parallel_for(static_cast<std::size_t>(N), options.threads, [&](std::size_t row) {
    const int a = static_cast<int>(row);
    const int j = space.indices()[a];
    std::vector<cplx> uL(P), uK(P);
    cplx tfactor{};
    cplx rhs{};

    for (int k = 0; k <= space.degree(); ++k) {
      const int c = (j + k) % n;
      const OuterCell& cell = cells[c];
      for (std::size_t i = 0; i < cell.s.size(); ++i) {
        const double sigma = cell.s[i];
        const double wa = cell.w[i] * space.basis(a, sigma);
        if (wa == 0.0) continue;
        const ContourPoint& t = cell.pts[i];
        rhs += wa * f(sigma, t.z);
        for (int b : space.slots_on_cell(c)) M(a, b) += wa * space.basis(b, sigma);
        if (!integral_part) continue;
        if (options.kind == OperatorKind::corrected) tfactor += wa * op->correction_factor(t.z);

        std::optional<ContourPoint> t_smooth;
        for (std::size_t p = 0; p < P; ++p) {
          const bool diag = near_diagonal(contour, op->inner_node(p), sigma);
          const ContourPoint* tp = &t;
          if (diag) {
            if (!t_smooth) t_smooth = contour.eval(sigma, Side::two_sided);
            tp = &*t_smooth;
          }
          uL[p] += wa * kernel_L(op->inner_point(p), *tp, diag);
          uK[p] += wa * kernel_K(op->inner_point(p), *tp, diag, options.orientation);
        }
      }
    }
    F(a) = rhs;
    if (!integral_part) return;

    const cplx scale = 1.0 / (2.0 * pi * I);
    for (std::size_t p = 0; p < P; ++p) {
      const double wp = op->inner_weight(p);
      const cplx l = scale * wp * uL[p];
      const cplx kk = -scale * wp * uK[p];
      for (const auto& e : inner_basis[p]) {
        M(a, e.slot) += l * e.value;
        Nc(a, e.slot) += kk * e.value;
      }
    }
    if (options.kind == OperatorKind::corrected) {
      for (int b = 0; b < N; ++b) {
        M(a, b) += tfactor * moments[b];
        Nc(a, b) += tfactor * std::conj(moments[b]);
      }
    }
  });

  RealBlockSystem sys;
  sys.N = N;
  sys.matrix.resize(2 * N, 2 * N);
  sys.matrix.topLeftCorner(N, N) = M.real() + Nc.real();
  sys.matrix.topRightCorner(N, N) = -M.imag() + Nc.imag();
  sys.matrix.bottomLeftCorner(N, N) = M.imag() + Nc.imag();
  sys.matrix.bottomRightCorner(N, N) = M.real() - Nc.real();
  sys.rhs.resize(2 * N);
  sys.rhs.head(N) = F.real();
  sys.rhs.tail(N) = F.imag();
  return sys;
}

double condition_number(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() <= 2048) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(matrix);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
  }
  return lu_condition(Eigen::PartialPivLU<Eigen::MatrixXd>(matrix));
}

GalerkinSolution solve(const SplineSpace& space, const RealBlockSystem& system,
                       const SolveOptions& options) {
  if (system.N != space.size() || system.matrix.rows() != 2 * system.N) {
    throw std::invalid_argument("solve: system does not match the spline space");
  }
  double cond = 0.0;
  if (options.compute_cond) {
    cond = condition_number(system.matrix);
    if (!(cond < options.singular_cond)) {
      throw SingularSystem("solve: Galerkin matrix is numerically singular", cond);
    }
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.matrix);
  if (!options.compute_cond) {
    const double estimate = lu_condition(lu);
    if (!(estimate < options.singular_cond)) {
      throw SingularSystem("solve: Galerkin matrix is numerically singular", estimate);
    }
  }
  const Eigen::VectorXd x = lu.solve(system.rhs);
  const double bnorm = system.rhs.norm();
  const double residual = (system.matrix * x - system.rhs).norm() / (bnorm > 0.0 ? bnorm : 1.0);

  GalerkinSolution sol{space, CoefficientVector(system.N), cond, residual};
  for (int k = 0; k < system.N; ++k) sol.coeffs[k] = {x(k), x(system.N + k)};
  return sol;
}

double relative_error(const GalerkinSolution& coarse, const GalerkinSolution& fine,
                      const CompositeRule& rule) {
  const auto* cs = coarse.space.contour().spec();
  const auto* fs = fine.space.contour().spec();
  if (!cs || !fs || describe(*cs) != describe(*fs) ||
      coarse.space.degree() != fine.space.degree() || fine.space.n() != 2 * coarse.space.n()) {
    throw std::invalid_argument("relative_error: solutions must share contour and degree with n -> 2n");
  }
  double diff = 0.0, norm = 0.0;
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const double s = rule.nodes[p];
    const double w = rule.weights[p] * std::abs(fine.space.contour().eval(s, Side::right).d1);
    const cplx wf = synth(fine.space, fine.coeffs, s);
    const cplx wc = synth(coarse.space, coarse.coeffs, s);
    diff += w * std::norm(wf - wc);
    norm += w * std::norm(wf);
  }
  return std::sqrt(diff / norm);
}

void write_density_csv(std::ostream& out, const GalerkinSolution& sol, const CompositeRule& rule) {
  out << "s,re_omega,im_omega,abs_omega\n";
  out << std::setprecision(17);
  for (double s : rule.nodes) {
    const cplx w = synth(sol.space, sol.coeffs, s);
    out << s << ',' << w.real() << ',' << w.imag() << ',' << std::abs(w) << '\n';
  }
}

}  // namespace slg
