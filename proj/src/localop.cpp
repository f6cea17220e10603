#include "slg/localop.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "slg/galerkin.hpp"
#include "slg/parallel.hpp"
#include "slg/quadrature.hpp"
#include "slg/spline.hpp"

namespace slg {

namespace {

constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;

// sin(pi) is not exactly zero in floating point; the kernels must vanish there.
double sine(double theta) { return theta == pi ? 0.0 : std::sin(theta); }

// Gauss nodes on [0,1] with spline values on every unit cell of [0, d+1].
struct EntryTables {
  int d;
  std::vector<double> x, w;            // regular cell rule
  std::vector<std::vector<double>> phi;  // phi[a][i] = B_d(a + x_i)
  std::vector<double> hx, hw;          // Duffy rule
  std::vector<double> phi_r;           // B_d(r_i)
  std::vector<std::vector<double>> phi_rv;  // B_d(r_i v_k)

  EntryTables(int degree, const EntryQuadrature& quad) : d(degree) {
    const QuadRule g = map_rule(gauss_legendre(quad.cell_order), 0.0, 1.0);
    x = g.nodes;
    w = g.weights;
    phi.assign(d + 1, std::vector<double>(x.size()));
    for (int a = 0; a <= d; ++a)
      for (std::size_t i = 0; i < x.size(); ++i) phi[a][i] = bspline(d, a + x[i]);
    const QuadRule h = map_rule(gauss_legendre(quad.duffy_order), 0.0, 1.0);
    hx = h.nodes;
    hw = h.weights;
    phi_r.resize(hx.size());
    phi_rv.assign(hx.size(), std::vector<double>(hx.size()));
    for (std::size_t i = 0; i < hx.size(); ++i) {
      phi_r[i] = bspline(d, hx[i]);
      for (std::size_t k = 0; k < hx.size(); ++k) phi_rv[i][k] = bspline(d, hx[i] * hx[k]);
    }
  }
};

cplx entry_impl(const MellinKernel& kernel, int q, int l, const EntryTables& tab) {
  const int d = tab.d;
  cplx sum{};
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; b <= d; ++b) {
      if (q == 0 && l == 0 && a == 0 && b == 0) {
        // integrand ~ 1/r at the origin: Duffy split along t = u
        for (std::size_t i = 0; i < tab.hx.size(); ++i) {
          for (std::size_t k = 0; k < tab.hx.size(); ++k) {
            const double v = tab.hx[k];
            const double wpp = tab.hw[i] * tab.hw[k] * tab.phi_rv[i][k] * tab.phi_r[i];
            // t = r v <= u = r   and   u = r v <= t = r
            sum += wpp * (kernel(v) + kernel.reflected(v));
          }
        }
        continue;
      }
      for (std::size_t i = 0; i < tab.x.size(); ++i) {
        const double t = a + tab.x[i] + q;
        const double wt = tab.w[i] * tab.phi[a][i];
        if (wt == 0.0) continue;
        cplx inner{};
        for (std::size_t k = 0; k < tab.x.size(); ++k) {
          const double u = b + tab.x[k] + l;
          inner += (tab.w[k] * tab.phi[b][k] / u) * kernel(t / u);
        }
        sum += wt * inner;
      }
    }
  }
  const double nu = normalization(d);
  return nu * nu * sum;
}

}  // namespace

MellinKernel::MellinKernel(Kind kind, double theta)
    : kind_(kind), theta_(theta), sin_(sine(theta)), rot_(std::polar(1.0, theta)) {}

double kernel_n(double theta, double u) {
  if (u < 0.0) throw std::domain_error("kernel_n: negative argument");
  const double den = 1.0 - 2.0 * u * std::cos(theta) + u * u;
  if (den == 0.0) throw std::domain_error("kernel_n: pole at u = 1, theta = 0");
  return u * sine(theta) / (2.0 * pi * den);
}

cplx kernel_m(double theta, double u) {
  if (u < 0.0) throw std::domain_error("kernel_m: negative argument");
  const cplx den = 1.0 - u * std::polar(1.0, theta);
  if (den == 0.0) throw std::domain_error("kernel_m: pole at u = 1, theta = 0");
  return u * sine(theta) / (pi * den * den);
}

cplx entry(const MellinKernel& kernel, int d, int q, int l, const EntryQuadrature& quad) {
  if (q < 0 || l < 0) throw std::invalid_argument("entry: negative index");
  if (kernel.vanishes()) return {};
  return entry_impl(kernel, q, l, EntryTables(d, quad));
}

Eigen::MatrixXcd mellin_matrix(const MellinKernel& kernel, int d, int N, const EntryQuadrature& quad) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(N, N);
  if (kernel.vanishes()) return a;
  const EntryTables tab(d, quad);
  parallel_for(static_cast<std::size_t>(N), 0, [&](std::size_t q) {
    for (int l = 0; l < N; ++l) a(static_cast<int>(q), l) = entry_impl(kernel, static_cast<int>(q), l, tab);
  });
  return a;
}

Eigen::MatrixXd half_line_gram(int d, int N) {
  const QuadRule g = map_rule(gauss_legendre(d + 2), 0.0, 1.0);
  const double nu = normalization(d);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(N, N);
  for (int k = 0; k <= d && k < N; ++k) {
    double v = 0.0;
    for (int c = k; c <= d; ++c)
      for (std::size_t i = 0; i < g.size(); ++i) v += g.weights[i] * bspline(d, c + g.nodes[i]) * bspline(d, c - k + g.nodes[i]);
    v *= nu * nu;
    for (int q = 0; q + k < N; ++q) gram(q, q + k) = gram(q + k, q) = v;
  }
  return gram;
}

Eigen::MatrixXcd operator_matrix(const MellinKernel& kernel, int d, int N, const EntryQuadrature& quad) {
  const Eigen::MatrixXcd a = mellin_matrix(kernel, d, N, quad);
  if (d == 0 || kernel.vanishes()) return a;
  return half_line_gram(d, N).cast<cplx>().llt().solve(a);
}

LocalOperatorMatrix assemble_R(double theta, double beta, int d, int N, PhaseConvention phases,
                               const EntryQuadrature& quad) {
  if (!(theta > 0.0 && theta < 2.0 * pi)) throw std::domain_error("assemble_R: theta outside (0, 2pi)");
  if (N < 1) throw std::invalid_argument("assemble_R: empty truncation");

  using K = MellinKernel::Kind;
  const Eigen::MatrixXcd an = operator_matrix({K::N, theta}, d, N, quad);
  const Eigen::MatrixXcd am = operator_matrix({K::M, theta}, d, N, quad);
  // m_{2pi - theta} = -conj(m_theta) pointwise
  const Eigen::MatrixXcd am_reflected = -am.conjugate();

  const cplx i{0.0, 1.0};
  cplx p1, p2;
  if (phases == PhaseConvention::single_angle) {
    p1 = std::exp(i * beta);
    p2 = -std::exp(-i * (beta + theta));
  } else {
    p1 = std::exp(2.0 * i * beta);
    p2 = -std::exp(2.0 * i * (beta + theta));
  }
  const Eigen::MatrixXcd c12 = p1 * am_reflected;
  const Eigen::MatrixXcd c21 = p2 * am;

  LocalOperatorMatrix out{theta, beta, d, N, Eigen::MatrixXd::Identity(4 * N, 4 * N)};
  auto& R = out.matrix;
  // linear block L acting on x:        [[Re L, -Im L], [Im L, Re L]]
  // conjugating block C acting on x:   [[Re C,  Im C], [Im C, -Re C]]
  auto put_linear = [&](int row, int col, const Eigen::MatrixXcd& L) {
    R.block(row, col, N, N) += L.real();
    R.block(row, col + N, N, N) -= L.imag();
    R.block(row + N, col, N, N) += L.imag();
    R.block(row + N, col + N, N, N) += L.real();
  };
  auto put_conj = [&](int row, int col, const Eigen::MatrixXcd& C) {
    R.block(row, col, N, N) += C.real();
    R.block(row, col + N, N, N) += C.imag();
    R.block(row + N, col, N, N) += C.imag();
    R.block(row + N, col + N, N, N) -= C.real();
  };
  put_linear(0, 2 * N, an);
  put_linear(2 * N, 0, an);
  put_conj(0, 2 * N, c12);
  put_conj(2 * N, 0, c21);
  return out;
}

double local_cond(double theta, double beta, int d, int N, PhaseConvention phases,
                  const EntryQuadrature& quad) {
  return condition_number(assemble_R(theta, beta, d, N, phases, quad).matrix);
}

}  // namespace slg
