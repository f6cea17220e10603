#include "slg/spline.hpp"

#include <cmath>
#include <stdexcept>

#include "slg/quadrature.hpp"

namespace slg {

double bspline(int d, double s) {
  if (d < 0) throw std::invalid_argument("bspline: negative degree");
  if (s < 0.0 || s >= d + 1.0) return 0.0;
  switch (d) {
    case 0:
      return 1.0;
    case 1:
      return s < 1.0 ? s : 2.0 - s;
    case 2:
      if (s < 1.0) return 0.5 * s * s;
      if (s < 2.0) return 0.5 * (-2.0 * s * s + 6.0 * s - 3.0);
      return 0.5 * (3.0 - s) * (3.0 - s);
    default:
      break;
  }
  // truncated-power form
  double sum = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= d + 1; ++k) {
    if (s > k) sum += ((k % 2) ? -binom : binom) * std::pow(s - k, d);
    binom = binom * (d + 1 - k) / (k + 1);
  }
  double fact = 1.0;
  for (int k = 2; k <= d; ++k) fact *= k;
  return sum / fact;
}

double normalization(int d) {
  switch (d) {
    case 0:
      return 1.0;
    case 1:
      return 1.0 / std::sqrt(2.0 / 3.0);
    case 2:
      return 1.0 / std::sqrt(11.0 / 20.0);
    default:
      // int B_d^2 equals the central value of B_{2d+1}
      return 1.0 / std::sqrt(bspline(2 * d + 1, d + 1.0));
  }
}

std::vector<int> basis_indices(const Contour& contour, int n, int d) {
  if (d < 0) throw std::invalid_argument("basis_indices: negative degree");
  const int q = contour.corner_count();
  if (n < d + 1 || n < q * (d + 1)) {
    throw std::invalid_argument("basis_indices: mesh too coarse for the corners of this contour");
  }
  std::vector<int> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    const double a = static_cast<double>(j) / n;
    const double b = static_cast<double>(j + d + 1) / n;
    if (!contour.corner_between(a, b)) out.push_back(j);
  }
  return out;
}

SplineSpace::SplineSpace(Contour contour, int n, int d)
    : contour_(std::move(contour)),
      n_(n),
      d_(d),
      nu_(normalization(d)),
      indices_(basis_indices(contour_, n, d)),
      cell_slots_(n) {
  for (int slot = 0; slot < size(); ++slot) {
    for (int k = 0; k <= d_; ++k) cell_slots_[(indices_[slot] + k) % n_].push_back(slot);
  }
}

double SplineSpace::basis(int slot, double s) const {
  double x = n_ * s - indices_[slot];
  x -= n_ * std::floor(x / n_);
  if (x >= d_ + 1.0) return 0.0;
  return nu_ * std::sqrt(static_cast<double>(n_)) * bspline(d_, x);
}

int SplineSpace::cell_of(double s) const {
  const int c = static_cast<int>(std::floor(wrap01(s) * n_));
  return c >= n_ ? n_ - 1 : c;
}

std::complex<double> synth(const SplineSpace& space, std::span<const std::complex<double>> coeffs,
                           double s) {
  if (static_cast<int>(coeffs.size()) != space.size()) {
    throw std::invalid_argument("synth: coefficient vector does not match the spline space");
  }
  std::complex<double> sum{};
  for (int slot : space.slots_on_cell(space.cell_of(s))) sum += coeffs[slot] * space.basis(slot, s);
  return sum;
}

Eigen::MatrixXd gram(const SplineSpace& space) {
  const int n = space.n();
  const QuadRule base = gauss_legendre(space.degree() + 2);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(space.size(), space.size());
  for (int c = 0; c < n; ++c) {
    const QuadRule cell = map_rule(base, static_cast<double>(c) / n, static_cast<double>(c + 1) / n);
    const auto& slots = space.slots_on_cell(c);
    for (std::size_t k = 0; k < cell.size(); ++k) {
      for (int a : slots) {
        const double va = space.basis(a, cell.nodes[k]);
        for (int b : slots) g(a, b) += cell.weights[k] * va * space.basis(b, cell.nodes[k]);
      }
    }
  }
  return g;
}

}  // namespace slg
