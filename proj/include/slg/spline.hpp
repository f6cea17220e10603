#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "slg/contour.hpp"

namespace slg {

/// Cardinal B-spline of degree d: the (d+1)-fold convolution of the
/// indicator of [0,1). Supported on [0, d+1].
double bspline(int d, double s);

/// nu_d = (int_0^{d+1} bspline(d, s)^2 ds)^{-1/2}.
double normalization(int d);

/// Indices j in [0, n) whose periodic support [j/n, (j+d+1)/n] does not
/// straddle a corner of the contour. Throws if n < q (d+1).
std::vector<int> basis_indices(const Contour& contour, int n, int d);

/// Splines of degree d on the uniform mesh 1/n of the parameter interval,
/// normalised to unit L2 norm in the parameter measure.
class SplineSpace {
 public:
  SplineSpace(Contour contour, int n, int d);

  const Contour& contour() const { return contour_; }
  int n() const { return n_; }
  int degree() const { return d_; }
  double nu() const { return nu_; }
  /// Admissible mesh indices; position in this vector is the coefficient slot.
  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }

  /// phi_{n,j}(gamma(s)) = nu_d sqrt(n) bspline(d, n s - j), periodic in s.
  double basis(int slot, double s) const;

  /// Slots whose basis function is nonzero on knot cell c (cell [c/n, (c+1)/n)).
  const std::vector<int>& slots_on_cell(int cell) const { return cell_slots_[cell]; }
  int cell_of(double s) const;

 private:
  Contour contour_;
  int n_;
  int d_;
  double nu_;
  std::vector<int> indices_;
  std::vector<std::vector<int>> cell_slots_;
};

using CoefficientVector = std::vector<std::complex<double>>;

/// sum_j a_j phi_{n,j}(gamma(s)).
std::complex<double> synth(const SplineSpace& space, std::span<const std::complex<double>> coeffs,
                           double s);

/// G_{jk} = int_0^1 phi_j(s) phi_k(s) ds (exact per-cell Gauss rule).
Eigen::MatrixXd gram(const SplineSpace& space);

}  // namespace slg
